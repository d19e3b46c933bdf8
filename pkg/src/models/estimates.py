"""Estimator outputs: embedding dimension, SVD entropy, polarisation verdicts."""

from dataclasses import dataclass, field
from enum import Enum


@dataclass(frozen=True)
class DimensionEstimate:
    """
    Elbow-method estimate of the embedding dimension.

    ``profile_loglik[d - 1]`` is the profile log-likelihood for candidate d,
    d = 1..K-1. Estimates restored from reported tables carry an empty
    profile.
    """

    d_hat: int
    profile_loglik: tuple[float, ...]
    k_used: int

    def __post_init__(self):
        if not 1 <= self.d_hat <= max(self.k_used - 1, 1):
            raise ValueError(f"d_hat={self.d_hat} outside [1, {self.k_used - 1}]")
        if self.profile_loglik and len(self.profile_loglik) != self.k_used - 1:
            raise ValueError(
                f"profile has {len(self.profile_loglik)} entries, expected {self.k_used - 1}"
            )

    @classmethod
    def reported(cls, d_hat: int, k_used: int) -> "DimensionEstimate":
        """An estimate known only by its value, e.g. read from a table."""
        return cls(d_hat=d_hat, profile_loglik=(), k_used=k_used)

    def loglik_at(self, d: int) -> float:
        return self.profile_loglik[d - 1]


@dataclass(frozen=True)
class EntropyReport:
    """Pielou-normalised SVD entropy over the K values supplied."""

    entropy: float
    normaliser: float
    k_used: int

    def __post_init__(self):
        if not 0.0 <= self.entropy <= 1.0:
            raise ValueError(f"entropy {self.entropy} outside [0, 1]")
        if self.normaliser < 0:
            raise ValueError("normaliser must be nonnegative")

    @classmethod
    def reported(cls, entropy: float, k_used: int) -> "EntropyReport":
        """An entropy known only by its value; the normaliser is unknown (NaN)."""
        return cls(entropy=entropy, normaliser=float("nan"), k_used=k_used)


class Verdict(str, Enum):
    POLARISING = "polarising"
    STABLE = "stable"
    DEPOLARISING = "depolarising"


@dataclass(frozen=True)
class WindowMeasurement:
    """One time window's estimates, as fed to ``compare_windows``."""

    label: str
    dimension: DimensionEstimate
    entropy: EntropyReport | None = None


@dataclass(frozen=True)
class WindowStep:
    """Change between two consecutive windows."""

    from_label: str
    to_label: str
    delta_d: int
    delta_entropy: float | None
    polarising: bool


@dataclass(frozen=True)
class PolarisationVerdict:
    """Pairwise deltas plus an overall verdict from the first to the last window."""

    labels: tuple[str, ...]
    d_hats: tuple[int, ...]
    entropies: tuple[float | None, ...]
    k_used: int
    steps: tuple[WindowStep, ...] = field(default_factory=tuple)

    @property
    def net_delta_d(self) -> int:
        return self.d_hats[-1] - self.d_hats[0]

    @property
    def verdict(self) -> Verdict:
        if self.net_delta_d < 0:
            return Verdict.POLARISING
        if self.net_delta_d > 0:
            return Verdict.DEPOLARISING
        return Verdict.STABLE

    @property
    def monotone(self) -> bool:
        """True when every step moves d̂ in the direction of the net change (or not at all)."""
        sign = (self.net_delta_d > 0) - (self.net_delta_d < 0)
        if sign == 0:
            return all(step.delta_d == 0 for step in self.steps)
        return all(step.delta_d * sign >= 0 for step in self.steps)
