"""Stochastic block model experiment models."""

from dataclasses import dataclass, replace

import numpy as np


@dataclass(frozen=True)
class SbmConfig:
    """Block sizes, link-probability matrix and seed for one SBM draw."""

    block_sizes: tuple[int, ...]
    link_probs: tuple[tuple[float, ...], ...]
    seed: int = 0
    config_id: str = "sbm"
    in_prob: float | None = None
    out_prob: float | None = None
    split: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "block_sizes", tuple(int(s) for s in self.block_sizes))
        object.__setattr__(
            self, "link_probs", tuple(tuple(float(p) for p in row) for row in self.link_probs)
        )

    @classmethod
    def two_block(
        cls,
        sizes: tuple[int, int],
        in_prob: float,
        out_prob: float,
        seed: int = 0,
        config_id: str = "sbm",
        split: float | None = None,
    ) -> "SbmConfig":
        """Two blocks sharing one in-group probability and one between-group probability."""
        return cls(
            block_sizes=sizes,
            link_probs=((in_prob, out_prob), (out_prob, in_prob)),
            seed=seed,
            config_id=config_id,
            in_prob=in_prob,
            out_prob=out_prob,
            split=split,
        )

    @property
    def n_nodes(self) -> int:
        return sum(self.block_sizes)

    @property
    def prob_matrix(self) -> np.ndarray:
        return np.asarray(self.link_probs, dtype=float)

    def block_of(self) -> np.ndarray:
        """Block index of every node, nodes numbered block by block."""
        return np.repeat(np.arange(len(self.block_sizes)), self.block_sizes)

    def with_seed(self, seed: int) -> "SbmConfig":
        return replace(self, seed=seed)


@dataclass(frozen=True)
class ExperimentGrid:
    """Configurations analysed with a shared K and replicate count."""

    configs: tuple[SbmConfig, ...]
    replicates_per_config: int
    k_for_elbow: int

    @property
    def n_rows(self) -> int:
        return len(self.configs) * self.replicates_per_config


@dataclass(frozen=True)
class ExperimentResult:
    """
    One row of an experiment table: a single (config, replicate) analysis.

    ``entropy`` is None when the sampled graph has no edges.
    """

    config_id: str
    replicate: int
    d_hat: int
    entropy: float | None
    gc_fraction: float
    in_prob: float | None = None
    out_prob: float | None = None
    split: float | None = None

    def row(self) -> dict[str, object]:
        """Table row in ``RESULT_COLUMNS`` order."""
        return {
            "config_id": self.config_id,
            "in_prob": self.in_prob,
            "out_prob": self.out_prob,
            "split": self.split,
            "replicate": self.replicate,
            "d_hat": self.d_hat,
            "entropy": self.entropy,
            "gc_fraction": self.gc_fraction,
        }


RESULT_COLUMNS: list[str] = [
    "config_id",
    "in_prob",
    "out_prob",
    "split",
    "replicate",
    "d_hat",
    "entropy",
    "gc_fraction",
]

