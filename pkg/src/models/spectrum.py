"""Singular spectrum models."""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


@dataclass(frozen=True)
class SingularSpectrum:
    """Descending nonnegative singular values plus truncation metadata."""

    values: tuple[float, ...]
    k_requested: int
    n_nodes: int
    converged: bool = True

    def __post_init__(self):
        vals = self.values
        if any(v < 0 for v in vals):
            raise ValueError("singular values must be nonnegative")
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError("singular values must be sorted in descending order")
        if len(vals) > min(self.k_requested, self.n_nodes):
            raise ValueError(
                f"{len(vals)} values exceed min(k={self.k_requested}, n={self.n_nodes})"
            )

    @classmethod
    def from_values(
        cls,
        values,
        k_requested: int | None = None,
        n_nodes: int | None = None,
        converged: bool = True,
    ) -> "SingularSpectrum":
        """Build from any iterable of values, sorting and clipping round-off negatives."""
        arr = np.clip(np.asarray(values, dtype=float), 0.0, None)
        arr = np.sort(arr)[::-1]
        k = len(arr) if k_requested is None else k_requested
        n = len(arr) if n_nodes is None else n_nodes
        return cls(tuple(arr.tolist()), k_requested=k, n_nodes=n, converged=converged)

    @property
    def k(self) -> int:
        """K: number of values held."""
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def truncate(self, k: int) -> "SingularSpectrum":
        """Keep the ``k`` largest values."""
        return SingularSpectrum(
            self.values[:k],
            k_requested=min(k, self.k_requested),
            n_nodes=self.n_nodes,
            converged=self.converged,
        )

    def scaled(self, factor: float) -> "SingularSpectrum":
        return SingularSpectrum.from_values(
            self.as_array() * factor, self.k_requested, self.n_nodes, self.converged
        )


class SvdFactors(NamedTuple):
    """Truncated factors: A ≈ left · diag(values) · rightᵀ."""

    left: np.ndarray
    values: np.ndarray
    right: np.ndarray
