"""RDPG embedding model."""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from src.models.graph import SparseAdjacency


@dataclass(frozen=True, eq=False)
class RdpgEmbedding:
    """
    Left and right latent positions of a d-dimensional RDPG embedding.

    ``left_positions`` is n × d (L̂ = U|_d √Σ); ``right_positions`` is
    d × n (R̂ = √Σ (V|_d)ᵀ). Row i of L̂ and column j of R̂ are the latent
    positions whose dot product estimates the probability of edge i → j.
    """

    left_positions: np.ndarray
    right_positions: np.ndarray
    d: int

    def __post_init__(self):
        n, d_left = self.left_positions.shape
        d_right, n_right = self.right_positions.shape
        if not (d_left == d_right == self.d) or n != n_right:
            raise ValueError(
                f"inconsistent embedding shapes {self.left_positions.shape} / "
                f"{self.right_positions.shape} for d={self.d}"
            )

    @property
    def n_nodes(self) -> int:
        return self.left_positions.shape[0]

    def edge_probability(self, i: int, j: int) -> float:
        """Raw dot product L̂ᵢ·R̂ⱼ; not clamped to [0, 1]."""
        return float(self.left_positions[i] @ self.right_positions[:, j])

    def probabilities(self) -> np.ndarray:
        """Dense n × n matrix L̂R̂ of raw edge-probability estimates."""
        return self.left_positions @ self.right_positions

    def reconstruction_error(self, adjacency: SparseAdjacency) -> float:
        """Frobenius norm ‖A − L̂R̂‖."""
        residual = self.probabilities() - adjacency.matrix
        if sp.issparse(residual):
            residual = residual.toarray()
        return float(np.linalg.norm(np.asarray(residual), ord="fro"))
