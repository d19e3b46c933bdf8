"""RDPG embedding from a truncated SVD."""

import numpy as np

from src.errors import ParameterError
from src.models.embedding import RdpgEmbedding
from src.models.graph import SparseAdjacency
from src.models.spectrum import SvdFactors
from src.spectral.svd import svd_factors


def embed(a: SparseAdjacency, d: int, *, seed: int | None = None, **svd_options) -> RdpgEmbedding:
    """
    Rank-d RDPG embedding: L̂ = U|_d √Σ and R̂ = √Σ (V|_d)ᵀ.

    Dot products L̂ᵢ·R̂ⱼ are reported raw and may fall outside [0, 1].
    """
    if d < 1 or d > a.n_nodes:
        raise ParameterError(f"d must lie in [1, {a.n_nodes}], got {d}")
    return embedding_from_factors(svd_factors(a, d, seed=seed, **svd_options), d)


def embedding_from_factors(factors: SvdFactors, d: int) -> RdpgEmbedding:
    """Scale the first d singular vectors by √σ."""
    root = np.sqrt(factors.values[:d])
    left = factors.left[:, :d] * root
    right = (factors.right[:, :d] * root).T
    return RdpgEmbedding(left_positions=left, right_positions=right, d=d)
