"""Estimators: RDPG embedding, embedding dimension, SVD entropy, window comparison."""

from src.analysis.dimension import estimate_dimension
from src.analysis.embedding import embed
from src.analysis.entropy import svd_entropy
from src.analysis.polarisation import compare_windows

__all__ = ["embed", "estimate_dimension", "svd_entropy", "compare_windows"]
