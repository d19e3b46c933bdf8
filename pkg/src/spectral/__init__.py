"""Spectral kernel: sparse adjacency construction and truncated SVD."""

from src.spectral.adjacency import build_adjacency
from src.spectral.svd import SvdMethod, svd_factors, truncated_svd

__all__ = ["build_adjacency", "truncated_svd", "svd_factors", "SvdMethod"]
