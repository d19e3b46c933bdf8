"""Stochastic block model sampling."""

from functools import lru_cache

import numpy as np

from src.errors import ParameterError
from src.models.experiments import SbmConfig
from src.models.graph import SparseAdjacency
from src.spectral.adjacency import build_adjacency


def validate_config(config: SbmConfig) -> None:
    """Raise ParameterError unless the config describes a valid undirected SBM."""
    sizes = config.block_sizes
    if not sizes or any(s < 1 for s in sizes):
        raise ParameterError(f"{config.config_id}: block sizes must be positive, got {sizes}")
    if sum(sizes) < 2:
        raise ParameterError(f"{config.config_id}: an SBM needs at least 2 nodes")

    probs = config.prob_matrix
    if probs.shape != (len(sizes), len(sizes)):
        raise ParameterError(
            f"{config.config_id}: link_probs shape {probs.shape} does not match "
            f"{len(sizes)} blocks"
        )
    if np.any((probs < 0) | (probs > 1)) or np.any(np.isnan(probs)):
        raise ParameterError(f"{config.config_id}: link probabilities must lie in [0, 1]")
    if not np.array_equal(probs, probs.T):
        raise ParameterError(f"{config.config_id}: link_probs must be symmetric")


@lru_cache(maxsize=32)
def _upper_pairs(size: int) -> tuple[np.ndarray, np.ndarray]:
    return np.triu_indices(size, k=1)


def sample_sbm(config: SbmConfig) -> SparseAdjacency:
    """
    Draw an undirected simple graph from the block model.

    Every unordered pair of distinct nodes (u, v) is joined independently
    with probability link_probs[block(u)][block(v)]. Nodes are numbered
    block by block. The draw depends only on ``config.seed``.
    """
    validate_config(config)
    rng = np.random.default_rng(config.seed)
    sizes = config.block_sizes
    probs = config.prob_matrix
    offsets = np.concatenate([[0], np.cumsum(sizes)])

    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []
    for r in range(len(sizes)):
        for s in range(r, len(sizes)):
            p = probs[r, s]
            if p <= 0.0:
                continue
            if r == s:
                iu, ju = _upper_pairs(sizes[r])
                hit = rng.random(len(iu)) < p
                rows.append(iu[hit] + offsets[r])
                cols.append(ju[hit] + offsets[r])
            else:
                ii, jj = np.nonzero(rng.random((sizes[r], sizes[s])) < p)
                rows.append(ii + offsets[r])
                cols.append(jj + offsets[s])

    if rows:
        pairs = np.column_stack([np.concatenate(rows), np.concatenate(cols)])
    else:
        pairs = np.empty((0, 2), dtype=np.int64)
    return build_adjacency(config.n_nodes, pairs, directed=False)


def block_pair_edge_counts(a: SparseAdjacency, config: SbmConfig) -> np.ndarray:
    """Edges between every pair of blocks (upper triangle, diagonal = within-block)."""
    blocks = config.block_of()
    coo = a.matrix.tocoo()
    keep = coo.row < coo.col
    r, s = blocks[coo.row[keep]], blocks[coo.col[keep]]
    lo, hi = np.minimum(r, s), np.maximum(r, s)
    n_blocks = len(config.block_sizes)
    counts = np.zeros((n_blocks, n_blocks), dtype=np.int64)
    np.add.at(counts, (lo, hi), 1)
    return counts


def block_pair_capacity(config: SbmConfig) -> np.ndarray:
    """Number of node pairs available between every pair of blocks."""
    sizes = np.asarray(config.block_sizes, dtype=np.int64)
    capacity = np.triu(np.outer(sizes, sizes), k=1)
    np.fill_diagonal(capacity, sizes * (sizes - 1) // 2)
    return capacity
