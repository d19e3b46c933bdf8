"""Adjacency construction enforcing the simple-graph invariants."""

from collections.abc import Iterable

import numpy as np
import scipy.sparse as sp

from src.errors import EdgeIndexError, ParameterError
from src.models.graph import SparseAdjacency


def build_adjacency(
    n_nodes: int,
    edge_pairs: Iterable[tuple[int, int]] | np.ndarray,
    directed: bool = False,
    node_labels: dict[str, int] | None = None,
) -> SparseAdjacency:
    """
    Build an unweighted simple graph from (row, col) pairs.

    Duplicates collapse, self-loops are dropped, and undirected input is
    symmetrised so that every pair implies its reverse.
    """
    if n_nodes < 1:
        raise ParameterError(f"n_nodes must be positive, got {n_nodes}")

    pairs = np.asarray(list(edge_pairs) if not isinstance(edge_pairs, np.ndarray) else edge_pairs)
    if pairs.size == 0:
        pairs = np.empty((0, 2), dtype=np.int64)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise ParameterError(f"edge pairs must have shape (m, 2), got {pairs.shape}")
    pairs = pairs.astype(np.int64, copy=False)

    bad = (pairs < 0) | (pairs >= n_nodes)
    if bad.any():
        first = int(np.flatnonzero(bad.any(axis=1))[0])
        raise EdgeIndexError((int(pairs[first, 0]), int(pairs[first, 1])), n_nodes)

    rows, cols = pairs[:, 0], pairs[:, 1]
    keep = rows != cols
    rows, cols = rows[keep], cols[keep]
    if not directed:
        rows, cols = np.concatenate([rows, cols]), np.concatenate([cols, rows])

    matrix = sp.csr_matrix(
        (np.ones(len(rows), dtype=np.float64), (rows, cols)), shape=(n_nodes, n_nodes)
    )
    # CSR construction sums duplicates; reset every stored entry to 1
    matrix.sum_duplicates()
    matrix.data[:] = 1.0
    matrix.sort_indices()
    return SparseAdjacency(matrix=matrix, directed=directed, node_labels=node_labels)
