"""Sparse adjacency model."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp


@dataclass(frozen=True, eq=False)
class SparseAdjacency:
    """
    Unweighted simple graph stored as a CSR matrix of 0/1 entries.

    Built through ``src.spectral.build_adjacency`` which enforces the
    invariants: no duplicates, no self-loops, symmetric when undirected.
    """

    matrix: sp.csr_matrix
    directed: bool = False
    node_labels: dict[str, int] | None = field(default=None)

    def __post_init__(self):
        n_rows, n_cols = self.matrix.shape
        if n_rows != n_cols or n_rows < 1:
            raise ValueError(f"adjacency must be square and nonempty, got {self.matrix.shape}")
        if self.node_labels is not None and len(self.node_labels) != n_rows:
            raise ValueError(
                f"{len(self.node_labels)} node labels for {n_rows} nodes"
            )

    @property
    def n_nodes(self) -> int:
        return self.matrix.shape[0]

    @property
    def nnz(self) -> int:
        return int(self.matrix.nnz)

    @property
    def n_edges(self) -> int:
        """Edge count; an undirected edge is counted once."""
        return self.nnz if self.directed else self.nnz // 2

    @property
    def is_empty(self) -> bool:
        return self.nnz == 0

    @property
    def labels(self) -> list[str] | None:
        """Labels ordered by row index."""
        if self.node_labels is None:
            return None
        ordered = [""] * self.n_nodes
        for label, idx in self.node_labels.items():
            ordered[idx] = label
        return ordered

    def edge_set(self) -> set[tuple[int, int]]:
        """Every stored (row, col) entry."""
        coo = self.matrix.tocoo()
        return set(zip(coo.row.tolist(), coo.col.tolist()))

    def edge_list(self) -> list[tuple[int, int]]:
        """Sorted edges; undirected edges listed once as (i, j) with i < j."""
        coo = self.matrix.tocoo()
        rows, cols = coo.row, coo.col
        if not self.directed:
            keep = rows < cols
            rows, cols = rows[keep], cols[keep]
        order = np.lexsort((cols, rows))
        return list(zip(rows[order].tolist(), cols[order].tolist()))

    def degrees(self) -> np.ndarray:
        """Out-degrees (row sums); equal to degrees when undirected."""
        return np.asarray(self.matrix.sum(axis=1)).ravel().astype(np.int64)

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def subgraph(self, indices: np.ndarray | list[int]) -> SparseAdjacency:
        """Vertex-induced subgraph on ``indices`` (kept in the given order)."""
        idx = np.asarray(indices, dtype=np.int64)
        sub = self.matrix[idx][:, idx].tocsr()
        sub.sort_indices()
        labels = None
        if self.node_labels is not None:
            ordered = self.labels
            labels = {ordered[old]: new for new, old in enumerate(idx.tolist())}
        return SparseAdjacency(matrix=sub, directed=self.directed, node_labels=labels)

    def relabel(self, permutation: np.ndarray | list[int]) -> SparseAdjacency:
        """Renumber nodes so that new node ``i`` is old node ``permutation[i]``."""
        perm = np.asarray(permutation, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(self.n_nodes)):
            raise ValueError("relabel expects a permutation of all node indices")
        return self.subgraph(perm)
