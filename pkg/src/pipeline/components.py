"""Connected components."""

import numpy as np
from scipy.sparse.csgraph import connected_components

from src.errors import EmptyNetworkError
from src.models.graph import SparseAdjacency


def largest_component_nodes(a: SparseAdjacency) -> np.ndarray:
    """
    Sorted node indices of the largest (weakly) connected component.

    Equal-size components are resolved toward the one holding the smallest
    node index.
    """
    _, labels = connected_components(a.matrix, directed=a.directed, connection="weak")
    sizes = np.bincount(labels)
    _, first_node = np.unique(labels, return_index=True)
    candidates = np.flatnonzero(sizes == sizes.max())
    best = candidates[np.argmin(first_node[candidates])]
    return np.flatnonzero(labels == best)


def giant_component(a: SparseAdjacency) -> SparseAdjacency:
    """Induced subgraph on the largest connected component."""
    if a.is_empty:
        raise EmptyNetworkError("giant component of a graph with no edges")
    nodes = largest_component_nodes(a)
    if len(nodes) == a.n_nodes:
        return a
    return a.subgraph(nodes)


def giant_component_fraction(a: SparseAdjacency) -> float:
    """Share of nodes in the largest component; 1/n for an edgeless graph."""
    return len(largest_component_nodes(a)) / a.n_nodes
