"""Node bootstrap of a network."""

from collections.abc import Iterator

import numpy as np

from src.errors import EmptyNetworkError, ParameterError
from src.models.graph import SparseAdjacency
from src.utils.seeding import replicate_rngs


def bootstrap_networks(
    a: SparseAdjacency, replicates: int, seed: int
) -> Iterator[SparseAdjacency]:
    """
    Yield ``replicates`` node-resampled copies of ``a``.

    Each replicate draws n node indices with replacement; entry (i, j) is 1
    iff the original has an edge between the i-th and j-th sampled nodes.
    Copies of the same node are never joined because the original has no
    self-loops. Replicate r always uses the r-th generator spawned from
    ``seed``, so any replicate can be reproduced on its own.
    """
    if replicates < 1:
        raise ParameterError(f"replicates must be positive, got {replicates}")
    if a.is_empty:
        raise EmptyNetworkError("cannot bootstrap a network with no edges")

    for rng in replicate_rngs(seed, replicates):
        yield resample_nodes(a, rng)


def resample_nodes(a: SparseAdjacency, rng: np.random.Generator) -> SparseAdjacency:
    """One bootstrap replicate drawn with ``rng``."""
    sampled = rng.integers(0, a.n_nodes, size=a.n_nodes)
    matrix = a.matrix[sampled][:, sampled].tocsr()
    matrix.sort_indices()
    return SparseAdjacency(matrix=matrix, directed=a.directed)
