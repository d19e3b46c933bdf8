import numpy as np
import pytest

from src.errors import EmptyNetworkError, ParameterError
from src.pipeline import bootstrap_networks
from src.spectral import build_adjacency
from src.utils.seeding import replicate_rngs


def test_same_seed_same_replicates(two_cliques):
    first = [r.edge_list() for r in bootstrap_networks(two_cliques, 5, seed=3)]
    second = [r.edge_list() for r in bootstrap_networks(two_cliques, 5, seed=3)]
    assert first == second


def test_node_count_preserved(two_cliques):
    for replicate in bootstrap_networks(two_cliques, 20, seed=1):
        assert replicate.n_nodes == two_cliques.n_nodes


def test_complete_graph_replicates_only_miss_duplicate_pairs():
    n = 4
    complete = build_adjacency(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    replicates = []
    for replicate in bootstrap_networks(complete, 50, seed=0):
        dense = replicate.to_dense()
        assert np.array_equal(dense, dense.T)
        assert dense.diagonal().sum() == 0
        replicates.append(dense)

    for dense, rng in zip(replicates, replicate_rngs(0, 50)):
        sampled = rng.integers(0, n, size=n)
        same = sampled[:, None] == sampled[None, :]
        assert np.array_equal(dense == 0, same)


def test_zero_replicates_rejected(k5):
    with pytest.raises(ParameterError):
        next(bootstrap_networks(k5, 0, seed=0))


def test_edgeless_graph_rejected():
    with pytest.raises(EmptyNetworkError):
        next(bootstrap_networks(build_adjacency(3, []), 1, seed=0))
