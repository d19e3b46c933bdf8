import os

import numpy as np
import pytest
from loguru import logger

os.environ["LOG_TO_FILE"] = "false"

from src.config import reset_settings  # noqa: E402
from src.spectral import build_adjacency  # noqa: E402


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    monkeypatch.setenv("LOG_TO_FILE", "false")
    reset_settings()
    yield
    reset_settings()
    # CLI runs bind a sink to a captured stream that is closed afterwards
    logger.remove()


@pytest.fixture
def k5():
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    return build_adjacency(5, pairs)


@pytest.fixture
def two_cliques():
    # Two 5-cliques bridged by a single edge
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    pairs += [(i + 5, j + 5) for i, j in pairs]
    pairs.append((4, 5))
    return build_adjacency(10, pairs)


def random_graph(n: int, density: float, seed: int, directed: bool = False):
    """Erdős–Rényi style graph used by the oracle tests."""
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < density
    if not directed:
        mask = np.triu(mask, k=1)
    rows, cols = np.nonzero(mask)
    return build_adjacency(n, np.column_stack([rows, cols]), directed=directed)


@pytest.fixture
def make_random_graph():
    return random_graph
