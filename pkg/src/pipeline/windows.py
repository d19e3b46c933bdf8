"""Time-windowed communication networks."""

from collections.abc import Iterable, Sequence

from src.errors import EmptyNetworkError, ParameterError
from src.models.graph import SparseAdjacency
from src.models.records import InteractionRecord, WindowSpec
from src.spectral.adjacency import build_adjacency
from src.utils.logger import get_logger
from src.utils.time_utils import format_utc

logger = get_logger(__name__)


def build_window_network(
    records: Iterable[InteractionRecord], window: WindowSpec, directed: bool = False
) -> SparseAdjacency:
    """
    Network of the users interacting inside ``window``.

    Nodes are users appearing in at least one included interaction with
    another user, numbered in sorted order of their ids; ``node_labels``
    keeps the id → row mapping. Excluded kinds (retweets by default) and
    self-interactions never create nodes.
    """
    pairs: list[tuple[str, str]] = [
        (r.source_user, r.target_user)
        for r in records
        if window.contains(r) and r.source_user != r.target_user
    ]
    if not pairs:
        raise EmptyNetworkError("no included interactions", window=window.label)

    users = sorted({u for pair in pairs for u in pair})
    index = {user: i for i, user in enumerate(users)}
    adjacency = build_adjacency(
        len(users),
        [(index[s], index[t]) for s, t in pairs],
        directed=directed,
        node_labels=index,
    )
    logger.info(
        f"Window '{window.label}' [{format_utc(window.start)}, {format_utc(window.end)}): "
        f"{len(pairs)} interactions -> {adjacency.n_nodes} nodes / {adjacency.n_edges} edges"
    )
    return adjacency


def validate_window_series(windows: Sequence[WindowSpec]) -> list[WindowSpec]:
    """Windows sorted chronologically; overlapping windows are rejected."""
    ordered = sorted(windows, key=lambda w: (w.start, w.end))
    for before, after in zip(ordered, ordered[1:]):
        if after.start < before.end:
            raise ParameterError(
                f"windows '{before.label}' and '{after.label}' overlap"
            )
    labels = [w.label for w in ordered]
    if len(set(labels)) != len(labels):
        raise ParameterError(f"window labels must be unique, got {labels}")
    return ordered
