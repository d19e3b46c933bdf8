import pytest

from src.errors import EmptyNetworkError, ParameterError
from src.models import InteractionKind, InteractionRecord, WindowSpec
from src.pipeline import build_window_network, validate_window_series


def _record(source, target, kind="mention", t=5.0):
    return InteractionRecord(source, target, InteractionKind(kind), t)


def test_single_interaction():
    a = build_window_network([_record("a", "b")], WindowSpec("w", 0, 10))
    assert a.n_nodes == 2
    assert a.n_edges == 1
    assert a.node_labels == {"a": 0, "b": 1}


def test_retweets_excluded_by_default():
    with pytest.raises(EmptyNetworkError) as excinfo:
        build_window_network([_record("a", "b", "retweet")], WindowSpec("w", 0, 10))
    assert excinfo.value.window == "w"


def test_retweets_included_on_request():
    window = WindowSpec("w", 0, 10, include_kinds={InteractionKind.RETWEET})
    assert build_window_network([_record("a", "b", "retweet")], window).n_edges == 1


def test_windows_partition_records():
    records = [_record("a", "b", t=0), _record("b", "c", t=9.999), _record("c", "d", t=10)]
    first = build_window_network(records, WindowSpec("w1", 0, 10))
    second = build_window_network(records, WindowSpec("w2", 10, 20))
    assert first.n_edges + second.n_edges == len(records)
    assert second.labels == ["c", "d"]


def test_self_interactions_never_create_nodes():
    records = [_record("a", "a"), _record("b", "c")]
    assert build_window_network(records, WindowSpec("w", 0, 10)).labels == ["b", "c"]


def test_directed_window():
    records = [_record("b", "a"), _record("a", "b"), _record("c", "a")]
    a = build_window_network(records, WindowSpec("w", 0, 10), directed=True)
    assert a.n_edges == 3
    assert (2, 0) in a.edge_set()
    assert (0, 2) not in a.edge_set()


def test_series_is_sorted():
    ordered = validate_window_series([WindowSpec("late", 10, 20), WindowSpec("early", 0, 10)])
    assert [w.label for w in ordered] == ["early", "late"]


def test_overlapping_windows_rejected():
    with pytest.raises(ParameterError):
        validate_window_series([WindowSpec("a", 0, 10), WindowSpec("b", 5, 15)])


def test_duplicate_labels_rejected():
    with pytest.raises(ParameterError):
        validate_window_series([WindowSpec("a", 0, 10), WindowSpec("a", 10, 20)])


def test_window_needs_positive_length():
    with pytest.raises(ValueError):
        WindowSpec("w", 10, 10)
