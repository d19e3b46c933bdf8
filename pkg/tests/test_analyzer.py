import json

import pytest

from src.errors import InputError
from src.data import read_edge_list
from src.models import RecordBatch
from src.models.records import InteractionKind, InteractionRecord, WindowSpec
from src.pipeline import NetworkAnalyzer, load_network
from src.spectral import build_adjacency


def _clique_records(users, t, kind=InteractionKind.MENTION):
    return [
        InteractionRecord(u, v, kind, t)
        for i, u in enumerate(users)
        for v in users[i + 1 :]
    ]


def test_report_on_full_network_and_giant_component(two_cliques):
    # Add an isolated pair so the giant component is a strict subgraph
    pairs = two_cliques.edge_list() + [(10, 11)]
    a = build_adjacency(12, pairs)
    report, full = NetworkAnalyzer(k=8).analyse(a, "sha256:test")
    assert report.n_nodes == 12
    assert report.giant_nodes == 10
    assert report.giant_edges == 21
    assert report.k_used == 8
    assert report.k_used_gc == 8
    assert full.dimension.d_hat == report.d_hat
    assert report.spectrum is None


def test_k_is_clamped_to_node_count(k5):
    analyzer = NetworkAnalyzer(k=100, emit_spectrum=True)
    report, _ = analyzer.analyse(k5, "sha256:test")
    assert report.k_requested == 100
    assert report.k_used == 5
    assert report.spectrum == pytest.approx([4, 1, 1, 1, 1])


def test_tiny_network_rejected():
    with pytest.raises(InputError):
        NetworkAnalyzer().analyse(build_adjacency(2, [(0, 1)]), "sha256:test")


def test_windows_share_one_k():
    users = [f"u{i}" for i in range(8)]
    records = _clique_records(users, 5.0) + _clique_records(users[:5], 15.0)
    batch = RecordBatch(records=records)
    windows = [WindowSpec("late", 10, 20), WindowSpec("early", 0, 10)]
    reports, verdict = NetworkAnalyzer(k=50).analyse_windows(batch, windows, "sha256:test")
    assert [r.label for r in reports] == ["early", "late"]
    assert {r.k_used for r in reports} == {5}
    assert verdict.k_used == 5
    assert verdict.labels == ("early", "late")


def test_bootstrap_is_reproducible(two_cliques):
    first, rows = NetworkAnalyzer(k=8, seed=3).bootstrap(two_cliques, 12, "sha256:test")
    second, _ = NetworkAnalyzer(k=8, seed=3, threads=4).bootstrap(two_cliques, 12, "sha256:test")
    assert first == second
    assert rows["replicate"].tolist() == list(range(12))
    assert first.d_hat.minimum <= first.d_hat.median <= first.d_hat.maximum
    assert first.gc_fraction == 1.0


def test_load_network_from_records(tmp_path):
    path = tmp_path / "records.jsonl"
    lines = [
        {"source_user": "a", "target_user": "b", "kind": "reply", "timestamp": 1},
        {"source_user": "b", "target_user": "c", "kind": "mention", "timestamp": 2},
        {"source_user": "c", "target_user": "d", "kind": "retweet", "timestamp": 3},
    ]
    path.write_text("\n".join(json.dumps(line) for line in lines) + "\n")
    a, batch = load_network(path)
    assert a.labels == ["a", "b", "c"]
    assert len(batch.records) == 3


def test_load_network_from_edges(tmp_path):
    path = tmp_path / "edges.tsv"
    path.write_text("a\tb\nb\tc\n")
    a, batch = load_network(path, "auto", directed=True)
    assert batch is None
    assert a.directed
    assert a.n_edges == 2


def test_too_small_window_is_named():
    users = [f"u{i}" for i in range(5)]
    records = _clique_records(users, 5.0) + _clique_records(["u0", "u1"], 15.0)
    batch = RecordBatch(records=records)
    windows = [WindowSpec("early", 0, 10), WindowSpec("late", 10, 20)]
    with pytest.raises(InputError, match="window 'late' has 2 nodes"):
        NetworkAnalyzer(k=5).analyse_windows(batch, windows, "sha256:test")


def test_windows_dumped_as_edge_lists(tmp_path):
    users = [f"u{i}" for i in range(6)]
    records = _clique_records(users, 5.0) + _clique_records(users[:4], 15.0)
    batch = RecordBatch(records=records)
    windows = [WindowSpec("2019/20", 0, 10), WindowSpec("late", 10, 20)]
    NetworkAnalyzer(k=4).analyse_windows(batch, windows, "sha256:test", dump_dir=tmp_path / "w")

    assert sorted(p.name for p in (tmp_path / "w").iterdir()) == ["2019_20.tsv", "late.tsv"]
    early = read_edge_list(tmp_path / "w" / "2019_20.tsv")
    late = read_edge_list(tmp_path / "w" / "late.tsv")
    assert (early.n_nodes, early.n_edges) == (6, 15)
    assert (late.n_nodes, late.n_edges) == (4, 6)


def test_tiny_giant_component_is_named():
    a = build_adjacency(4, [(0, 1), (2, 3)])
    with pytest.raises(InputError, match="giant component"):
        NetworkAnalyzer(k=4).analyse(a, "sha256:test")


def test_bootstrap_of_disjoint_edges_names_the_giant_component():
    a = build_adjacency(6, [(0, 1), (2, 3), (4, 5)])
    with pytest.raises(InputError, match=r"giant component \(33.3% of 6 nodes\) has 2 nodes"):
        NetworkAnalyzer(k=5).bootstrap(a, 10, "sha256:test")


def test_bootstrap_of_small_giant_component_warns_and_runs():
    pairs = [(0, 1), (1, 2), (0, 2)] + [(3 + 2 * i, 4 + 2 * i) for i in range(5)]
    a = build_adjacency(13, pairs)
    summary, rows = NetworkAnalyzer(k=5, seed=1).bootstrap(a, 20, "sha256:test")
    assert summary.giant_nodes == 3
    assert summary.k_used == 3
    assert summary.gc_fraction == pytest.approx(3 / 13)
    assert len(rows) == 20
