import json

import pytest

from src.data import (
    NetworkFormat,
    detect_format,
    file_digest,
    format_edge_list,
    parse_edge_lines,
    parse_record_lines,
    read_edge_list,
    write_edge_list,
)
from src.errors import ParseError
from src.models import InteractionKind
from src.spectral import build_adjacency


def test_json_lines_records():
    lines = [
        json.dumps({"source_user": "a", "target_user": "b", "kind": "Mention", "timestamp": 10}),
        json.dumps(
            {"source_user": " c ", "target_user": "d", "kind": "reply",
             "timestamp": "2020-01-01T00:00:00Z"}
        ),
    ]
    batch = parse_record_lines(lines)
    assert batch.n_rejected == 0
    first, second = batch.records
    assert first.kind is InteractionKind.MENTION
    assert first.timestamp == 10.0
    assert second.source_user == "c"
    assert second.timestamp == 1577836800.0


def test_tsv_records_with_header_and_rejects():
    lines = [
        "source_user\ttarget_user\tkind\ttimestamp",
        "a\tb\tquote\t2021-06-01",
        "a\tb\tshout\t5",
        "a\tb\tmention",
        "",
        "c\ta\tretweet\t7",
    ]
    batch = parse_record_lines(lines)
    assert len(batch.records) == 2
    assert [r.line_no for r in batch.rejects] == [3, 4]
    assert "kind" in batch.rejects[0].reason
    assert batch.span() == (7.0, batch.records[0].timestamp)


def test_bad_json_line_is_rejected_not_fatal():
    lines = [
        json.dumps({"source_user": "a", "target_user": "b", "kind": "reply", "timestamp": 1}),
        "{not json",
        json.dumps({"source_user": None, "target_user": "b", "kind": "reply", "timestamp": 1}),
        json.dumps({"source_user": "a", "target_user": "b", "kind": "reply", "timestamp": True}),
    ]
    batch = parse_record_lines(lines)
    assert len(batch.records) == 1
    assert batch.n_rejected == 3


def test_edge_list_labels_numbered_by_appearance():
    a = parse_edge_lines(["x\ty", "y z", "# comment", "x\tz"])
    assert a.n_nodes == 3
    assert a.labels == ["x", "y", "z"]
    assert a.n_edges == 3
    assert not a.directed


def test_edge_list_header_keeps_isolated_nodes():
    a = parse_edge_lines(["# n_nodes=5 directed=true", "0\t1", "3\t1"])
    assert a.n_nodes == 5
    assert a.directed
    assert a.edge_list() == [(0, 1), (3, 1)]


def test_explicit_direction_overrides_header():
    a = parse_edge_lines(["# n_nodes=3 directed=true", "0\t1"], directed=False)
    assert not a.directed


def test_short_line_is_a_parse_error():
    with pytest.raises(ParseError) as excinfo:
        parse_edge_lines(["a\tb", "c"], source="net.tsv")
    assert excinfo.value.line_no == 2
    assert "net.tsv:2" in str(excinfo.value)


def test_no_edges_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_edge_lines(["# only a comment"])


def test_written_edge_list_reads_back(tmp_path, two_cliques):
    path = write_edge_list(two_cliques, tmp_path / "net.tsv")
    assert path.read_text().splitlines()[0] == "# n_nodes=10 directed=false"
    again = read_edge_list(path)
    assert again.edge_list() == two_cliques.edge_list()
    assert format_edge_list(again) == format_edge_list(two_cliques)


def test_edge_list_dump_is_sorted():
    a = build_adjacency(4, [(3, 2), (0, 3), (1, 0)])
    assert format_edge_list(a).splitlines()[1:] == ["0\t1", "0\t3", "2\t3"]


def test_format_detection(tmp_path):
    records = tmp_path / "records.jsonl"
    records.write_text(
        '{"source_user": "a", "target_user": "b", "kind": "reply", "timestamp": 1}\n'
    )
    tsv = tmp_path / "records.tsv"
    tsv.write_text("a\tb\tmention\t1\n")
    edges = tmp_path / "edges.tsv"
    edges.write_text("a\tb\n")
    assert detect_format(records) is NetworkFormat.RECORDS
    assert detect_format(tsv) is NetworkFormat.RECORDS
    assert detect_format(edges) is NetworkFormat.EDGES


def test_empty_file(tmp_path):
    path = tmp_path / "empty.tsv"
    path.write_text("")
    with pytest.raises(ParseError):
        detect_format(path)


def test_digest_is_stable(tmp_path):
    path = tmp_path / "edges.tsv"
    path.write_text("a\tb\n")
    assert file_digest(path) == file_digest(path)
    assert file_digest(path).startswith("sha256:")
