import json

import pytest
from click.testing import CliRunner

from src.main import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.tsv"
    path.write_text("".join(f"n{i}\tn{j}\n" for i in range(5) for j in range(i + 1, 5)))
    return path


@pytest.fixture
def cliques_file(tmp_path):
    path = tmp_path / "cliques.tsv"
    edges = [(i, j) for i in range(6) for j in range(i + 1, 6)]
    edges += [(i + 6, j + 6) for i, j in edges] + [(5, 6)]
    path.write_text("".join(f"{i}\t{j}\n" for i, j in edges))
    return path


@pytest.fixture
def records_file(tmp_path):
    def clique(users, t):
        return [
            {"source_user": u, "target_user": v, "kind": "mention", "timestamp": t}
            for i, u in enumerate(users)
            for v in users[i + 1 :]
        ]

    users = [f"user{i}" for i in range(8)]
    rows = clique(users, "2020-03-01") + clique(users[:4], "2021-03-01")
    rows += clique(users[4:], "2021-04-01") + [{"source_user": "x", "kind": "reply"}]
    path = tmp_path / "records.jsonl"
    path.write_text("\n".join(json.dumps(r) for r in rows) + "\n")
    return path


def test_estimate_complete_graph(runner, k5_file):
    result = runner.invoke(cli, ["estimate", str(k5_file), "--k", "5", "--emit-spectrum"])
    assert result.exit_code == 0, result.output
    report = json.loads(result.stdout)
    assert report["n_nodes"] == 5
    assert report["spectrum"] == pytest.approx([4, 1, 1, 1, 1])
    assert report["input_digest"].startswith("sha256:")


def test_estimate_is_byte_identical(runner, cliques_file):
    first = runner.invoke(cli, ["estimate", str(cliques_file), "--k", "10"])
    second = runner.invoke(cli, ["estimate", str(cliques_file), "--k", "10"])
    assert first.exit_code == 0, first.output
    assert first.stdout == second.stdout


def test_empty_file_is_an_input_error(runner, tmp_path):
    path = tmp_path / "empty.tsv"
    path.write_text("")
    result = runner.invoke(cli, ["estimate", str(path)])
    assert result.exit_code == 3


def test_missing_file_is_an_input_error(runner, tmp_path):
    result = runner.invoke(cli, ["estimate", str(tmp_path / "nope.tsv")])
    assert result.exit_code == 3


def test_bad_k_is_a_usage_error(runner, k5_file):
    result = runner.invoke(cli, ["estimate", str(k5_file), "--k", "2"])
    assert result.exit_code == 2


def test_spectrum_command(runner, k5_file):
    result = runner.invoke(cli, ["spectrum", str(k5_file), "--k", "3"])
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert document["values"] == pytest.approx([4, 1, 1])
    assert document["k_used"] == 3


def test_compare_windows_emits_table_and_verdict(runner, records_file):
    result = runner.invoke(
        cli,
        [
            "compare",
            str(records_file),
            "--window",
            "after=2021-01-01..2022-01-01",
            "--window",
            "before=2020-01-01..2021-01-01",
        ],
    )
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert [row["Window"] for row in document["table"]] == ["before", "after"]
    assert set(document["table"][0]) == {
        "Window", "Dimension", "Dimension GC", "Entropy", "Entropy GC"
    }
    assert document["verdict"]["verdict"] in {"polarising", "stable", "depolarising"}
    assert len(document["windows"]) == 2


def test_compare_reported_values(runner, tmp_path):
    path = tmp_path / "table.json"
    path.write_text(
        json.dumps(
            [
                {"label": "2017-2020", "d_hat": 39, "d_hat_gc": 39, "k_used": 100,
                 "entropy": 0.980229, "entropy_gc": 0.979954},
                {"label": "2020-2023", "d_hat": 27, "d_hat_gc": 24, "k_used": 100,
                 "entropy": 0.97439, "entropy_gc": 0.97372},
            ]
        )
    )
    result = runner.invoke(cli, ["compare", "--reports", str(path)])
    assert result.exit_code == 0, result.output
    document = json.loads(result.stdout)
    assert document["verdict"]["verdict"] == "polarising"
    assert document["verdict"]["net_delta_d"] == -12
    assert document["table"][1]["Dimension GC"] == 24


def test_compare_mismatched_k_exits_3(runner, tmp_path):
    path = tmp_path / "table.json"
    path.write_text(
        json.dumps(
            [
                {"label": "a", "d_hat": 5, "k_used": 100},
                {"label": "b", "d_hat": 4, "k_used": 1000},
            ]
        )
    )
    result = runner.invoke(cli, ["compare", "--reports", str(path)])
    assert result.exit_code == 3


def test_compare_needs_two_windows(runner, records_file):
    result = runner.invoke(
        cli, ["compare", str(records_file), "--window", "a=2020-01-01..2021-01-01"]
    )
    assert result.exit_code == 2


def test_bootstrap_same_output_across_threads(runner, cliques_file, tmp_path):
    args = ["bootstrap", str(cliques_file), "--replicates", "100", "--seed", "5", "--k", "10"]
    one = runner.invoke(cli, args + ["--threads", "1", "--rows", str(tmp_path / "rows1.csv")])
    four = runner.invoke(cli, args + ["--threads", "4", "--rows", str(tmp_path / "rows4.csv")])
    assert one.exit_code == 0, one.output
    assert one.stdout == four.stdout
    assert (tmp_path / "rows1.csv").read_text() == (tmp_path / "rows4.csv").read_text()
    summary = json.loads(one.stdout)
    assert summary["replicates"] == 100
    assert set(summary["d_hat"]) == {"min", "2.5%", "25%", "50%", "75%", "97.5%", "max"}


@pytest.mark.parametrize(
    "command",
    [["engagement"], ["imbalance", "--splits", "0.5,0.25"]],
    ids=["engagement", "imbalance"],
)
def test_sbm_commands_are_deterministic(runner, command):
    args = ["sbm", *command, "--in-probs", "0.3,0.4", "--n", "40", "--replicates", "2"]
    args += ["--k", "10"]
    one = runner.invoke(cli, args + ["--threads", "1"])
    four = runner.invoke(cli, args + ["--threads", "4"])
    assert one.exit_code == 0, one.output
    assert one.stdout == four.stdout
    assert one.stdout.splitlines()[0].startswith("config_id,")


def test_sbm_output_file(runner, tmp_path):
    out = tmp_path / "results.csv"
    result = runner.invoke(
        cli,
        ["sbm", "engagement", "--in-probs", "0.3", "--out-probs", "0.05", "--n", "30",
         "--replicates", "2", "--k", "8", "--output", str(out)],
    )
    assert result.exit_code == 0, result.output
    assert len(out.read_text().splitlines()) == 3


def test_sbm_bad_probability_exits_2(runner):
    result = runner.invoke(cli, ["sbm", "engagement", "--out-probs", "1.5", "--n", "20"])
    assert result.exit_code == 2


def test_config_command(runner):
    result = runner.invoke(cli, ["config"])
    assert result.exit_code == 0
    assert "default_k" in result.output


def test_estimate_dumps_the_analysed_network(runner, cliques_file, tmp_path):
    dump = tmp_path / "dump.tsv"
    result = runner.invoke(
        cli, ["estimate", str(cliques_file), "--k", "10", "--dump-network", str(dump)]
    )
    assert result.exit_code == 0, result.output
    assert dump.read_text().splitlines()[0] == "# n_nodes=12 directed=false"

    again = runner.invoke(cli, ["estimate", str(dump), "--k", "10"])
    original, restored = json.loads(result.stdout), json.loads(again.stdout)
    assert restored["d_hat"] == original["d_hat"]
    assert restored["entropy"] == pytest.approx(original["entropy"])
    assert restored["n_edges"] == original["n_edges"] == 31


def test_compare_dumps_each_window(runner, records_file, tmp_path):
    out = tmp_path / "windows"
    result = runner.invoke(
        cli,
        [
            "compare",
            str(records_file),
            "-w",
            "before=2020-01-01..2021-01-01",
            "-w",
            "after=2021-01-01..2022-01-01",
            "--dump-dir",
            str(out),
        ],
    )
    assert result.exit_code == 0, result.output
    assert sorted(p.name for p in out.iterdir()) == ["after.tsv", "before.tsv"]
    assert (out / "before.tsv").read_text().startswith("# n_nodes=8 directed=false")


def test_bootstrap_needs_a_giant_component_of_three_nodes(runner, tmp_path):
    pairs = tmp_path / "pairs.tsv"
    pairs.write_text("a\tb\nc\td\ne\tf\n")
    result = runner.invoke(cli, ["bootstrap", str(pairs), "--replicates", "10"])
    assert result.exit_code == 3
    assert "giant component" in result.stderr

    triangle = tmp_path / "triangle.tsv"
    triangle.write_text(
        "a\tb\nb\tc\na\tc\n" + "".join(f"x{i}\ty{i}\n" for i in range(5))
    )
    result = runner.invoke(cli, ["bootstrap", str(triangle), "--replicates", "10"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["giant_nodes"] == 3
