"""Command-line interface behavior."""

import json
import subprocess
import sys

import pytest

from degreesearch import load_edge_list
from degreesearch.cli import main


def test_generate_writes_loadable_file(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code = main(
        ["generate", "--nodes", "50", "--m-attach", "2", "--seed", "1", "--out", str(out)]
    )
    assert code == 0
    assert "wrote 50 nodes, 97 edges" in capsys.readouterr().out
    g, _ = load_edge_list(out)
    assert g.node_count == 50
    assert g.edge_count == 3 + 2 * 47


def test_generate_deterministic_bytes(tmp_path):
    paths = [tmp_path / "a.txt", tmp_path / "b.txt"]
    for p in paths:
        assert main(["generate", "--nodes", "60", "--seed", "9", "--out", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_run_on_generated_graph(tmp_path, capsys):
    out_dir = tmp_path / "results"
    code = main(
        [
            "run",
            "--ba",
            "120,2",
            "--h",
            "2",
            "--refine",
            "--pairs",
            "30",
            "--rounds",
            "2",
            "--seed",
            "3",
            "--out-dir",
            str(out_dir),
        ]
    )
    assert code == 0
    captured = capsys.readouterr().out
    assert "h2+refine: " in captured
    assert "mean refined length" in captured
    for name in ("searches.csv", "summary.json", "histogram.csv"):
        assert (out_dir / name).exists()
    stored = json.loads((out_dir / "summary.json").read_text(encoding="utf-8"))
    assert stored[0]["variant"] == "h2+refine"
    assert stored[0]["total_searches"] == 60


def test_run_twice_same_seed_same_bytes(tmp_path):
    dirs = [tmp_path / "r1", tmp_path / "r2"]
    for d in dirs:
        code = main(
            [
                "run",
                "--ba",
                "100,2",
                "--pairs",
                "20",
                "--rounds",
                "2",
                "--seed",
                "8",
                "--out-dir",
                str(d),
            ]
        )
        assert code == 0
    for name in ("searches.csv", "summary.json", "histogram.csv"):
        first = (dirs[0] / name).read_bytes()
        assert first
        assert first == (dirs[1] / name).read_bytes(), name


def test_run_on_topology_file(tmp_path, capsys):
    graph_file = tmp_path / "g.txt"
    main(["generate", "--nodes", "80", "--seed", "2", "--out", str(graph_file)])
    capsys.readouterr()
    code = main(
        [
            "run",
            "--topology",
            str(graph_file),
            "--h",
            "1",
            "--pairs",
            "10",
            "--rounds",
            "1",
            "--out-dir",
            str(tmp_path / "out"),
        ]
    )
    assert code == 0
    assert "h1: " in capsys.readouterr().out


def test_run_missing_topology_is_clean_error(tmp_path, capsys):
    code = main(
        [
            "run",
            "--topology",
            str(tmp_path / "nope.txt"),
            "--out-dir",
            str(tmp_path / "out"),
        ]
    )
    assert code == 2
    assert capsys.readouterr().err.startswith("error: ")


def test_run_rejects_consult_without_h2(tmp_path, capsys):
    code = main(
        [
            "run",
            "--ba",
            "50,2",
            "--h",
            "3",
            "--consult",
            "5",
            "--out-dir",
            str(tmp_path / "out"),
        ]
    )
    assert code == 2
    assert "error: " in capsys.readouterr().err


def test_bad_ba_argument_exits_via_argparse(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["run", "--ba", "abc", "--out-dir", str(tmp_path)])
    assert exc.value.code == 2


def test_stats_reports_topology(tmp_path, capsys):
    graph_file = tmp_path / "g.txt"
    main(["generate", "--nodes", "200", "--seed", "4", "--out", str(graph_file)])
    capsys.readouterr()
    code = main(["stats", "--topology", str(graph_file), "--pairs", "50"])
    assert code == 0
    out = capsys.readouterr().out
    assert "nodes: 200" in out
    assert "edges: 594" in out
    assert "min degree: 3" in out
    assert "giant component: 200 nodes (100.0%), 1 component(s)" in out
    assert "mean shortest path (50 sampled pairs):" in out
    assert "degree histogram:" in out


def test_stats_counts_components(tmp_path, capsys):
    graph_file = tmp_path / "two.txt"
    graph_file.write_text("0 1\n2 3\n3 4\n", encoding="utf-8")
    code = main(["stats", "--topology", str(graph_file), "--pairs", "10"])
    assert code == 0
    out = capsys.readouterr().out
    assert "nodes: 5" in out
    assert "giant component: 3 nodes (60.0%), 2 component(s)" in out


def test_module_entry_point(tmp_path):
    result = subprocess.run(
        [
            sys.executable,
            "-m",
            "degreesearch.cli",
            "generate",
            "--nodes",
            "10",
            "--m-attach",
            "1",
            "--out",
            str(tmp_path / "g.txt"),
        ],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "wrote 10 nodes" in result.stdout
