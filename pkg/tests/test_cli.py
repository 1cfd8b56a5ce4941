import subprocess
import sys

import pytest

from gallai import count_exact, generate_gnp, save_edge_list
from gallai.cli import cli_main

from oracles import complete_graph, cycle_graph

K3_TEXT = "3 3\n0 1\n0 2\n1 2\n"

CONFIG_TEXT = "n_values = 4\nc_values = 2.0\nseeds = 0\n"
K4_ROW = "4,2,1,0,6,4,6,exact,5.12574985726,0,0.854291642876,1.35402021864,0.630929753571,0,0"


@pytest.fixture
def k4_path(tmp_path):
    path = tmp_path / "k4.txt"
    save_edge_list(complete_graph(4), path)
    return str(path)


def test_gen_to_stdout(capsys):
    assert cli_main(["gen", "--n", "3", "--p", "1.0", "--seed", "0"]) == 0
    assert capsys.readouterr().out == K3_TEXT


def test_gen_to_file_then_stats(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert cli_main(["gen", "--n", "10", "--p", "0.5", "--seed", "4", "--out", str(out)]) == 0
    assert cli_main(["stats", "--in", str(out)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n=10"
    assert lines[1].startswith("edges=")
    assert lines[2].startswith("triangles=")
    assert lines[3].startswith("triangle_edges=")


def test_count_k4(k4_path, capsys):
    assert cli_main(["count", "--in", k4_path]) == 0
    out = capsys.readouterr().out
    assert "count=279" in out
    assert "capped=0" in out
    assert "free_edges=0" in out


def test_count_capped_exits_2(k4_path, capsys):
    assert cli_main(["count", "--in", k4_path, "--node-cap", "10"]) == 2
    captured = capsys.readouterr()
    assert "capped=1" in captured.out
    assert "no exact value" in captured.err


def test_estimate_naive_c4(tmp_path, capsys):
    path = tmp_path / "c4.txt"
    save_edge_list(cycle_graph(4), path)
    assert cli_main(["estimate", "--in", str(path), "--method", "naive", "--samples", "50"]) == 0
    out = capsys.readouterr().out
    assert "log3_estimate=4" in out
    assert "log3_stderr=0" in out
    assert "zero_hit=0" in out


def test_estimate_zero_hit_prints_bound(tmp_path, capsys):
    path = tmp_path / "k5.txt"
    save_edge_list(complete_graph(5), path)
    code = cli_main(
        ["estimate", "--in", str(path), "--method", "naive", "--samples", "10", "--seed", "2"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "zero_hit=1" in out
    assert "log3_upper_bound=" in out
    assert "log3_estimate" not in out


def test_estimate_knuth_runs(k4_path, capsys):
    assert cli_main(["estimate", "--in", k4_path, "--method", "knuth", "--samples", "200"]) == 0
    out = capsys.readouterr().out
    assert "method=knuth" in out


def test_sweep_to_stdout(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(CONFIG_TEXT)
    assert cli_main(["sweep", "--config", str(cfg)]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1] == K4_ROW


def test_sweep_to_file_with_plot(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("n_values = 6, 8\nc_values = 0.5, 1.0\nseeds = 0, 1\nsamples = 100\n")
    csv_path = tmp_path / "out.csv"
    png_path = tmp_path / "out.png"
    assert cli_main(["sweep", "--config", str(cfg), "--out", str(csv_path), "--plot", str(png_path)]) == 0
    text = csv_path.read_text(encoding="ascii")
    assert text.startswith("n,c,p,seed,")
    assert text.endswith("\n")
    assert len(text.splitlines()) == 9
    assert png_path.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_sweep_config_error_exits_1(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("n_values = 4\nc_values = 2.0\nseeds = 0\nwhat = 1\n")
    assert cli_main(["sweep", "--config", str(cfg)]) == 1
    assert "unknown key 'what'" in capsys.readouterr().err


def test_verify_exits_0(capsys):
    assert cli_main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "[PASS]" in out
    assert "[FAIL]" not in out


def test_usage_errors_exit_1(capsys):
    assert cli_main(["frobnicate"]) == 1
    assert cli_main([]) == 1
    assert cli_main(["count"]) == 1
    capsys.readouterr()


def test_help_exits_0(capsys):
    assert cli_main(["--help"]) == 0
    capsys.readouterr()


def test_parse_error_exits_1(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n1 1\n", encoding="ascii")
    assert cli_main(["count", "--in", str(path)]) == 1
    assert "loop edge" in capsys.readouterr().err


def test_bad_samples_exits_1(k4_path, capsys):
    assert cli_main(["estimate", "--in", k4_path, "--method", "knuth", "--samples", "0"]) == 1
    assert "samples must be >= 1" in capsys.readouterr().err


def test_capacity_error_exits_2(capsys):
    assert cli_main(["gen", "--n", "5000000000", "--p", "0.5", "--seed", "0"]) == 2
    assert "exceeds 64-bit indexing" in capsys.readouterr().err


def test_missing_file_exits_3(tmp_path, capsys):
    assert cli_main(["count", "--in", str(tmp_path / "absent.txt")]) == 3
    capsys.readouterr()


def test_console_script_round_trip():
    gen = subprocess.run(
        [sys.executable, "-c", "from gallai.cli import main; main()",
         "gen", "--n", "3", "--p", "1.0", "--seed", "0"],
        capture_output=True, text=True,
    )
    # argv[0] is the -c script; subcommand args follow
    assert gen.returncode == 0
    assert gen.stdout == K3_TEXT


def test_count_matches_library(tmp_path, capsys):
    g = generate_gnp(6, 0.6, 11)
    path = tmp_path / "g.txt"
    save_edge_list(g, path)
    assert cli_main(["count", "--in", str(path)]) == 0
    out = capsys.readouterr().out
    assert f"count={count_exact(g).count}" in out
