import json
from pathlib import Path

import pytest

from anysort.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_trace_multizip(capsys):
    code, out, _ = run(capsys, "trace", "--algo", "multizip", "--list", "5,1,8,7,2,6,4,3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 15
    first = lines[0].split("\t")
    assert first[:4] == ["1", "5", "1", "1"]
    assert first[4] != "NA" and first[5] != "NA"


def test_trace_corsort_rho_column(capsys):
    code, out, _ = run(capsys, "trace", "--algo", "corsort", "--list", "4,2,3,1,5")
    assert code == 0
    lines = [line.split("\t") for line in out.strip().splitlines()]
    assert [row[5] for row in lines] == ["6", "6", "2", "2", "2", "2", "0"]
    assert all(row[4] == "NA" for row in lines)  # no native estimator


def test_trace_single_item(capsys):
    code, out, _ = run(capsys, "trace", "--algo", "quicksort", "--list", "1")
    assert code == 0 and out == ""


def test_trace_usage_errors(capsys):
    assert run(capsys, "trace", "--algo", "quicksort", "--list", "1,2,x")[0] == 1
    assert run(capsys, "trace", "--algo", "quicksort", "--list", "1,3")[0] == 1
    assert run(capsys, "trace", "--algo", "nope", "--list", "1,2")[0] == 1


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert out.count("PASS") == 4 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--only", "estimator-poset")
    assert code == 0 and out.count("PASS") == 1


def test_bench_smoke_and_determinism(tmp_path: Path, capsys):
    out = tmp_path / "t.csv"
    args = ("bench", "termination", "--algos", "corsort", "--n", "8",
            "--trials", "10", "--seed", "1", "--out", str(out))
    assert run(capsys, *args)[0] == 0
    first = out.read_bytes()
    assert run(capsys, *args)[0] == 0
    assert out.read_bytes() == first
    assert len(first.decode().strip().splitlines()) == 2  # header + one row
    assert json.loads(out.with_suffix(".csv.json").read_text())["seed"] == 1


def test_bench_profile_with_plot(tmp_path: Path, capsys):
    out = tmp_path / "p.csv"
    code, _, err = run(
        capsys, "bench", "profile", "--algos", "corsort,asort", "--n", "10",
        "--trials", "8", "--seed", "2", "--checkpoints", "6",
        "--out", str(out), "--plot",
    )
    assert code == 0
    assert out.exists() and out.with_suffix(".png").exists()
    assert "figure:" in err


def test_bench_config_override(tmp_path: Path, capsys):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"trials": 5, "seed": 77}))
    out = tmp_path / "t.csv"
    code, *_ = run(
        capsys, "bench", "termination", "--algos", "corsort", "--n", "8",
        "--out", str(out), "--config", str(cfg_path),
    )
    assert code == 0
    assert json.loads(out.with_suffix(".csv.json").read_text())["seed"] == 77


def test_bench_runtime_failure(tmp_path: Path, capsys):
    code, _, err = run(
        capsys, "bench", "termination", "--algos", "corsort", "--n", "8",
        "--trials", "2", "--out", str(tmp_path / "missing" / "t.csv"),
    )
    assert code == 2


def test_bench_usage_error(capsys):
    code, *_ = run(capsys, "bench", "termination", "--algos", "nope",
                   "--n", "8", "--out", "/tmp/x.csv")
    assert code == 1
