import json

import numpy as np
import pytest

from swarm_sqp.cli import build_arg_parser, cli_run, config_from_args
from swarm_sqp.io import TraceReader

FAST = ["--runs", "2", "--iterations", "15", "--seed", "1"]


def test_unknown_problem_exits_2(capsys):
    assert cli_run(["--problem", "g99"]) == 2
    assert "g99" in capsys.readouterr().err


def test_unknown_strategy_exits_2():
    assert cli_run(["--problem", "g12", "--strategy", "sometimes"]) == 2


def test_bad_runs_exits_2():
    assert cli_run(["--problem", "g12", "--runs", "0"]) == 2


def test_missing_config_exits_2(tmp_path):
    assert cli_run(["--config", str(tmp_path / "nope.yaml")]) == 2


def test_flags_override_config(tmp_path):
    path = tmp_path / "exp.yaml"
    path.write_text("experiment:\n  runs: 4\n  seed: 9\n  problems: [g06]\n")
    args = build_arg_parser().parse_args(["--config", str(path), "--runs", "2", "--problem", "g12"])
    config = config_from_args(args)
    assert (config.runs, config.seed, config.problems) == (2, 9, ("g12",))


def test_flat_json_config(tmp_path, capsys):
    path = tmp_path / "exp.json"
    path.write_text(json.dumps({"problems": ["g12"], "runs": 1, "iterations": 5, "seed": 3}))
    assert cli_run(["--config", str(path)]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [(r["problem"], r["runs"]) for r in rows] == [("g12", 1)]


def test_json_report(capsys):
    assert cli_run(["--problem", "g12", *FAST]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert len(rows) == 1
    assert rows[0]["problem"] == "g12"
    assert rows[0]["runs"] == 2
    assert 0 <= rows[0]["success_pct"] <= 100


def test_identical_invocations_identical_output(tmp_path):
    outputs = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        assert cli_run(["--problem", "g12,g24", *FAST, "--out", str(out)]) == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_workers_do_not_change_results(tmp_path):
    single, pooled = tmp_path / "single.csv", tmp_path / "pooled.csv"
    assert cli_run(["--problem", "g24", *FAST, "--format", "csv", "--out", str(single)]) == 0
    assert cli_run(["--problem", "g24", *FAST, "--format", "csv", "--out", str(pooled), "--workers", "2"]) == 0
    assert single.read_text() == pooled.read_text()


def test_text_table_with_reference(tmp_path):
    out = tmp_path / "table.txt"
    assert cli_run(["--problem", "g24", *FAST, "--format", "text-table", "--compare-reference", "--out", str(out)]) == 0
    assert out.read_text().startswith("problem\truns\tf_star")
    comparison = (tmp_path / "table.txt.reference.txt").read_text()
    assert "ref_success_dms_pso" in comparison.splitlines()[0]


def test_trace_output(tmp_path):
    trace = tmp_path / "traces.jsonl.gz"
    assert cli_run(["--problem", "g24", *FAST, "--out", str(tmp_path / "r.json"), "--trace", str(trace)]) == 0
    with TraceReader(trace) as reader:
        traces = list(reader)
    assert [t["seed"] for t in traces] == [1, 2]
    assert len(traces[0]["records"]) == 15
    assert traces[0]["initial"]["iter"] == 0
    assert traces[0]["sqp_paths"][0]["path"][0]["fes"] == 1
    assert np.asarray(traces[0]["positions"][0]).shape == (60, 2)


@pytest.mark.parametrize("fmt", ["json", "csv", "text-table"])
def test_smoke_config(experiments_dir, tmp_path, fmt):
    out = tmp_path / "smoke"
    argv = ["--config", str(experiments_dir / "smoke.yaml"), "--problem", "g24", "--runs", "1",
            "--iterations", "10", "--format", fmt, "--out", str(out)]
    assert cli_run(argv) == 0
    assert "g24" in out.read_text()


def test_g12_report_layout_matches_golden(tmp_path, data_dir):
    out = tmp_path / "g12.txt"
    argv = ["--problem", "g12", *FAST, "--format", "text-table", "--compare-reference", "--out", str(out)]
    assert cli_run(argv) == 0
    header, row = out.read_text().splitlines()
    assert header + "\n" == (data_dir / "report_header.txt").read_text()
    assert row.split("\t")[:3] == ["g12", "2", "-1.000000"]
    comparison = (tmp_path / "g12.txt.reference.txt").read_text().splitlines()
    assert comparison[0] + "\n" == (data_dir / "reference_header.txt").read_text()
    assert len(comparison) == 2

    json_out = tmp_path / "g12.json"
    assert cli_run(["--problem", "g12", *FAST, "--out", str(json_out)]) == 0
    rows = json.loads(json_out.read_text())
    assert "\t".join(rows[0]) + "\n" == (data_dir / "report_header.txt").read_text()
