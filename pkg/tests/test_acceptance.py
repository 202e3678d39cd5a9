"""Full-budget benchmark runs; enable with --runslow."""

import pytest

from swarm_sqp.cli import cli_run
from swarm_sqp.hybrid import FinalOnly, first_success_study, run_hybrid, success_rate
from swarm_sqp.problem import SQP_FEASIBILITY_SLACK, is_feasible, success
from swarm_sqp.registry import lookup
from swarm_sqp.swarm import SwarmConfig

RUNS = 25

pytestmark = pytest.mark.slow


def _runs(name, iterations=10_000, runs=RUNS):
    problem = lookup(name).problem
    config = SwarmConfig(max_iterations=iterations)
    return [run_hybrid(problem, config, strategy=FinalOnly(), seed=seed) for seed in range(runs)]


@pytest.mark.parametrize("name", ["g01", "g04", "g06", "g08", "g11", "g12", "g24"])
def test_easy_problems_succeed(name):
    results = _runs(name)
    assert success_rate(results) >= 92.0
    assert sum(r.feasible for r in results) >= 23


@pytest.mark.parametrize("name", ["g06", "g11", "g12", "g24"])
def test_easy_problems_short_budget(name):
    assert success_rate(_runs(name, iterations=1000)) == 100.0


@pytest.mark.parametrize("name, f_star", [("g05", 5126.496714), ("g07", 24.306209), ("g09", 680.630057)])
def test_refinement_rescues_hard_problems(name, f_star):
    results = _runs(name)
    assert success_rate(results) >= 80.0
    for r in results:
        if r.success:
            assert is_feasible(r.final.report, SQP_FEASIBILITY_SLACK)
            assert success(r.final.f, f_star)


@pytest.mark.parametrize("name", ["g06", "g09", "g11", "g15"])
def test_probe_succeeds_from_first_iteration(name):
    problem = lookup(name).problem
    config = SwarmConfig(max_iterations=200)
    hits = sum(first_success_study(problem, config, seed=seed).first_success_fe == 0 for seed in range(RUNS))
    assert hits >= 20


@pytest.mark.parametrize("name", ["g21", "g22"])
def test_no_success_without_feasible_seed(name):
    results = _runs(name)
    assert success_rate(results) == 0.0
    assert not any(r.success for r in results)


def test_cli_example(tmp_path):
    out = tmp_path / "g12.json"
    assert cli_run(["--problem", "g12", "--runs", "5", "--seed", "1", "--strategy", "final", "--out", str(out)]) == 0
    assert '"success_pct":100.0' in out.read_text().replace(" ", "")
