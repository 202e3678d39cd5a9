from dataclasses import replace
from types import SimpleNamespace

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from swarm_sqp.hybrid import (
    EveryIteration,
    FinalOnly,
    OnGbestImprovement,
    PeriodicRandomSeeds,
    feasibility_rate,
    first_success_study,
    mean_fes_to_accuracy,
    run_hybrid,
    success_rate,
)
from swarm_sqp.logic import solution_key
from swarm_sqp.problem import ProblemDefinition
from swarm_sqp.registry import lookup
from swarm_sqp.sqp import SqpConfig
from swarm_sqp.swarm import BALANCED, CoefficientSet, SubSwarm, SwarmConfig, run


def _config(iterations=30):
    sub_swarms = (SubSwarm(5, CoefficientSet(0.9, 2.0, 2.0)), SubSwarm(5, BALANCED))
    return SwarmConfig(sub_swarms=sub_swarms, max_iterations=iterations)


def _bowl():
    """Convex with a linear constraint: SQP succeeds from anywhere."""
    return ProblemDefinition.from_callables(
        "bowl", [-10, -10], [10, 10], lambda x: float((x[0] - 3) ** 2 + (x[1] - 3) ** 2),
        inequalities=[lambda x: x[0] + x[1] - 2], f_star=8.0,
    )


def _fake(f, feasible=True, f_star=0.0, first_success_fe=None):
    return SimpleNamespace(
        problem=SimpleNamespace(f_star=f_star),
        final=SimpleNamespace(f=f), feasible=feasible,
        pso_final=SimpleNamespace(f=f), pso_feasible=feasible,
        first_success_fe=first_success_fe,
        success=None if f_star is None else feasible and abs(f - f_star) <= 1e-4,
    )


# --- strategies ---

def test_periodic_validation():
    with pytest.raises(ValueError):
        PeriodicRandomSeeds(period=0)
    with pytest.raises(ValueError):
        PeriodicRandomSeeds(seeds=0)


def test_periodic_launch_points():
    strategy = PeriodicRandomSeeds(period=10, seeds=3)
    state = SimpleNamespace(iteration=20, size=8, pbest_x=np.arange(16.0).reshape(8, 2))
    points = strategy.launch_points(state, False, np.random.default_rng(0))
    assert len(points) == 3
    assert len({p.tobytes() for p in points}) == 3
    assert strategy.launch_points(SimpleNamespace(iteration=15), False, None) == []
    assert strategy.launch_points(SimpleNamespace(iteration=0), False, None) == []


# --- run_hybrid ---

def test_final_only_refines_once_and_shares_ledger():
    result = run_hybrid(lookup("g06").problem, _config(), strategy=FinalOnly(), seed=3)
    assert len(result.sqp_results) == 1
    assert result.sqp_final is result.sqp_results[0]
    assert result.ledger.sqp_fes == result.sqp_results[0].fes
    assert result.ledger.pso_fes == 10 * 31
    assert result.ledger.total_fes == result.ledger.pso_fes + result.ledger.sqp_fes
    assert result.probe_ledger is None
    assert 0 <= result.sqp_fe_share <= 100


def test_disabled_refinement_equals_pso():
    result = run_hybrid(lookup("g06").problem, _config(), SqpConfig(max_iterations=0), FinalOnly(), seed=5)
    assert result.final.f == result.pso_final.f
    np.testing.assert_array_equal(result.final.x, result.pso_final.x)


def test_pso_trajectory_unchanged_by_refinement():
    problem = lookup("g06").problem
    alone = run(problem, replace(_config(40), seed=11))
    hybrid = run_hybrid(problem, _config(40), strategy=OnGbestImprovement(), seed=11)
    assert hybrid.trace.to_dict()["records"] == alone.to_dict()["records"]


def test_trace_dict_carries_sqp_paths():
    result = run_hybrid(lookup("g06").problem, _config(), strategy=OnGbestImprovement(), seed=2)
    d = result.trace_dict()
    assert d["records"] == result.trace.to_dict()["records"]
    assert len(d["sqp_paths"]) == len(result.sqp_results) >= 1
    for path, res in zip(d["sqp_paths"], result.sqp_results):
        assert path["status"] == res.status
        assert len(path["path"]) == len(res.history)
        assert path["path"][-1]["x"] == path["x"]


@pytest.mark.parametrize("seed", range(5))
def test_hybrid_never_worse_than_pso(seed):
    result = run_hybrid(lookup("g09").problem, _config(), strategy=FinalOnly(), seed=seed)
    assert (solution_key(result.final.f, result.final.report, result.final_slack)
            <= solution_key(result.pso_final.f, result.pso_final.report, 0.0))


def test_improvement_strategy_refines_distinct_points():
    result = run_hybrid(lookup("g06").problem, _config(), strategy=OnGbestImprovement(), seed=2)
    assert len(result.sqp_results) >= 1
    starts = {r.history[0][0].tobytes() for r in result.sqp_results}
    assert len(starts) == len(result.sqp_results)
    assert result.ledger.sqp_fes == sum(r.fes for r in result.sqp_results)


def test_periodic_strategy_launch_count():
    result = run_hybrid(lookup("g06").problem, _config(30), strategy=PeriodicRandomSeeds(period=10, seeds=2), seed=4)
    # iterations 10, 20, 30 with two seeds each, plus the final gbest
    assert 1 <= len(result.sqp_results) <= 7


def test_every_iteration_probes_on_side_ledger():
    result = run_hybrid(_bowl(), _config(8), strategy=EveryIteration(), seed=1)
    assert len(result.probe_flags) == 9
    assert result.probe_flags[0]
    assert result.first_success_fe == 0
    assert result.first_success_sqp_fes > 0
    assert result.probe_ledger.sqp_fes > 0
    assert result.probe_ledger.pso_fes == 0
    # only the final refinement is charged to the run
    assert result.ledger.sqp_fes == sum(r.fes for r in result.sqp_results)
    assert result.success


def test_first_success_study():
    study = first_success_study(_bowl(), _config(5), seed=2)
    assert study.first_success_fe == 0
    assert len(study.probe_flags) == 6
    assert study.result.problem.name == "bowl"


def test_first_success_study_needs_optimum():
    with pytest.raises(ValueError, match="no known optimum"):
        first_success_study(lookup("g20").problem, _config(2))


def test_no_probing_without_optimum():
    result = run_hybrid(lookup("g20").problem, _config(3), SqpConfig(max_iterations=2), EveryIteration(), seed=0)
    assert result.probe_flags == []
    assert result.first_success_fe is None
    assert result.success is None


def test_sqp_skipped_without_evaluable_gbest():
    problem = ProblemDefinition.from_callables("void", [0, 0], [1, 1], lambda x: float("inf"), f_star=0.0)
    result = run_hybrid(problem, _config(3), strategy=FinalOnly(), seed=0)
    assert result.sqp_final is None
    assert result.sqp_results == []
    assert result.final_phase == "pso"
    assert not result.success


def test_seeded_runs_are_identical():
    a = run_hybrid(lookup("g06").problem, _config(), strategy=PeriodicRandomSeeds(period=5, seeds=2), seed=8)
    b = run_hybrid(lookup("g06").problem, _config(), strategy=PeriodicRandomSeeds(period=5, seeds=2), seed=8)
    assert a.to_dict() == b.to_dict()


def test_result_to_dict():
    d = run_hybrid(_bowl(), _config(5), seed=0).to_dict()
    assert d["problem"] == "bowl"
    assert d["final_phase"] in ("pso", "sqp")
    assert d["ledger"]["total_fes"] == d["ledger"]["pso_fes"] + d["ledger"]["sqp_fes"]
    assert len(d["sqp"]) == 1


# --- statistics ---

def test_success_rate_all_succeed():
    assert success_rate([_fake(0.0)] * 25) == 100.0


def test_success_rate_seven_of_ten():
    results = [_fake(0.0)] * 7 + [_fake(1.0)] * 2 + [_fake(0.0, feasible=False)]
    assert success_rate(results) == 70.0
    assert feasibility_rate(results) == 90.0


def test_success_rate_without_optimum():
    assert success_rate([_fake(0.0, f_star=None)]) is None


def test_success_rate_needs_results():
    with pytest.raises(ValueError):
        success_rate([])


def test_success_rate_by_phase():
    r = _fake(0.0)
    r.pso_final = SimpleNamespace(f=5.0)
    assert success_rate([r], phase="pso") == 0.0
    assert success_rate([r]) == 100.0


@given(st.lists(st.booleans(), min_size=1, max_size=40))
def test_success_rate_multiple_of_one_over_k(flags):
    rate = success_rate([_fake(0.0 if ok else 1.0) for ok in flags])
    k = len(flags)
    assert rate == pytest.approx(100.0 * sum(flags) / k, abs=0.005)


def test_mean_fes_to_accuracy():
    assert mean_fes_to_accuracy([_fake(1.0)] * 3) is None
    assert mean_fes_to_accuracy([_fake(0.0, first_success_fe=500)]) == 500.0
    results = [_fake(0.0, first_success_fe=100), _fake(0.0, first_success_fe=300), _fake(1.0)]
    assert mean_fes_to_accuracy(results) == 200.0


def test_mean_fes_to_accuracy_ignores_failed_runs():
    # a transient success that the final answer lost
    results = [_fake(1.0, first_success_fe=100), _fake(0.0, first_success_fe=300)]
    assert mean_fes_to_accuracy(results) == 300.0
    assert mean_fes_to_accuracy([_fake(0.0, feasible=False, first_success_fe=50)]) is None
