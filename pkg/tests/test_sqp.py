import numpy as np
import pytest

from swarm_sqp.problem import EPSILON, EvaluationLedger, ProblemDefinition, evaluate, success
from swarm_sqp.qp import solve_qp
from swarm_sqp.registry import lookup
from swarm_sqp.sqp import (
    SqpConfig,
    bfgs_update,
    build_qp,
    fd_gradient,
    merit_line_search,
    restore_feasibility,
    solve_elastic,
    sqp_solve,
)


def _parabola():
    return ProblemDefinition.from_callables("parabola", [-5], [5], lambda x: float(x[0] ** 2))


def _bowl():
    """(x1 - 3)^2 + (x2 - 3)^2 subject to x1 + x2 <= 2."""
    return ProblemDefinition.from_callables(
        "bowl", [-10, -10], [10, 10], lambda x: float((x[0] - 3) ** 2 + (x[1] - 3) ** 2),
        inequalities=[lambda x: x[0] + x[1] - 2],
    )


# --- finite differences ---

def test_fd_gradient_square():
    assert fd_gradient(lambda x: x[0] ** 2, np.array([3.0]), h=1e-7)[0] == pytest.approx(6.0, abs=1e-5)


def test_fd_gradient_linear():
    for x in (-4.0, 0.0, 7.5):
        assert fd_gradient(lambda z: 2 * z[0] + 1, np.array([x]))[0] == pytest.approx(2.0, rel=1e-6)


def test_fd_gradient_g06_analytic():
    problem = lookup("g06").problem
    x = np.array([50.0, 50.0])
    expected = np.array([3 * (x[0] - 10) ** 2, 3 * (x[1] - 20) ** 2])
    np.testing.assert_allclose(fd_gradient(problem.objective, x), expected, rtol=1e-4)


def test_fd_gradient_g11_analytic():
    problem = lookup("g11").problem
    x = np.array([0.3, 0.2])
    np.testing.assert_allclose(fd_gradient(problem.objective, x), [0.6, -1.6], rtol=1e-4)


def test_fd_gradient_error_is_first_order():
    x = np.array([1.0])
    errors = [abs(fd_gradient(lambda z: z[0] ** 3, x, h=h)[0] - 3.0) for h in (1e-4, 1e-5, 1e-6)]
    # error ~ 3h for a cubic at 1
    for err, h in zip(errors, (1e-4, 1e-5, 1e-6)):
        assert err == pytest.approx(3 * h, rel=0.1)


def test_fd_gradient_charges_sqp_fes():
    ledger = EvaluationLedger()
    fd_gradient(lambda z: float(z @ z), np.ones(3), ledger=ledger)
    assert ledger.sqp_fes == 4
    fd_gradient(lambda z: float(z @ z), np.ones(3), ledger=ledger, f0=3.0)
    assert ledger.sqp_fes == 7
    assert ledger.pso_fes == 0


def test_fd_gradient_steps_back_at_upper_bound():
    seen = []

    def fn(z):
        seen.append(z.copy())
        return float(z[0] ** 2)

    grad = fd_gradient(fn, np.array([1.0]), h=1e-6, upper=np.array([1.0]))
    assert all(z[0] <= 1.0 for z in seen)
    assert grad[0] == pytest.approx(2.0, abs=1e-5)


def test_fd_jacobian_of_vector_function():
    J = fd_gradient(lambda z: np.array([z[0] * z[1], z[0] + 2 * z[1]]), np.array([2.0, 3.0]))
    np.testing.assert_allclose(J, [[3.0, 2.0], [1.0, 2.0]], rtol=1e-6)


def test_fd_gradient_rejects_bad_step():
    with pytest.raises(ValueError):
        fd_gradient(lambda z: z[0], np.zeros(1), h=0.0)


# --- BFGS ---

def test_bfgs_fixed_point():
    B = np.array([[2.0, 0.5], [0.5, 1.0]])
    s = np.array([0.3, -0.7])
    np.testing.assert_allclose(bfgs_update(B, s, B @ s), B, atol=1e-12)


def test_bfgs_learns_quadratic_hessian():
    H = np.diag([2.0, 4.0])
    B = np.eye(2)
    for s in np.eye(2):
        B = bfgs_update(B, s, H @ s)
    np.testing.assert_allclose(B, H, atol=1e-8)


def test_bfgs_stays_positive_definite():
    rng = np.random.default_rng(7)
    negative = 0
    for _ in range(10_000):
        n = int(rng.integers(1, 5))
        M = rng.normal(size=(n, n))
        B = M @ M.T + 0.1 * np.eye(n)
        s = rng.normal(size=n)
        y = rng.normal(size=n) * rng.choice([0.1, 1.0, 10.0])
        negative += s @ y < 0
        B_new = bfgs_update(B, s, y)
        np.testing.assert_allclose(B_new, B_new.T)
        assert np.linalg.eigvalsh(B_new).min() > 0
    assert negative > 1000


# --- QP assembly ---

def test_build_qp_newton_step_on_identity():
    x = np.zeros(2)
    qp = build_qp(x, np.eye(2), np.array([1.0, 2.0]), np.zeros(0), np.zeros((0, 2)), np.full(2, -100.0), np.full(2, 100.0))
    np.testing.assert_allclose(solve_qp(qp).d, [-1.0, -2.0])


def test_build_qp_linear_constraint_row():
    qp = build_qp(np.array([1.0]), np.eye(1), np.zeros(1), np.array([1.0]), np.array([[1.0]]),
                  np.array([-10.0]), np.array([10.0]))
    # d1 + 1 <= 0
    np.testing.assert_array_equal(qp.A_in[0], [1.0])
    assert qp.b_in[0] == -1.0
    assert qp.n_general == 1


def test_build_qp_bound_rows():
    qp = build_qp(np.array([3.0]), np.eye(1), np.zeros(1), np.zeros(0), np.zeros((0, 1)),
                  np.array([0.0]), np.array([10.0]))
    np.testing.assert_array_equal(qp.A_in, [[1.0], [-1.0]])
    np.testing.assert_array_equal(qp.b_in, [7.0, 3.0])


def test_elastic_mode_handles_inconsistent_rows():
    # d <= -1 and -d <= -1 cannot both hold; bounds stay hard
    A = np.array([[1.0], [-1.0]])
    qp = build_qp(np.zeros(1), np.eye(1), np.zeros(1), np.array([1.0, 1.0]), A, np.array([-5.0]), np.array([5.0]))
    assert solve_qp(qp).status == "infeasible"
    sol = solve_elastic(qp)
    assert sol.status == "optimal"
    assert -5.0 <= sol.d[0] <= 5.0


# --- line search ---

def test_line_search_full_newton_step():
    problem = _parabola()
    x = np.array([1.0])
    ls = merit_line_search(problem, x, np.array([-1.0]), 0.0, EvaluationLedger(), grad=np.array([2.0]))
    assert ls.success and ls.alpha == 1.0
    assert ls.x[0] == 0.0


def test_line_search_zero_direction():
    problem = _parabola()
    ledger = EvaluationLedger()
    x = np.array([1.0])
    f0, report0 = evaluate(problem, x, EPSILON, ledger, "sqp")
    ls = merit_line_search(problem, x, np.zeros(1), 1.0, ledger, f0, report0)
    assert ls.success and ls.alpha == 1.0 and ls.n_evals == 0
    assert ls.f == f0
    np.testing.assert_array_equal(ls.x, x)


def test_line_search_failure_on_ascent_direction():
    problem = _parabola()
    ledger = EvaluationLedger()
    x = np.array([1.0])
    f0, report0 = evaluate(problem, x, EPSILON, ledger, "sqp")
    ls = merit_line_search(problem, x, np.array([1.0]), 0.0, ledger, f0, report0, grad=np.array([2.0]))
    assert not ls.success
    assert ls.n_evals == 21
    assert ledger.sqp_fes == 22
    np.testing.assert_array_equal(ls.x, x)


# --- config ---

def test_config_validation():
    with pytest.raises(ValueError):
        SqpConfig(tol_x=0.0)
    with pytest.raises(ValueError):
        SqpConfig(c1=1.5)
    with pytest.raises(ValueError):
        SqpConfig(variable_scaling="log")
    with pytest.raises(ValueError, match="Unknown keys"):
        SqpConfig.from_dict({"tolerance": 1.0})
    config = SqpConfig.from_dict({"max_iterations": 5, "initial_hessian": [[2, 0], [0, 2]]})
    assert config.initial_hessian == ((2.0, 0.0), (0.0, 2.0))


# --- solver ---

def test_single_step_on_convex_quadratic():
    config = SqpConfig(initial_hessian=((2.0, 0.0), (0.0, 2.0)))
    res = sqp_solve(_bowl(), np.zeros(2), config)
    first_iterate = res.history[1][0]
    np.testing.assert_allclose(first_iterate, [1.0, 1.0], atol=1e-6)
    np.testing.assert_allclose(res.x, [1.0, 1.0], atol=1e-6)
    assert res.feasible


def test_bounds_scaling_reaches_same_point():
    res = sqp_solve(_bowl(), np.array([-4.0, 2.0]), SqpConfig(variable_scaling="bounds"))
    np.testing.assert_allclose(res.x, [1.0, 1.0], atol=1e-5)
    assert res.feasible


def test_g11_near_optimizer_converges():
    problem = lookup("g11").problem
    res = sqp_solve(problem, np.array([-0.7, 0.5]))
    assert res.status != "qp_infeasible"
    assert res.feasible
    assert abs(res.f - 0.7499) <= 1e-4
    assert success(res.f, problem.f_star)


def test_g11_from_centre_stays_feasible():
    problem = lookup("g11").problem
    res = sqp_solve(problem, np.zeros(2))
    assert res.feasible
    # either escapes to an optimum or stops on the central stationary point
    assert success(res.f, problem.f_star) or abs(res.f - 1.0) < 1e-3


def test_g08_trapped_in_suboptimal_region():
    problem = lookup("g08").problem
    res = sqp_solve(problem, np.array([1.74, 4.74]))
    assert res.feasible
    assert not success(res.f, problem.f_star)


def test_zero_iterations_returns_start():
    ledger = EvaluationLedger()
    res = sqp_solve(_bowl(), np.array([20.0, 0.0]), SqpConfig(max_iterations=0), ledger)
    assert res.status == "max_iter"
    np.testing.assert_array_equal(res.x, [10.0, 0.0])
    assert res.fes == 1 == ledger.sqp_fes


def test_fes_equal_ledger_delta():
    ledger = EvaluationLedger(pso_fes=500, sqp_fes=7)
    res = sqp_solve(lookup("g06").problem, np.array([14.5, 1.0]), ledger=ledger)
    assert res.fes == ledger.sqp_fes - 7
    assert ledger.pso_fes == 500


def test_non_finite_start():
    problem = lookup("g08").problem
    res = sqp_solve(problem, np.zeros(2))
    assert res.status == "non_finite"
    assert not res.feasible


def test_converged_status_implies_tolerances():
    res = sqp_solve(lookup("g06").problem, np.array([14.2, 1.0]))
    if res.status == "converged":
        assert res.kkt_residual <= SqpConfig().tol_fun
        assert res.report.max_violation <= SqpConfig().feasibility_slack


def test_result_to_dict_fields():
    res = sqp_solve(_bowl(), np.zeros(2), SqpConfig(max_iterations=3))
    assert set(res.to_dict()) == {"x", "f", "max_violation", "status", "iterations", "fes", "kkt_residual"}


def test_path_dict_follows_history():
    res = sqp_solve(_bowl(), np.zeros(2), SqpConfig(max_iterations=3))
    d = res.path_dict()
    assert len(d["path"]) == len(res.history)
    assert d["path"][0]["x"] == [0.0, 0.0]
    assert d["path"][-1]["x"] == d["x"]
    assert [p["fes"] for p in d["path"]] == sorted(p["fes"] for p in d["path"])
    assert d["path"][-1]["fes"] <= d["fes"]


# --- feasibility restoration ---

def _disc():
    """x1 + x2 over the unit disc."""
    return ProblemDefinition.from_callables(
        "disc", [-2, -2], [2, 2], lambda x: float(x[0] + x[1]),
        inequalities=[lambda x: x[0] ** 2 + x[1] ** 2 - 1.0],
    )


def test_build_qp_margin_tightens_general_rows_only():
    qp = build_qp(np.array([1.0]), np.eye(1), np.zeros(1), np.array([0.0, -3.0]), np.array([[1.0], [2.0]]),
                  np.array([-10.0]), np.array([10.0]), margin=1e-10)
    np.testing.assert_allclose(qp.b_in[:2], [-1e-10, 3.0 - 4e-10], rtol=0, atol=1e-16)
    np.testing.assert_array_equal(qp.b_in[2:], [9.0, 11.0])


def test_restoration_pulls_point_inside():
    problem = _disc()
    ledger = EvaluationLedger()
    x = np.array([-np.sqrt(0.5), -np.sqrt(0.5)]) * (1 + 1e-9)
    f, report = evaluate(problem, x, EPSILON, ledger, "sqp")
    assert report.max_violation > 1e-12
    x_new, f_new, report_new, steps = restore_feasibility(problem, x, f, report, ledger)
    assert steps >= 1
    assert report_new.max_violation <= 1e-12
    assert abs(f_new - f) < 1e-8
    assert ledger.pso_fes == 0 and ledger.sqp_fes == 1 + 3 * steps


def test_restoration_skips_far_infeasible_points():
    problem = _disc()
    ledger = EvaluationLedger()
    x = np.array([1.5, 1.5])
    f, report = evaluate(problem, x, EPSILON, ledger, "sqp")
    x_new, _, _, steps = restore_feasibility(problem, x, f, report, ledger)
    assert steps == 0
    np.testing.assert_array_equal(x_new, x)
    assert ledger.sqp_fes == 1


@pytest.mark.parametrize("start", [(16.56, 1.65), (14.2, 1.0)])
def test_g06_ends_within_sqp_slack(start):
    problem = lookup("g06").problem
    res = sqp_solve(problem, np.array(start))
    assert res.report.max_violation <= 1e-12
    assert res.feasible
    assert success(res.f, problem.f_star)


def test_g05_near_optimum_ends_within_sqp_slack():
    entry = lookup("g05")
    start = entry.x_star + np.array([0.5, -0.5, 0.001, -0.001])
    res = sqp_solve(entry.problem, start)
    assert res.report.max_violation <= 1e-12
    assert res.feasible
    assert success(res.f, entry.problem.f_star)
