# swarm_sqp/sqp.py
"""
Sequential quadratic programming local solver.

Each major iteration linearizes the constraints around x with forward
differences, solves a QP built from a BFGS approximation of the Lagrangian
Hessian, and backtracks along the QP step on an l1 merit function.
Equalities enter through their relaxed pair h - eps <= 0 and -h - eps <= 0,
so the SQP judges feasibility exactly as the swarm does at the final eps.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from swarm_sqp.problem import (
    EPSILON,
    SQP_FEASIBILITY_SLACK,
    ConstraintReport,
    EvaluationLedger,
    ProblemDefinition,
    evaluate,
    is_feasible,
    scale_problem,
)
from swarm_sqp.qp import QpSolution, QpSubproblem, solve_qp

logger = logging.getLogger(__name__)

SQP_STATUSES = ("converged", "step_tolerance", "max_iter", "qp_infeasible", "line_search_failure", "non_finite")
SCALINGS = ("none", "bounds")
_SQRT_EPS = float(np.sqrt(np.finfo(float).eps))


@dataclass(frozen=True)
class SqpConfig:
    tol_x: float = 1e-12
    tol_con: float = 1e-14
    tol_fun: float = 1e-14
    feasibility_slack: float = SQP_FEASIBILITY_SLACK
    max_iterations: int = 100
    fd_step: Optional[float] = None           # None: sqrt(machine eps) * (1 + |x_d|)
    epsilon: float = EPSILON
    c1: float = 1e-4
    alpha_floor: float = 2.0 ** -20
    initial_hessian: Optional[Tuple[Tuple[float, ...], ...]] = None
    variable_scaling: str = "none"
    constraint_margin: float = 1e-10         # QP rows target c <= -margin * (1 + |c|)
    restoration_steps: int = 5
    restoration_threshold: float = 1e-6

    def __post_init__(self) -> None:
        for name in ("tol_x", "tol_con", "tol_fun", "feasibility_slack"):
            if not getattr(self, name) > 0:
                raise ValueError(f"SQP tolerance '{name}' must be > 0, got {getattr(self, name)}")
        if self.max_iterations < 0:
            raise ValueError(f"max_iterations must be >= 0, got {self.max_iterations}")
        if self.fd_step is not None and not self.fd_step > 0:
            raise ValueError(f"fd_step must be > 0, got {self.fd_step}")
        if self.epsilon < 0:
            raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")
        if not 0 < self.c1 < 1:
            raise ValueError(f"c1 must be in (0, 1), got {self.c1}")
        if not 0 < self.alpha_floor <= 1:
            raise ValueError(f"alpha_floor must be in (0, 1], got {self.alpha_floor}")
        if self.constraint_margin < 0:
            raise ValueError(f"constraint_margin must be >= 0, got {self.constraint_margin}")
        if self.restoration_steps < 0:
            raise ValueError(f"restoration_steps must be >= 0, got {self.restoration_steps}")
        if self.variable_scaling not in SCALINGS:
            raise ValueError(f"Unknown variable_scaling '{self.variable_scaling}', expected one of {SCALINGS}")

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "SqpConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"Unknown keys in 'sqp': {sorted(unknown)}. Valid keys: {sorted(known)}")
        d = dict(d)
        if d.get("initial_hessian") is not None:
            d["initial_hessian"] = tuple(tuple(float(v) for v in row) for row in d["initial_hessian"])
        return cls(**d)


@dataclass(eq=False)
class SqpResult:
    x: NDArray[np.float64]
    f: float
    report: ConstraintReport
    status: str
    iterations: int
    fes: int
    kkt_residual: float
    history: List[Tuple[NDArray[np.float64], float, float, int]] = field(default_factory=list)

    @property
    def feasible(self) -> bool:
        return is_feasible(self.report, SQP_FEASIBILITY_SLACK)

    def to_dict(self) -> Dict[str, Any]:
        def num(v: float) -> Optional[float]:
            return float(v) if np.isfinite(v) else None

        return {
            "x": [num(v) for v in self.x],
            "f": num(self.f),
            "max_violation": num(self.report.max_violation),
            "status": self.status,
            "iterations": self.iterations,
            "fes": self.fes,
            "kkt_residual": num(self.kkt_residual),
        }

    def path_dict(self) -> Dict[str, Any]:
        """Summary plus the accepted iterates, start first."""
        def num(v: float) -> Optional[float]:
            return float(v) if np.isfinite(v) else None

        d = self.to_dict()
        d["path"] = [
            {"x": [num(v) for v in x], "f": num(f), "max_violation": num(v), "fes": fes}
            for x, f, v, fes in self.history
        ]
        return d


class LineSearchResult(NamedTuple):
    alpha: float
    x: NDArray[np.float64]
    f: float
    report: Optional[ConstraintReport]
    success: bool
    n_evals: int


def fd_gradient(
    fn: Callable[[NDArray[np.float64]], Any],
    x: NDArray[np.float64],
    h: Optional[float] = None,
    ledger: Optional[EvaluationLedger] = None,
    f0: Any = None,
    upper: Optional[NDArray[np.float64]] = None,
) -> NDArray[np.float64]:
    """
    Forward-difference gradient (scalar fn) or Jacobian (vector fn).

    Args:
        fn: Function of an n-vector.
        x: Base point.
        h: Step; default sqrt(machine eps) * (1 + |x_d|) per dimension.
        ledger: When given, every call of fn is charged to the sqp phase
            (n calls, or n + 1 when f0 is not supplied).
        f0: Cached fn(x).
        upper: Steps that would leave the box are taken backwards instead.

    Returns:
        (n,) gradient, or (m, n) Jacobian for a vector fn. Non-finite
        samples propagate into the result.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    calls = 0
    if f0 is None:
        f0 = fn(x)
        calls += 1
    f0 = np.asarray(f0, dtype=float)
    steps = _SQRT_EPS * (1.0 + np.abs(x)) if h is None else np.full(n, float(h))
    if h is not None and h <= 0:
        raise ValueError(f"finite-difference step must be > 0, got {h}")
    columns = []
    with np.errstate(all="ignore"):
        for i in range(n):
            step = steps[i]
            if upper is not None and x[i] + step > upper[i]:
                step = -step
            xi = x.copy()
            xi[i] += step
            columns.append((np.asarray(fn(xi), dtype=float) - f0) / step)
            calls += 1
    if ledger is not None:
        ledger.charge("sqp", calls)
    if f0.ndim == 0:
        return np.array(columns, dtype=float)
    return np.column_stack(columns) if columns else np.zeros((f0.size, 0))


def bfgs_update(B: NDArray[np.float64], s: NDArray[np.float64], y: NDArray[np.float64], theta: float = 0.2) -> NDArray[np.float64]:
    """
    Powell-damped BFGS update; keeps B symmetric positive definite.
    """
    Bs = B @ s
    sBs = float(s @ Bs)
    if not sBs > 0:
        return B
    sy = float(s @ y)
    if sy < theta * sBs:
        phi = (1.0 - theta) * sBs / (sBs - sy)
        y = phi * y + (1.0 - phi) * Bs
        sy = float(s @ y)
    B_new = B - np.outer(Bs, Bs) / sBs + np.outer(y, y) / sy
    return 0.5 * (B_new + B_new.T)


def build_qp(
    x: NDArray[np.float64],
    B: NDArray[np.float64],
    grad: NDArray[np.float64],
    c: NDArray[np.float64],
    A: NDArray[np.float64],
    lower: NDArray[np.float64],
    upper: NDArray[np.float64],
    margin: float = 0.0,
) -> QpSubproblem:
    """
    QP in the step d: rows A d <= -c - margin * (1 + |c|) for the linearized
    constraints c(x) <= 0, then d <= upper - x and -d <= x - lower.
    """
    n = x.size
    A = np.asarray(A, dtype=float).reshape(-1, n)
    c = np.asarray(c, dtype=float)
    eye = np.eye(n)
    return QpSubproblem(
        H=B,
        g=grad,
        A_in=np.vstack([A, eye, -eye]),
        b_in=np.concatenate([-c - margin * (1.0 + np.abs(c)), upper - x, x - lower]),
        n_general=A.shape[0],
    )


def solve_elastic(qp: QpSubproblem, delta: float = 1e-6) -> QpSolution:
    """
    Fallback for inconsistent linearizations.

    First minimize the total violation s of the general rows (bound rows
    stay hard), then re-solve the original QP with those rows loosened by s.
    """
    n, k = qp.n, qp.n_general
    A_gen, b_gen = qp.A_in[:k], qp.b_in[:k]
    A_bnd, b_bnd = qp.A_in[k:], qp.b_in[k:]
    span = np.ones(n)
    if A_bnd.shape[0] == 2 * n:
        span = np.maximum(b_bnd[:n] + b_bnd[n:], 1e-12)

    phase1 = QpSubproblem(
        H=np.diag(np.concatenate([delta / span ** 2, np.full(k, delta)])),
        g=np.concatenate([np.zeros(n), np.ones(k)]),
        A_in=np.vstack([
            np.hstack([A_gen, -np.eye(k)]),
            np.hstack([A_bnd, np.zeros((A_bnd.shape[0], k))]),
            np.hstack([np.zeros((k, n)), -np.eye(k)]),
        ]),
        b_in=np.concatenate([b_gen, b_bnd, np.zeros(k)]),
    )
    first = solve_qp(phase1)
    if first.status != "optimal":
        return first._replace(d=np.zeros(n), multipliers=np.zeros(qp.A_in.shape[0]))
    s = np.maximum(first.d[n:], 0.0)
    logger.debug("Elastic mode: total linearized violation %.3E", float(s.sum()))
    relaxed = QpSubproblem(
        H=qp.H, g=qp.g, A_in=qp.A_in,
        b_in=np.concatenate([b_gen + s + 1e-10 * (1.0 + np.abs(b_gen)), b_bnd]),
        A_eq=qp.A_eq, b_eq=qp.b_eq, n_general=k,
    )
    return solve_qp(relaxed)


def merit_line_search(
    problem: ProblemDefinition,
    x: NDArray[np.float64],
    d: NDArray[np.float64],
    mu: float,
    ledger: EvaluationLedger,
    f0: Optional[float] = None,
    report0: Optional[ConstraintReport] = None,
    grad: Optional[NDArray[np.float64]] = None,
    c: Optional[NDArray[np.float64]] = None,
    A: Optional[NDArray[np.float64]] = None,
    config: Optional[SqpConfig] = None,
) -> LineSearchResult:
    """
    Backtrack alpha = 1, 1/2, ... down to the floor until the l1 merit
    f + mu * total_violation satisfies the Armijo condition. One FE per
    trial; without `grad` the predicted decrease is taken as zero.
    """
    config = config or SqpConfig()
    x = np.asarray(x, dtype=float)
    d = np.asarray(d, dtype=float)
    n_evals = 0
    if f0 is None or report0 is None:
        f0, report0 = evaluate(problem, x, config.epsilon, ledger, "sqp")
        n_evals += 1
    if not np.any(d):
        return LineSearchResult(1.0, x.copy(), f0, report0, True, n_evals)

    phi0 = f0 + mu * report0.total_violation
    slope = 0.0
    if grad is not None:
        slope = float(grad @ d)
        if c is not None and A is not None and len(c):
            slope += mu * float(np.maximum(c + A @ d, 0.0).sum() - np.maximum(c, 0.0).sum())

    alpha = 1.0
    while alpha >= config.alpha_floor:
        trial = np.clip(x + alpha * d, problem.lower, problem.upper)
        f, report = evaluate(problem, trial, config.epsilon, ledger, "sqp")
        n_evals += 1
        phi = f + mu * report.total_violation
        if np.isfinite(phi) and phi <= phi0 + config.c1 * alpha * slope:
            return LineSearchResult(alpha, trial, f, report, True, n_evals)
        alpha *= 0.5
    return LineSearchResult(alpha * 2.0, x.copy(), f0, report0, False, n_evals)


def _relaxed_constraints(report: ConstraintReport, epsilon: float) -> NDArray[np.float64]:
    return np.concatenate([report.g_values, report.h_values - epsilon, -report.h_values - epsilon])


def restore_feasibility(
    problem: ProblemDefinition,
    x: NDArray[np.float64],
    f: float,
    report: ConstraintReport,
    ledger: EvaluationLedger,
    config: Optional[SqpConfig] = None,
) -> Tuple[NDArray[np.float64], float, ConstraintReport, int]:
    """
    Pull a nearly feasible point inside the relaxed constraints.

    Each step linearizes the rows that are violated or within the margin
    and takes the minimum-norm step that puts them at -margin * (1 + |c|).
    A step is kept only when it lowers the total violation. Stops at
    feasibility, after `restoration_steps` steps, or when the violation is
    above `restoration_threshold`. FEs are charged to the sqp phase.

    Returns:
        (x, f, report, accepted_steps)
    """
    config = config or SqpConfig()
    eps = config.epsilon
    q, m = problem.n_ineq, problem.n_eq
    accepted = 0

    def vector(z: NDArray[np.float64]) -> NDArray[np.float64]:
        _, r = evaluate(problem, z, eps, ledger, "sqp")
        if r.non_finite:
            return np.full(q + m, np.nan)
        return np.concatenate([r.g_values, r.h_values])

    for _ in range(config.restoration_steps):
        if report.non_finite or report.max_violation <= config.feasibility_slack:
            break
        if report.max_violation > config.restoration_threshold:
            break
        c = _relaxed_constraints(report, eps)
        target = -config.constraint_margin * (1.0 + np.abs(c))
        rows = c > target
        f0 = np.concatenate([report.g_values, report.h_values])
        J = fd_gradient(vector, x, h=config.fd_step, f0=f0, upper=problem.upper)
        if not np.all(np.isfinite(J)):
            break
        A = np.vstack([J[:q], J[q:], -J[q:]])[rows]
        d = np.linalg.lstsq(A, target[rows] - c[rows], rcond=None)[0]
        trial = np.clip(x + d, problem.lower, problem.upper)
        f_t, r_t = evaluate(problem, trial, eps, ledger, "sqp")
        if r_t.non_finite or not r_t.total_violation < report.total_violation:
            break
        x, f, report = trial, f_t, r_t
        accepted += 1
    return x, f, report, accepted


def sqp_solve(
    problem: ProblemDefinition,
    x0: NDArray[np.float64],
    config: Optional[SqpConfig] = None,
    ledger: Optional[EvaluationLedger] = None,
) -> SqpResult:
    """
    Refine x0 with SQP. Never raises on numerical trouble; the outcome is
    in `status`. All FEs are charged to the sqp phase of `ledger`.

    Args:
        problem: Problem to solve.
        x0: Start point, clipped into the box.
        config: Solver settings.
        ledger: Ledger to charge; a fresh one when omitted.

    Returns:
        SqpResult with `fes` equal to the ledger delta.
    """
    config = config or SqpConfig()
    ledger = ledger if ledger is not None else EvaluationLedger()
    x0 = np.asarray(x0, dtype=float)
    if config.variable_scaling == "bounds":
        scaled, transform = scale_problem(problem)
        result = _solve(scaled, transform.inverse(x0), config, ledger)
        result.x = transform(result.x)
        result.history = [(transform(x), f, v, fes) for x, f, v, fes in result.history]
        return result
    return _solve(problem, x0, config, ledger)


def _solve(problem: ProblemDefinition, x0: NDArray[np.float64], config: SqpConfig,
           ledger: EvaluationLedger) -> SqpResult:
    start = ledger.total_fes
    eps = config.epsilon
    q, m, n = problem.n_ineq, problem.n_eq, problem.n

    def sample(z: NDArray[np.float64]) -> Tuple[float, ConstraintReport]:
        return evaluate(problem, z, eps, ledger, "sqp")

    def vector(z: NDArray[np.float64]) -> NDArray[np.float64]:
        f, report = sample(z)
        if report.non_finite:
            return np.full(1 + q + m, np.nan)
        return np.concatenate([[f], report.g_values, report.h_values])

    x = np.clip(x0, problem.lower, problem.upper)
    f, report = sample(x)
    history = [(x.copy(), f, report.max_violation, ledger.total_fes - start)]

    def result(status: str, iterations: int, kkt: float) -> SqpResult:
        nonlocal x, f, report
        if iterations > 0 and report.max_violation > config.feasibility_slack:
            x, f, report, steps = restore_feasibility(problem, x, f, report, ledger, config)
            if steps:
                history.append((x.copy(), f, report.max_violation, ledger.total_fes - start))
                logger.debug("SQP %s: %d restoration step(s), violation now %.2E", problem.name, steps,
                             report.max_violation)
        return SqpResult(x, f, report, status, iterations, ledger.total_fes - start, kkt, history)

    if report.non_finite:
        return result("non_finite", 0, float("nan"))
    if config.max_iterations == 0:
        return result("max_iter", 0, float("nan"))

    B = np.eye(n) if config.initial_hessian is None else np.array(config.initial_hessian, dtype=float)
    mu = 0.0
    kkt = float("nan")
    pending = None   # (s, grad_L at the previous point, multipliers)

    for it in range(1, config.max_iterations + 1):
        J = fd_gradient(vector, x, h=config.fd_step, f0=np.concatenate([[f], report.g_values, report.h_values]),
                        upper=problem.upper)
        if not np.all(np.isfinite(J)):
            return result("non_finite", it, kkt)
        grad, Jg, Jh = J[0], J[1:1 + q], J[1 + q:]
        A = np.vstack([Jg, Jh, -Jh])
        c = _relaxed_constraints(report, eps)

        if pending is not None:
            s, grad_L_old, lam_old = pending
            B = bfgs_update(B, s, grad + A.T @ lam_old - grad_L_old)

        qp = build_qp(x, B, grad, c, A, problem.lower, problem.upper, config.constraint_margin)
        sol = solve_qp(qp)
        if sol.status != "optimal":
            sol = solve_elastic(qp)
            if sol.status != "optimal":
                logger.debug("SQP %s: QP infeasible at iteration %d", problem.name, it)
                return result("qp_infeasible", it, kkt)

        d = sol.d
        lam = sol.multipliers[:qp.n_general]
        kkt = float((abs(grad @ d) + np.abs(lam * c).sum()) / (1.0 + abs(f)))
        if kkt <= config.tol_fun and report.max_violation <= config.feasibility_slack:
            return result("converged", it, kkt)

        lam_max = float(np.abs(lam).max()) if lam.size else 0.0
        mu = max(lam_max, 0.5 * (mu + lam_max))
        phi_old = f + mu * report.total_violation
        ls = merit_line_search(problem, x, d, mu, ledger, f, report, grad, c, A, config)
        if not ls.success:
            return result("line_search_failure", it, kkt)

        s = ls.x - x
        pending = (s, grad + A.T @ lam, lam)
        x, f, report = ls.x, ls.f, ls.report
        history.append((x.copy(), f, report.max_violation, ledger.total_fes - start))
        logger.debug("SQP %s iter %d: f=%.10g violation=%.2E alpha=%g", problem.name, it, f,
                     report.max_violation, ls.alpha)

        phi_new = f + mu * report.total_violation
        small_step = np.max(np.abs(s)) <= config.tol_x
        flat_merit = abs(phi_new - phi_old) <= config.tol_fun * (1.0 + abs(phi_old))
        if small_step or (flat_merit and report.max_violation <= config.tol_con):
            converged = kkt <= config.tol_fun and report.max_violation <= config.feasibility_slack
            return result("converged" if converged else "step_tolerance", it, kkt)

    return result("max_iter", config.max_iterations, kkt)
