# swarm_sqp/problem.py
"""
Constrained-problem model shared by every solver.

A problem is minimized subject to inequalities g_j(x) <= 0 and equalities
h_j(x) = 0. Equalities are relaxed to |h_j(x)| - epsilon <= 0. One function
evaluation (FE) is one joint evaluation of the objective and all constraints,
and every FE is charged to an EvaluationLedger under the phase that issued it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

logger = logging.getLogger(__name__)

EPSILON = 1e-4                 # final equality relaxation
SUCCESS_TOLERANCE = 1e-4       # f - f_star threshold
SQP_FEASIBILITY_SLACK = 1e-12
PHASES = ("pso", "sqp")

VectorFn = Callable[[NDArray[np.float64]], NDArray[np.float64]]
_EMPTY = np.zeros(0)


def _no_constraints(x: NDArray[np.float64]) -> NDArray[np.float64]:
    return _EMPTY


@dataclass(frozen=True, eq=False)
class ProblemDefinition:
    """
    Immutable description of a bound-constrained nonlinear program.

    `inequalities` and `equalities` are vector maps returning q and m values;
    use `from_callables` to build them from one callable per constraint.
    """

    name: str
    lower: NDArray[np.float64]
    upper: NDArray[np.float64]
    objective: Callable[[NDArray[np.float64]], float]
    inequalities: VectorFn = _no_constraints
    equalities: VectorFn = _no_constraints
    n_ineq: int = 0
    n_eq: int = 0
    f_star: Optional[float] = None

    def __post_init__(self) -> None:
        lower = np.asarray(self.lower, dtype=float).reshape(-1)
        upper = np.asarray(self.upper, dtype=float).reshape(-1)
        if lower.size < 1:
            raise ValueError(f"Problem '{self.name}' needs at least one dimension")
        if lower.shape != upper.shape:
            msg = f"Problem '{self.name}': bounds have shapes {lower.shape} and {upper.shape}"
            raise ValueError(msg)
        if not np.all(lower < upper):
            raise ValueError(f"Problem '{self.name}': lower bound must be below upper bound in every dimension")
        if self.n_ineq < 0 or self.n_eq < 0:
            raise ValueError(f"Problem '{self.name}': constraint counts must be non-negative")
        lower.flags.writeable = False
        upper.flags.writeable = False
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def from_callables(
        cls,
        name: str,
        lower: Sequence[float],
        upper: Sequence[float],
        objective: Callable[[NDArray[np.float64]], float],
        inequalities: Sequence[Callable[[NDArray[np.float64]], float]] = (),
        equalities: Sequence[Callable[[NDArray[np.float64]], float]] = (),
        f_star: Optional[float] = None,
    ) -> "ProblemDefinition":
        """Build a problem from one scalar callable per constraint."""
        ineq = tuple(inequalities)
        eq = tuple(equalities)
        return cls(
            name=name,
            lower=np.asarray(lower, dtype=float),
            upper=np.asarray(upper, dtype=float),
            objective=objective,
            inequalities=_stack(ineq),
            equalities=_stack(eq),
            n_ineq=len(ineq),
            n_eq=len(eq),
            f_star=f_star,
        )

    @property
    def n(self) -> int:
        return int(self.lower.size)

    @property
    def optimum_known(self) -> bool:
        return self.f_star is not None

    @property
    def span(self) -> NDArray[np.float64]:
        return self.upper - self.lower


class _Stacked:
    """Picklable vector map over scalar constraint callables."""

    def __init__(self, fns: Tuple[Callable, ...]) -> None:
        self.fns = fns

    def __call__(self, x: NDArray[np.float64]) -> NDArray[np.float64]:
        return np.array([fn(x) for fn in self.fns], dtype=float)


def _stack(fns: Tuple[Callable, ...]) -> VectorFn:
    return _Stacked(fns) if fns else _no_constraints


@dataclass(frozen=True, eq=False)
class ConstraintReport:
    """
    Constraint values at one point.

    `relaxed_h_values` holds |h_j| - epsilon_used. `max_violation` is
    max(0, every g and relaxed h entry) and is +inf for a non-finite record.
    """

    g_values: NDArray[np.float64]
    h_values: NDArray[np.float64]
    relaxed_h_values: NDArray[np.float64]
    max_violation: float
    epsilon_used: float
    non_finite: bool = False

    @classmethod
    def from_values(cls, g: NDArray[np.float64], h: NDArray[np.float64], epsilon: float) -> "ConstraintReport":
        relaxed = np.abs(h) - epsilon
        worst = 0.0
        if g.size:
            worst = max(worst, float(g.max()))
        if relaxed.size:
            worst = max(worst, float(relaxed.max()))
        return cls(g, h, relaxed, worst, float(epsilon))

    @classmethod
    def worst(cls, q: int, m: int, epsilon: float) -> "ConstraintReport":
        """Sentinel record ranking below every evaluable point."""
        return cls(
            np.full(q, np.inf), np.full(m, np.inf), np.full(m, np.inf), float("inf"), float(epsilon), True
        )

    def at_epsilon(self, epsilon: float) -> "ConstraintReport":
        """Re-relax the stored equalities under another epsilon (no FE)."""
        if self.non_finite:
            return ConstraintReport.worst(self.g_values.size, self.h_values.size, epsilon)
        if epsilon == self.epsilon_used:
            return self
        return ConstraintReport.from_values(self.g_values, self.h_values, epsilon)

    @property
    def max_constraint(self) -> float:
        """Largest constraint value, unclipped; nan when there are no constraints."""
        values = np.concatenate([self.g_values, self.relaxed_h_values])
        return float(values.max()) if values.size else float("nan")

    @property
    def total_violation(self) -> float:
        """Sum of positive parts (the l1 violation used by the merit function)."""
        if self.non_finite:
            return float("inf")
        return float(np.maximum(self.g_values, 0.0).sum() + np.maximum(self.relaxed_h_values, 0.0).sum())


@dataclass
class EvaluationLedger:
    """FE counters for one run; total is always pso + sqp."""

    pso_fes: int = 0
    sqp_fes: int = 0

    @property
    def total_fes(self) -> int:
        return self.pso_fes + self.sqp_fes

    def charge(self, phase: str, count: int = 1) -> None:
        if count < 0:
            raise ValueError("FE counters never decrease")
        if phase == "pso":
            self.pso_fes += count
        elif phase == "sqp":
            self.sqp_fes += count
        else:
            raise ValueError(f"Unknown phase '{phase}', expected one of {PHASES}")

    def to_dict(self) -> dict:
        return {"pso_fes": self.pso_fes, "sqp_fes": self.sqp_fes, "total_fes": self.total_fes}


def evaluate(
    problem: ProblemDefinition,
    x: NDArray[np.float64],
    epsilon: float,
    ledger: EvaluationLedger,
    phase: str,
) -> Tuple[float, ConstraintReport]:
    """
    Evaluate objective and constraints at x, charging one FE to `phase`.

    Args:
        problem: The problem to evaluate.
        x: Point of length problem.n.
        epsilon: Equality relaxation, >= 0.
        ledger: Ledger receiving the FE.
        phase: "pso" or "sqp".

    Returns:
        (f, report). Any non-finite value or arithmetic error yields
        f = +inf and the sentinel worst report.

    Raises:
        ValueError: On dimension mismatch or negative epsilon.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.n,):
        raise ValueError(f"Problem '{problem.name}' expects a point of length {problem.n}, got shape {x.shape}")
    if epsilon < 0:
        raise ValueError(f"epsilon must be non-negative, got {epsilon}")
    ledger.charge(phase)

    try:
        with np.errstate(all="ignore"):
            f = float(problem.objective(x))
            g = np.asarray(problem.inequalities(x), dtype=float).reshape(-1)
            h = np.asarray(problem.equalities(x), dtype=float).reshape(-1)
    except (ArithmeticError, ValueError) as e:
        logger.debug("Evaluation of %s failed at %s: %s", problem.name, x, e)
        return float("inf"), ConstraintReport.worst(problem.n_ineq, problem.n_eq, epsilon)

    if g.size != problem.n_ineq or h.size != problem.n_eq:
        msg = (f"Problem '{problem.name}' declares {problem.n_ineq} inequalities and {problem.n_eq} equalities, "
               f"got {g.size} and {h.size}")
        raise ValueError(msg)
    if not (np.isfinite(f) and np.all(np.isfinite(g)) and np.all(np.isfinite(h))):
        return float("inf"), ConstraintReport.worst(problem.n_ineq, problem.n_eq, epsilon)
    return f, ConstraintReport.from_values(g, h, epsilon)


def is_feasible(report: ConstraintReport, slack: float = 0.0) -> bool:
    """True iff every g and relaxed h entry is <= slack."""
    if slack < 0:
        raise ValueError(f"slack must be non-negative, got {slack}")
    return (not report.non_finite) and report.max_violation <= slack


def success(f: float, f_star: Optional[float]) -> Optional[bool]:
    """f - f_star <= 1e-4; None when f_star is unknown."""
    if f_star is None:
        return None
    return bool(f - f_star <= SUCCESS_TOLERANCE)


def scale_problem(problem: ProblemDefinition) -> Tuple[ProblemDefinition, Callable[[NDArray], NDArray]]:
    """
    Map the box of `problem` onto [0, 1]^n.

    Returns:
        (scaled problem, function mapping scaled points back to original space)
    """
    transform = _UnitBox(problem.lower, problem.span)
    scaled = ProblemDefinition(
        name=f"{problem.name}[unit]",
        lower=np.zeros(problem.n),
        upper=np.ones(problem.n),
        objective=_Composed(problem.objective, transform),
        inequalities=_Composed(problem.inequalities, transform),
        equalities=_Composed(problem.equalities, transform),
        n_ineq=problem.n_ineq,
        n_eq=problem.n_eq,
        f_star=problem.f_star,
    )
    return scaled, transform


class _UnitBox:
    def __init__(self, lower: NDArray, span: NDArray) -> None:
        self.lower = lower
        self.span = span

    def __call__(self, z: NDArray) -> NDArray:
        return self.lower + np.asarray(z, dtype=float) * self.span

    def inverse(self, x: NDArray) -> NDArray:
        return (np.asarray(x, dtype=float) - self.lower) / self.span


class _Composed:
    def __init__(self, fn: Callable, transform: _UnitBox) -> None:
        self.fn = fn
        self.transform = transform

    def __call__(self, z: NDArray):
        return self.fn(self.transform(z))
