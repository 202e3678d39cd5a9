# swarm_sqp/qp.py
"""
Strictly convex quadratic programs for the SQP search direction.

    minimize    1/2 d'H d + g'd
    subject to  A_in d <= b_in,  A_eq d = b_eq

solved with the Goldfarb-Idnani dual active-set method: start from the
unconstrained minimum and add violated constraints one at a time, dropping
active inequalities whose multiplier would turn negative. Active-set
quantities are recomputed from the current normals each step; the problems
here are small (a few dozen variables and rows).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional

import numpy as np
from numpy.typing import NDArray

logger = logging.getLogger(__name__)

QP_STATUSES = ("optimal", "infeasible", "max_iter")
_REL_TOL = 1e-11


def _as_rows(A: Optional[NDArray], n: int) -> NDArray[np.float64]:
    if A is None:
        return np.zeros((0, n))
    return np.asarray(A, dtype=float).reshape(-1, n)


@dataclass(eq=False)
class QpSubproblem:
    """
    One QP. Rows of A_in past `n_general` are simple bounds on d; elastic
    mode only relaxes the general rows.
    """

    H: NDArray[np.float64]
    g: NDArray[np.float64]
    A_in: Optional[NDArray[np.float64]] = None
    b_in: Optional[NDArray[np.float64]] = None
    A_eq: Optional[NDArray[np.float64]] = None
    b_eq: Optional[NDArray[np.float64]] = None
    n_general: Optional[int] = field(default=None)

    def __post_init__(self) -> None:
        self.H = np.atleast_2d(np.asarray(self.H, dtype=float))
        self.g = np.asarray(self.g, dtype=float).reshape(-1)
        n = self.g.size
        if self.H.shape != (n, n):
            raise ValueError(f"H must be {n}x{n}, got {self.H.shape}")
        self.A_in = _as_rows(self.A_in, n)
        self.A_eq = _as_rows(self.A_eq, n)
        self.b_in = np.zeros(0) if self.b_in is None else np.asarray(self.b_in, dtype=float).reshape(-1)
        self.b_eq = np.zeros(0) if self.b_eq is None else np.asarray(self.b_eq, dtype=float).reshape(-1)
        if self.b_in.size != self.A_in.shape[0] or self.b_eq.size != self.A_eq.shape[0]:
            raise ValueError("Constraint matrices and right-hand sides disagree in row count")
        if self.n_general is None:
            self.n_general = self.A_in.shape[0]

    @property
    def n(self) -> int:
        return self.g.size


class QpSolution(NamedTuple):
    d: NDArray[np.float64]
    multipliers: NDArray[np.float64]      # one per A_in row, >= 0
    eq_multipliers: NDArray[np.float64]   # one per A_eq row
    status: str
    active: List[int]                     # active A_in rows
    iterations: int


def solve_qp(qp: QpSubproblem, max_iter: Optional[int] = None) -> QpSolution:
    """
    Solve a strictly convex QP.

    Args:
        qp: The subproblem.
        max_iter: Cap on add/drop steps; defaults to 50 + 10 * (n + rows).

    Returns:
        QpSolution. Status "infeasible" when no point satisfies the
        constraints; "max_iter" when the cap is hit.

    Raises:
        ValueError: If H is not positive definite.
    """
    H = qp.H
    try:
        np.linalg.cholesky(H)
    except np.linalg.LinAlgError:
        raise ValueError("QP Hessian must be positive definite") from None
    Ginv = np.linalg.inv(H)
    Ginv = 0.5 * (Ginv + Ginv.T)

    me, mi = qp.A_eq.shape[0], qp.A_in.shape[0]
    # constraints as C x >= c0, equalities first
    C = -np.vstack([qp.A_eq, qp.A_in])
    c0 = -np.concatenate([qp.b_eq, qp.b_in])
    sign = np.ones(me + mi)
    if max_iter is None:
        max_iter = 50 + 10 * (qp.n + me + mi)

    def normal(j: int) -> NDArray[np.float64]:
        return sign[j] * C[j]

    def rhs(j: int) -> float:
        return sign[j] * c0[j]

    def tol(j: int, x: NDArray) -> float:
        return _REL_TOL * (1.0 + abs(c0[j]) + np.linalg.norm(C[j]) * np.linalg.norm(x))

    x = -Ginv @ qp.g
    active: List[int] = []
    u = np.zeros(0)
    skipped = set()
    iterations = 0
    status = "optimal"

    while status == "optimal":
        p = None
        for j in range(me):
            if j not in active and j not in skipped:
                sign[j] = -1.0 if C[j] @ x - c0[j] > 0 else 1.0
                p = j
                break
        if p is None and mi:
            slack = C[me:] @ x - c0[me:]
            for j in active:
                if j >= me:
                    slack[j - me] = np.inf
            j = int(np.argmin(slack))
            if slack[j] < -tol(me + j, x):
                p = me + j
        if p is None:
            break

        u_plus = np.append(u, 0.0)
        while True:
            iterations += 1
            if iterations > max_iter:
                status = "max_iter"
                break
            n_p = normal(p)
            s_p = n_p @ x - rhs(p)
            Gn = Ginv @ n_p
            if active:
                N = np.column_stack([normal(j) for j in active])
                GN = Ginv @ N
                try:
                    r = np.linalg.solve(N.T @ GN, GN.T @ n_p)
                except np.linalg.LinAlgError:
                    r = np.linalg.lstsq(N.T @ GN, GN.T @ n_p, rcond=None)[0]
                z = Gn - GN @ r
            else:
                r = np.zeros(0)
                z = Gn

            t1, k = np.inf, None
            for idx, j in enumerate(active):
                if j >= me and r[idx] > 0:
                    ratio = u_plus[idx] / r[idx]
                    if ratio < t1:
                        t1, k = ratio, idx
            ztn = z @ n_p
            t2 = np.inf if ztn <= 1e-12 * max(n_p @ Gn, 1e-300) else -s_p / ztn

            if np.isinf(t1) and np.isinf(t2):
                if p < me and abs(s_p) <= tol(p, x):
                    skipped.add(p)   # linearly dependent and already satisfied
                    u = u_plus[:-1]
                    break
                status = "infeasible"
                break

            t = min(t1, t2)
            if np.isfinite(t2):
                x = x + t * z
            u_plus[:-1] -= t * r
            u_plus[-1] += t
            if t2 <= t1:
                active.append(p)
                u = u_plus
                break
            active.pop(k)
            u_plus = np.delete(u_plus, k)

    if status == "optimal" and active:
        x, u = _polish(Ginv, qp.g, [normal(j) for j in active], np.array([rhs(j) for j in active]), x, u)

    lam = np.zeros(mi)
    nu = np.zeros(me)
    for idx, j in enumerate(active if status == "optimal" else []):
        if j >= me:
            lam[j - me] = max(u[idx], 0.0)
        else:
            nu[j] = sign[j] * u[idx]
    if status != "optimal":
        logger.debug("QP finished with status %s after %d iterations", status, iterations)
    return QpSolution(x, lam, nu, status, sorted(j - me for j in active if j >= me), iterations)


def _polish(Ginv, g, normals, b, x, u):
    """Re-solve the KKT system of the final active set exactly."""
    N = np.column_stack(normals)
    GN = Ginv @ N
    try:
        u_exact = np.linalg.solve(N.T @ GN, b + GN.T @ g)
    except np.linalg.LinAlgError:
        return x, u
    return Ginv @ (N @ u_exact - g), u_exact


def kkt_residuals(qp: QpSubproblem, sol: QpSolution) -> Dict[str, float]:
    """Stationarity, primal and dual feasibility, and complementarity (inf-norms)."""
    d = sol.d
    grad = qp.H @ d + qp.g + qp.A_in.T @ sol.multipliers + qp.A_eq.T @ sol.eq_multipliers
    ineq = qp.A_in @ d - qp.b_in
    eq = qp.A_eq @ d - qp.b_eq
    primal = max([0.0] + list(ineq) + list(np.abs(eq)))
    return {
        "stationarity": float(np.max(np.abs(grad))) if grad.size else 0.0,
        "primal": float(primal),
        "dual": float(max(0.0, -sol.multipliers.min())) if sol.multipliers.size else 0.0,
        "complementarity": float(np.max(np.abs(sol.multipliers * ineq))) if ineq.size else 0.0,
    }
