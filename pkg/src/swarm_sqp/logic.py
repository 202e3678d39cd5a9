# swarm_sqp/logic.py
"""
Low-level swarm logic for swarm-sqp.

Includes the velocity and position updates, the forward ring topology and its
time-varying neighbourhood size, the feasibility-first priority ordering and
the tolerance relaxation schedule.

These functions are stateless and pure (randomness comes in through the
generator argument).
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from swarm_sqp.problem import EPSILON, ConstraintReport, is_feasible

DECAYS = ("linear", "exponential")


def velocity_update(
    p: Any,
    lbest_x: NDArray[np.float64],
    c: Any,
    rng: np.random.Generator,
    v_max: Optional[NDArray[np.float64]] = None,
) -> NDArray[np.float64]:
    """
    New velocity from inertia, individuality and social terms.

    Args:
        p: Anything with `x`, `v` and `pbest_x` arrays (a Particle, or a whole
            SwarmState when updating every particle at once).
        lbest_x: Local best position(s), same shape as p.x.
        c: Coefficients with `w`, `iw` and `sw`; scalars or arrays that
            broadcast against p.x.
        rng: Source of the per-dimension uniform draws (U1 then U2).
        v_max: Optional per-dimension clamp.

    Returns:
        NDArray: The clamped velocity.
    """
    x = np.asarray(p.x, dtype=float)
    u1 = rng.random(x.shape)
    u2 = rng.random(x.shape)
    v = c.w * p.v + c.iw * u1 * (p.pbest_x - x) + c.sw * u2 * (lbest_x - x)
    if v_max is not None:
        v = np.clip(v, -v_max, v_max)
    return v


def position_update(
    p: Any,
    v_new: NDArray[np.float64],
    bounds: Tuple[NDArray[np.float64], NDArray[np.float64]],
) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Move by v_new and clip to the box; clipped components lose their velocity.

    Returns:
        (x_new, v_new) with x_new inside bounds.
    """
    lower, upper = bounds
    x = p.x + v_new
    clipped = (x < lower) | (x > upper)
    x = np.clip(x, lower, upper)
    v = np.where(clipped, 0.0, v_new)
    return x, v


def forward_neighbors(i: int, k: int, N: int) -> List[int]:
    """Indices (i+1) .. (i+k) mod N on the one-way ring."""
    if not 1 <= k <= N - 1:
        raise ValueError(f"neighbourhood size must be in [1, {N - 1}] for a swarm of {N}, got {k}")
    return [(i + j) % N for j in range(1, k + 1)]


def neighborhood_size(t: int, T: int, k_min: int, k_max: int) -> int:
    """Linear growth from k_min at t=0 to k_max at t=T, rounded half up."""
    if T <= 0:
        return k_max
    frac = min(max(t / T, 0.0), 1.0)
    return int(math.floor(k_min + (k_max - k_min) * frac + 0.5))


def solution_key(f: float, report: ConstraintReport, slack: float = 0.0) -> Tuple[int, float, float]:
    """
    Sort key of the priority ordering: feasible first by f, then infeasible
    by violation with f breaking ties. Smaller is better.
    """
    if is_feasible(report, slack):
        return (0, f, 0.0)
    return (1, report.max_violation, f)


def compare_solutions(a: Any, b: Any, slack: float = 0.0) -> int:
    """
    Compare two evaluated points under the priority ordering.

    Args:
        a, b: (f, report) pairs or objects with `f` and `report`.
        slack: Feasibility slack; the swarm uses 0.

    Returns:
        int: -1 if a is better, 1 if b is better, 0 on a full tie.
    """
    ka = solution_key(*_unpack(a), slack=slack)
    kb = solution_key(*_unpack(b), slack=slack)
    if ka < kb:
        return -1
    if kb < ka:
        return 1
    return 0


def _unpack(s: Any) -> Tuple[float, ConstraintReport]:
    if isinstance(s, tuple) and len(s) == 2:
        return s
    return s.f, s.report


@dataclass(frozen=True)
class RelaxationSchedule:
    """
    Pseudo-adaptive tolerance relaxation.

    epsilon starts at initial_scale * 1e-4 and decays to exactly 1e-4 at
    cutoff_fraction * T, then stays there.
    """

    initial_scale: float = 100.0
    cutoff_fraction: float = 0.5
    decay: str = "linear"
    relax_inequalities: bool = False

    def __post_init__(self) -> None:
        if not (math.isfinite(self.initial_scale) and self.initial_scale >= 1.0):
            raise ValueError(f"initial_scale must be a finite value >= 1, got {self.initial_scale}")
        if not 0.0 <= self.cutoff_fraction <= 1.0:
            raise ValueError(f"cutoff_fraction must be in [0, 1], got {self.cutoff_fraction}")
        if self.decay not in DECAYS:
            raise ValueError(f"Unknown decay '{self.decay}', expected one of {DECAYS}")

    def inequality_slack(self, epsilon: float) -> float:
        """Extra slack for inequalities while the schedule is active."""
        return epsilon - EPSILON if self.relax_inequalities else 0.0


def current_epsilon(t: int, T: int, schedule: RelaxationSchedule) -> float:
    cutoff = schedule.cutoff_fraction * T
    if cutoff <= 0 or t >= cutoff:
        return EPSILON
    frac = max(t, 0) / cutoff
    s0 = schedule.initial_scale
    if schedule.decay == "linear":
        scale = s0 + (1.0 - s0) * frac
    else:
        scale = s0 ** (1.0 - frac)
    return scale * EPSILON


def centre_of_gravity(positions: NDArray[np.float64]) -> NDArray[np.float64]:
    """Mean position; `positions` is (N, n)."""
    positions = np.atleast_2d(np.asarray(positions, dtype=float))
    if positions.shape[0] < 1:
        raise ValueError("centre of gravity needs at least one particle")
    return positions.mean(axis=0)


def flatten_dot(d: Mapping, prefix: str = "", sep: str = ".") -> dict[str, object]:
    """Return a flat dict: {'a.b.c': value, ...}"""
    flat = {}
    for k, v in d.items():
        path = f"{prefix}{sep}{k}" if prefix else k
        if isinstance(v, Mapping):
            flat.update(flatten_dot(v, path, sep=sep))
        else:
            flat[path] = v
    return flat
