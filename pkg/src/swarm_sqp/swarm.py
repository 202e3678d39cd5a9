# swarm_sqp/swarm.py
"""
General-purpose multi-swarm PSO.

Sub-swarms with different coefficient sets share one forward ring: particle i
reads the pbests of i+1 .. i+k (mod N), and k grows linearly from k_min to
k_max over the run. Points are ranked by the feasibility-first priority
ordering while the equality tolerance is relaxed from a loose start down to
1e-4.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, fields
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from swarm_sqp.logic import (
    RelaxationSchedule,
    centre_of_gravity,
    current_epsilon,
    forward_neighbors,
    neighborhood_size,
    position_update,
    solution_key,
    velocity_update,
)
from swarm_sqp.problem import ConstraintReport, EvaluationLedger, ProblemDefinition, evaluate

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 1000


@dataclass(frozen=True)
class CoefficientSet:
    w: float
    iw: float
    sw: float

    def __post_init__(self) -> None:
        for name in ("w", "iw", "sw"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value >= 0):
                raise ValueError(f"Coefficient '{name}' must be finite and >= 0, got {value}")


@dataclass(frozen=True)
class SubSwarm:
    size: int
    coefficients: CoefficientSet

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"Sub-swarm size must be >= 1, got {self.size}")


EXPLORATIVE = CoefficientSet(w=0.9, iw=2.0, sw=2.0)
BALANCED = CoefficientSet(w=0.72, iw=1.49, sw=1.49)
EXPLOITATIVE = CoefficientSet(w=0.5, iw=1.2, sw=1.2)
DEFAULT_SUB_SWARMS = (SubSwarm(20, EXPLORATIVE), SubSwarm(20, BALANCED), SubSwarm(20, EXPLOITATIVE))


@dataclass(frozen=True)
class SwarmConfig:
    """
    Run parameters of the swarm.

    k_max=None means N-1 (full connectivity at the end of the run). A single
    particle is allowed; its neighbourhood is itself.
    """

    sub_swarms: Tuple[SubSwarm, ...] = DEFAULT_SUB_SWARMS
    max_iterations: int = 10_000
    k_min: int = 1
    k_max: Optional[int] = None
    v_max_fraction: float = 0.5
    relaxation: RelaxationSchedule = field(default_factory=RelaxationSchedule)
    seed: Optional[int] = None
    max_fes: Optional[int] = None
    record_positions: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "sub_swarms", tuple(self.sub_swarms))
        if not self.sub_swarms:
            raise ValueError("At least one sub-swarm is required")
        if self.max_iterations < 0:
            raise ValueError(f"max_iterations must be >= 0, got {self.max_iterations}")
        if not (0 < self.v_max_fraction <= 1):
            raise ValueError(f"v_max_fraction must be in (0, 1], got {self.v_max_fraction}")
        if self.max_fes is not None and self.max_fes < 0:
            raise ValueError(f"max_fes must be >= 0, got {self.max_fes}")
        N = self.swarm_size
        if N > 1 and not (1 <= self.k_min <= self.resolved_k_max <= N - 1):
            raise ValueError(
                f"Need 1 <= k_min <= k_max <= {N - 1} for a swarm of {N}, "
                f"got k_min={self.k_min}, k_max={self.resolved_k_max}"
            )

    @property
    def swarm_size(self) -> int:
        return sum(s.size for s in self.sub_swarms)

    @property
    def resolved_k_max(self) -> int:
        return self.swarm_size - 1 if self.k_max is None else self.k_max

    @classmethod
    def from_dict(cls, d: Dict[str, Any]) -> "SwarmConfig":
        """
        Build from plain config data. Sub-swarms are given as
        {size, w, iw, sw}; relaxation as a dict of RelaxationSchedule fields.
        """
        d = dict(d)
        _reject_unknown(d, cls, "pso")
        if "sub_swarms" in d:
            d["sub_swarms"] = tuple(_sub_swarm(s) for s in d["sub_swarms"])
        if isinstance(d.get("relaxation"), dict):
            _reject_unknown(d["relaxation"], RelaxationSchedule, "pso.relaxation")
            d["relaxation"] = RelaxationSchedule(**d["relaxation"])
        return cls(**d)


def _sub_swarm(s: Any) -> SubSwarm:
    if isinstance(s, SubSwarm):
        return s
    s = dict(s)
    coefficients = s.pop("coefficients", None) or {k: s.pop(k) for k in ("w", "iw", "sw") if k in s}
    size = s.pop("size", None)
    if s or size is None:
        raise ValueError(f"Sub-swarm needs 'size' and 'w'/'iw'/'sw' only, got extra keys {sorted(s)}")
    return SubSwarm(int(size), CoefficientSet(**coefficients))


def _reject_unknown(d: Dict[str, Any], cls: type, section: str) -> None:
    known = {f.name for f in fields(cls)}
    unknown = set(d) - known
    if unknown:
        raise ValueError(f"Unknown keys in '{section}': {sorted(unknown)}. Valid keys: {sorted(known)}")


class Solution(NamedTuple):
    x: NDArray[np.float64]
    f: float
    report: ConstraintReport


@dataclass(frozen=True, eq=False)
class Particle:
    x: NDArray[np.float64]
    v: NDArray[np.float64]
    pbest_x: NDArray[np.float64]
    pbest_f: float
    pbest_report: ConstraintReport
    sub_swarm_id: int


@dataclass(eq=False)
class SwarmState:
    """Whole swarm as (N, n) arrays; `particle(i)` gives a snapshot."""

    x: NDArray[np.float64]
    v: NDArray[np.float64]
    pbest_x: NDArray[np.float64]
    pbest_f: NDArray[np.float64]
    pbest_reports: List[ConstraintReport]
    sub_swarm_ids: NDArray[np.int_]
    gbest: Solution
    current_epsilon: float
    iteration: int = 0
    gbest_history: List[Solution] = field(default_factory=list)
    cog_history: List[NDArray[np.float64]] = field(default_factory=list)
    terminated: bool = False

    @property
    def size(self) -> int:
        return int(self.x.shape[0])

    def particle(self, i: int) -> Particle:
        return Particle(
            self.x[i].copy(), self.v[i].copy(), self.pbest_x[i].copy(),
            float(self.pbest_f[i]), self.pbest_reports[i], int(self.sub_swarm_ids[i]),
        )

    @property
    def particles(self) -> List[Particle]:
        return [self.particle(i) for i in range(self.size)]


def _json_safe(value: Any) -> Any:
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (float, np.floating)):
        return float(value) if np.isfinite(value) else None
    if isinstance(value, np.integer):
        return int(value)
    return value


@dataclass
class RunTrace:
    """
    Per-iteration record of one swarm run.

    `records` holds one entry per iteration 1..T; the initial population
    (iteration 0) is kept apart in `initial`.
    """

    problem: str
    seed: Optional[int]
    records: List[Dict[str, Any]] = field(default_factory=list)
    positions: List[NDArray[np.float64]] = field(default_factory=list)
    initial: Optional[Dict[str, Any]] = None
    initial_positions: Optional[NDArray[np.float64]] = None
    gbest: Optional[Solution] = None
    ledger: Optional[EvaluationLedger] = None

    def append(self, state: SwarmState, fes: int, record_positions: bool = False) -> None:
        self.gbest = state.gbest
        record = {
            "iter": state.iteration,
            "gbest_f": state.gbest.f,
            "gbest_violation": state.gbest.report.max_violation,
            "cog": centre_of_gravity(state.x).tolist(),
            "epsilon": state.current_epsilon,
            "fes": fes,
            "gbest_x": state.gbest.x.tolist(),
        }
        if state.iteration == 0:
            self.initial = record
            if record_positions:
                self.initial_positions = state.x.copy()
            return
        self.records.append(record)
        if record_positions:
            self.positions.append(state.x.copy())

    def __len__(self) -> int:
        return len(self.records)

    def to_dict(self) -> Dict[str, Any]:
        d = {
            "problem": self.problem,
            "seed": self.seed,
            "records": [{k: _json_safe(v) for k, v in r.items()} for r in self.records],
            "ledger": self.ledger.to_dict() if self.ledger else None,
        }
        if self.initial is not None:
            d["initial"] = {k: _json_safe(v) for k, v in self.initial.items()}
        if self.initial_positions is not None:
            d["initial_positions"] = _json_safe(self.initial_positions)
        if self.positions:
            d["positions"] = [_json_safe(p) for p in self.positions]
        return d


class _Coefficients(NamedTuple):
    w: NDArray[np.float64]
    iw: NDArray[np.float64]
    sw: NDArray[np.float64]


class GpPso:
    """
    Engine for one swarm run.

    Each particle takes the coefficients of its sub-swarm; all particles are
    updated at once with (N, 1) coefficient columns. Randomness is drawn in
    a fixed order (positions, velocities, then U1/U2 per step), so a seed
    fully determines the run.
    """

    def __init__(
        self,
        problem: ProblemDefinition,
        config: Optional[SwarmConfig] = None,
        ledger: Optional[EvaluationLedger] = None,
    ):
        self.problem = problem
        self.config = config or SwarmConfig()
        self.ledger = ledger if ledger is not None else EvaluationLedger()
        self.rng = np.random.default_rng(self.config.seed)
        self.v_max = self.config.v_max_fraction * problem.span

        sizes = [s.size for s in self.config.sub_swarms]
        self.sub_swarm_ids = np.repeat(np.arange(len(sizes)), sizes)
        per_particle = [self.config.sub_swarms[i].coefficients for i in self.sub_swarm_ids]
        self.coefficients = _Coefficients(
            w=np.array([c.w for c in per_particle])[:, None],
            iw=np.array([c.iw for c in per_particle])[:, None],
            sw=np.array([c.sw for c in per_particle])[:, None],
        )
        self.state: Optional[SwarmState] = None
        self.trace = RunTrace(problem=problem.name, seed=self.config.seed, ledger=self.ledger)
        self.reset_run_log()

    def reset_run_log(self) -> None:
        self.run_log = {
            "iterations": 0,
            "pbest_updates": 0,
            "gbest_updates": 0,
        }

    def get_run_log(self) -> Dict[str, Any]:
        log = dict(self.run_log)
        log["fes"] = self.ledger.pso_fes
        moves = log["iterations"] * self.config.swarm_size
        if moves > 0:
            log["pbest_update_rate"] = round(log["pbest_updates"] / moves * 100, 2)
        return log

    def _key(self, f: float, report: ConstraintReport, epsilon: float) -> Tuple[int, float, float]:
        return solution_key(f, report, self.config.relaxation.inequality_slack(epsilon))

    def _epsilon(self, t: int) -> float:
        return current_epsilon(t, self.config.max_iterations, self.config.relaxation)

    def _budget_allows_step(self) -> bool:
        max_fes = self.config.max_fes
        return max_fes is None or self.ledger.pso_fes + self.config.swarm_size <= max_fes

    def _evaluate_all(self, x: NDArray[np.float64], epsilon: float) -> Tuple[NDArray, List[ConstraintReport]]:
        results = [evaluate(self.problem, row, epsilon, self.ledger, "pso") for row in x]
        return np.array([f for f, _ in results]), [r for _, r in results]

    def _best_index(self, f: NDArray, reports: List[ConstraintReport], epsilon: float) -> int:
        return min(range(len(reports)), key=lambda i: self._key(f[i], reports[i], epsilon))

    def initialize(self) -> SwarmState:
        """Uniform positions in the box, velocities in +-v_max, one FE per particle."""
        N, n = self.config.swarm_size, self.problem.n
        epsilon = self._epsilon(0)
        x = self.problem.lower + self.rng.random((N, n)) * self.problem.span
        v = self.rng.uniform(-self.v_max, self.v_max, size=(N, n))
        f, reports = self._evaluate_all(x, epsilon)
        best = self._best_index(f, reports, epsilon)
        self.state = SwarmState(
            x=x, v=v, pbest_x=x.copy(), pbest_f=f.copy(), pbest_reports=list(reports),
            sub_swarm_ids=self.sub_swarm_ids.copy(),
            gbest=Solution(x[best].copy(), float(f[best]), reports[best]),
            current_epsilon=epsilon,
        )
        self.state.terminated = self.config.max_iterations == 0 or not self._budget_allows_step()
        self.trace.append(self.state, self.ledger.pso_fes, self.config.record_positions)
        return self.state

    def step(self) -> SwarmState:
        """
        Advance one iteration: N velocity/position updates and N FEs.

        Returns the state unchanged with `terminated` set when the iteration
        or FE budget is exhausted.
        """
        s = self.state
        if s is None:
            raise RuntimeError("initialize() must be called before step()")
        T = self.config.max_iterations
        if s.iteration >= T or not self._budget_allows_step():
            s.terminated = True
            return s

        t = s.iteration + 1
        epsilon = self._epsilon(t)
        if epsilon != s.current_epsilon:
            s.pbest_reports = [r.at_epsilon(epsilon) for r in s.pbest_reports]
            s.gbest = s.gbest._replace(report=s.gbest.report.at_epsilon(epsilon))
            s.current_epsilon = epsilon

        N = s.size
        keys = [self._key(s.pbest_f[i], s.pbest_reports[i], epsilon) for i in range(N)]
        if N > 1:
            k = neighborhood_size(t, T, self.config.k_min, self.config.resolved_k_max)
            # self first so that ties keep the particle's own pbest
            lbest = [min([i] + forward_neighbors(i, k, N), key=keys.__getitem__) for i in range(N)]
        else:
            lbest = [0]
        lbest_x = s.pbest_x[lbest]

        v = velocity_update(s, lbest_x, self.coefficients, self.rng, self.v_max)
        x, v = position_update(s, v, (self.problem.lower, self.problem.upper))
        f, reports = self._evaluate_all(x, epsilon)

        for i in range(N):
            if self._key(f[i], reports[i], epsilon) < keys[i]:
                s.pbest_x[i] = x[i]
                s.pbest_f[i] = f[i]
                s.pbest_reports[i] = reports[i]
                self.run_log["pbest_updates"] += 1

        best = self._best_index(s.pbest_f, s.pbest_reports, epsilon)
        if self._key(s.pbest_f[best], s.pbest_reports[best], epsilon) < self._key(s.gbest.f, s.gbest.report, epsilon):
            s.gbest = Solution(s.pbest_x[best].copy(), float(s.pbest_f[best]), s.pbest_reports[best])
            self.run_log["gbest_updates"] += 1

        s.x, s.v = x, v
        s.iteration = t
        s.gbest_history.append(s.gbest)
        s.cog_history.append(centre_of_gravity(x))
        self.run_log["iterations"] += 1
        self.trace.append(s, self.ledger.pso_fes, self.config.record_positions)

        if t >= T or not self._budget_allows_step():
            s.terminated = True
        if t % PROGRESS_EVERY == 0:
            logger.debug("%s iter %d: gbest f=%.6g violation=%.3g eps=%.3g",
                         self.problem.name, t, s.gbest.f, s.gbest.report.max_violation, epsilon)
        return s

    def run(self, callback: Optional[Callable[[SwarmState], None]] = None) -> RunTrace:
        """Iterate until the budget ends; `callback` sees the state after init and after every step."""
        if self.state is None:
            self.initialize()
            if callback is not None:
                callback(self.state)
        while not self.state.terminated:
            self.step()
            if callback is not None:
                callback(self.state)
        gbest = self.state.gbest
        logger.info("GP-PSO %s seed=%s finished: %d iterations, %d FEs, f=%.6f, violation=%.2E",
                    self.problem.name, self.config.seed, self.state.iteration, self.ledger.pso_fes,
                    gbest.f, gbest.report.max_violation)
        return self.trace


def run(
    problem: ProblemDefinition,
    config: Optional[SwarmConfig] = None,
    ledger: Optional[EvaluationLedger] = None,
) -> RunTrace:
    """Run a full swarm and return its trace."""
    return GpPso(problem, config, ledger).run()
