# swarm_sqp/hybrid.py
"""
GP-PSO followed by SQP refinement, plus the run statistics.

A trigger strategy decides when SQP is launched and from where. SQP results
never flow back into the swarm, so the PSO trajectory of a hybrid run is the
same as a stand-alone run with that seed. The reported answer is the best of
the final gbest and every SQP output under the priority ordering, with the
gbest judged at slack 0 and SQP outputs at 1e-12.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import ClassVar, Dict, List, NamedTuple, Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from swarm_sqp.logic import solution_key
from swarm_sqp.problem import (
    EPSILON,
    SQP_FEASIBILITY_SLACK,
    EvaluationLedger,
    ProblemDefinition,
    is_feasible,
    success,
)
from swarm_sqp.sqp import SqpConfig, SqpResult, sqp_solve
from swarm_sqp.swarm import GpPso, RunTrace, Solution, SwarmConfig, SwarmState

logger = logging.getLogger(__name__)

PSO_SLACK = 0.0


@dataclass(frozen=True)
class FinalOnly:
    """SQP once, from the final gbest."""

    name: ClassVar[str] = "final"
    probes: ClassVar[bool] = False
    final_refine: ClassVar[bool] = True

    def launch_points(self, state: SwarmState, improved: bool, rng: np.random.Generator) -> List[NDArray]:
        return []


@dataclass(frozen=True)
class EveryIteration:
    """
    Side-ledger SQP probe from every iteration's gbest to find the point
    from which refinement succeeds; the final gbest is refined as usual.
    """

    name: ClassVar[str] = "every"
    probes: ClassVar[bool] = True
    final_refine: ClassVar[bool] = True

    def launch_points(self, state: SwarmState, improved: bool, rng: np.random.Generator) -> List[NDArray]:
        return []


@dataclass(frozen=True)
class OnGbestImprovement:
    name: ClassVar[str] = "improvement"
    probes: ClassVar[bool] = False
    final_refine: ClassVar[bool] = True

    def launch_points(self, state: SwarmState, improved: bool, rng: np.random.Generator) -> List[NDArray]:
        return [state.gbest.x] if improved else []


@dataclass(frozen=True)
class PeriodicRandomSeeds:
    """Every `period` iterations, refine the pbests of `seeds` distinct random particles."""

    name: ClassVar[str] = "periodic"
    probes: ClassVar[bool] = False

    period: int = 50
    seeds: int = 5
    final_refine: bool = True

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")
        if self.seeds < 1:
            raise ValueError(f"seeds must be >= 1, got {self.seeds}")

    def launch_points(self, state: SwarmState, improved: bool, rng: np.random.Generator) -> List[NDArray]:
        if state.iteration == 0 or state.iteration % self.period:
            return []
        chosen = rng.choice(state.size, size=min(self.seeds, state.size), replace=False)
        return [state.pbest_x[i].copy() for i in chosen]


@dataclass(eq=False)
class HybridResult:
    problem: ProblemDefinition
    seed: Optional[int]
    pso_final: Solution
    sqp_final: Optional[SqpResult]
    sqp_results: List[SqpResult]
    final: Solution
    final_phase: str
    first_success_fe: Optional[int]
    ledger: EvaluationLedger
    trace: RunTrace
    probe_flags: List[bool] = field(default_factory=list)
    probe_ledger: Optional[EvaluationLedger] = None
    first_success_sqp_fes: Optional[int] = None
    pso_first_success_fe: Optional[int] = None

    @property
    def final_slack(self) -> float:
        return SQP_FEASIBILITY_SLACK if self.final_phase == "sqp" else PSO_SLACK

    @property
    def feasible(self) -> bool:
        return is_feasible(self.final.report, self.final_slack)

    @property
    def success(self) -> Optional[bool]:
        ok = success(self.final.f, self.problem.f_star)
        return None if ok is None else ok and self.feasible

    @property
    def pso_feasible(self) -> bool:
        return is_feasible(self.pso_final.report, PSO_SLACK)

    @property
    def pso_success(self) -> Optional[bool]:
        ok = success(self.pso_final.f, self.problem.f_star)
        return None if ok is None else ok and self.pso_feasible

    @property
    def sqp_fe_share(self) -> float:
        """Percent of the run's FEs spent in SQP."""
        total = self.ledger.total_fes
        return 100.0 * self.ledger.sqp_fes / total if total else 0.0

    def to_dict(self) -> Dict:
        def num(v: float) -> Optional[float]:
            return float(v) if np.isfinite(v) else None

        return {
            "problem": self.problem.name,
            "seed": self.seed,
            "final_phase": self.final_phase,
            "f": num(self.final.f),
            "max_violation": num(self.final.report.max_violation),
            "x": [num(v) for v in self.final.x],
            "success": self.success,
            "feasible": self.feasible,
            "pso_f": num(self.pso_final.f),
            "pso_success": self.pso_success,
            "first_success_fe": self.first_success_fe,
            "sqp": [r.to_dict() for r in self.sqp_results],
            "ledger": self.ledger.to_dict(),
        }

    def trace_dict(self) -> Dict:
        """Swarm trace plus the iterate path of every SQP launch, in launch order."""
        d = self.trace.to_dict()
        d["sqp_paths"] = [r.path_dict() for r in self.sqp_results]
        return d


def _finite(s: Solution) -> bool:
    return bool(np.isfinite(s.f)) and not s.report.non_finite


def run_hybrid(
    problem: ProblemDefinition,
    pso_config: Optional[SwarmConfig] = None,
    sqp_config: Optional[SqpConfig] = None,
    strategy=None,
    seed: Optional[int] = None,
) -> HybridResult:
    """
    Run GP-PSO with SQP launched per `strategy`.

    Args:
        problem: Problem to solve.
        pso_config: Swarm settings; its seed is replaced by `seed` when given.
        sqp_config: SQP settings.
        strategy: Trigger strategy instance; FinalOnly by default.
        seed: Run seed.

    Returns:
        HybridResult. PSO and in-run SQP FEs share `ledger`; probe FEs go to
        `probe_ledger`.
    """
    pso_config = pso_config or SwarmConfig()
    if seed is not None:
        pso_config = replace(pso_config, seed=seed)
    seed = pso_config.seed
    sqp_config = sqp_config or SqpConfig()
    strategy = strategy or FinalOnly()
    probing = strategy.probes and problem.optimum_known

    ledger = EvaluationLedger()
    probe_ledger = EvaluationLedger()
    engine = GpPso(problem, pso_config, ledger)
    seed_rng = np.random.default_rng(None if seed is None else [seed, 1])
    N = pso_config.swarm_size

    refined: Dict[bytes, SqpResult] = {}
    probed: Dict[bytes, SqpResult] = {}
    sqp_results: List[SqpResult] = []
    probe_flags: List[bool] = []
    tracker = _SuccessTracker(problem)
    pso_tracker = _SuccessTracker(problem)
    gbest_updates = [-1]
    first_probe: Dict[str, int] = {}

    def refine(x0: NDArray) -> None:
        key = np.asarray(x0, dtype=float).tobytes()
        if key in refined:
            return
        res = sqp_solve(problem, x0, sqp_config, ledger)
        refined[key] = res
        sqp_results.append(res)
        logger.info("SQP on %s seed=%s: status=%s f=%.6f violation=%.2E fes=%d",
                    problem.name, seed, res.status, res.f, res.report.max_violation, res.fes)
        tracker.offer(res.f, res.report, SQP_FEASIBILITY_SLACK, ledger.total_fes)

    def probe(state: SwarmState) -> None:
        key = state.gbest.x.tobytes()
        if key not in probed:
            probed[key] = sqp_solve(problem, state.gbest.x, sqp_config, probe_ledger)
        res = probed[key]
        ok = bool(res.feasible and success(res.f, problem.f_star))
        probe_flags.append(ok)
        if ok and "fe" not in first_probe:
            first_probe["fe"] = ledger.pso_fes - N
            first_probe["sqp_fes"] = res.fes

    def on_state(state: SwarmState) -> None:
        updates = engine.run_log["gbest_updates"]
        improved = state.iteration == 0 or updates != gbest_updates[0]
        gbest_updates[0] = updates
        gbest = state.gbest
        relaxed = gbest.report.at_epsilon(EPSILON)
        tracker.offer(gbest.f, relaxed, PSO_SLACK, ledger.total_fes)
        pso_tracker.offer(gbest.f, relaxed, PSO_SLACK, ledger.pso_fes)
        if not _finite(gbest):
            if probing:
                probe_flags.append(False)
            return
        for x0 in strategy.launch_points(state, improved, seed_rng):
            refine(x0)
        if probing:
            probe(state)

    trace = engine.run(on_state)
    gbest = engine.state.gbest
    pso_final = gbest._replace(report=gbest.report.at_epsilon(EPSILON))
    if strategy.final_refine and _finite(pso_final):
        refine(pso_final.x)
    elif not _finite(pso_final):
        logger.info("No evaluable gbest on %s seed=%s; SQP skipped", problem.name, seed)

    candidates = [(pso_final, PSO_SLACK, "pso")]
    candidates += [(Solution(r.x, r.f, r.report), SQP_FEASIBILITY_SLACK, "sqp") for r in sqp_results]
    final, _, phase = min(candidates, key=lambda c: solution_key(c[0].f, c[0].report, c[1]))
    sqp_final = None
    if sqp_results:
        sqp_final = min(sqp_results, key=lambda r: solution_key(r.f, r.report, SQP_FEASIBILITY_SLACK))

    return HybridResult(
        problem=problem,
        seed=seed,
        pso_final=pso_final,
        sqp_final=sqp_final,
        sqp_results=sqp_results,
        final=final,
        final_phase=phase,
        first_success_fe=first_probe.get("fe") if probing else tracker.first_fe,
        ledger=ledger,
        trace=trace,
        probe_flags=probe_flags,
        probe_ledger=probe_ledger if strategy.probes else None,
        first_success_sqp_fes=first_probe.get("sqp_fes"),
        pso_first_success_fe=pso_tracker.first_fe,
    )


class _SuccessTracker:
    """FE count at which the best-so-far record first succeeded."""

    def __init__(self, problem: ProblemDefinition):
        self.problem = problem
        self.first_fe: Optional[int] = None

    def offer(self, f: float, report, slack: float, fes: int) -> None:
        if self.first_fe is None and is_feasible(report, slack) and success(f, self.problem.f_star):
            self.first_fe = fes


def _rate(flags: Sequence[bool]) -> float:
    return round(100.0 * sum(flags) / len(flags), 2)


def success_rate(results: Sequence[HybridResult], f_star: Optional[float] = None,
                 phase: str = "hybrid") -> Optional[float]:
    """
    Percent of runs whose final record is feasible and within 1e-4 of f_star.

    Returns None ("NA") when the optimum is unknown.
    """
    if not results:
        raise ValueError("success_rate needs at least one result")
    if f_star is None:
        f_star = results[0].problem.f_star
    if f_star is None:
        return None
    flags = []
    for r in results:
        if phase == "pso":
            flags.append(r.pso_feasible and bool(success(r.pso_final.f, f_star)))
        else:
            flags.append(r.feasible and bool(success(r.final.f, f_star)))
    return _rate(flags)


def feasibility_rate(results: Sequence[HybridResult], phase: str = "hybrid") -> float:
    if not results:
        raise ValueError("feasibility_rate needs at least one result")
    return _rate([r.pso_feasible if phase == "pso" else r.feasible for r in results])


def mean_fes_to_accuracy(results: Sequence[HybridResult]) -> Optional[float]:
    """Mean first-success FE over the runs that succeeded; None when none did."""
    fes = [r.first_success_fe for r in results if r.success and r.first_success_fe is not None]
    return float(np.mean(fes)) if fes else None


class FirstSuccessStudy(NamedTuple):
    probe_flags: List[bool]
    first_success_fe: Optional[int]
    first_success_sqp_fes: Optional[int]
    result: HybridResult


def first_success_study(
    problem: ProblemDefinition,
    pso_config: Optional[SwarmConfig] = None,
    sqp_config: Optional[SqpConfig] = None,
    seed: Optional[int] = None,
) -> FirstSuccessStudy:
    """
    Probe SQP from every iteration's gbest and record the earliest PSO FE
    count (initial population excluded) from which refinement succeeds.

    Raises:
        ValueError: If the problem has no known optimum.
    """
    if not problem.optimum_known:
        raise ValueError(f"Problem '{problem.name}' has no known optimum; success cannot be judged")
    result = run_hybrid(problem, pso_config, sqp_config, EveryIteration(), seed)
    return FirstSuccessStudy(result.probe_flags, result.first_success_fe, result.first_success_sqp_fes, result)
