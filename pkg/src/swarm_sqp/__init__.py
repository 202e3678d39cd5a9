# swarm_sqp/__init__.py
"""GP-PSO with SQP refinement on the g01-g24 constrained benchmarks."""

from swarm_sqp.hybrid import (
    EveryIteration,
    FinalOnly,
    HybridResult,
    OnGbestImprovement,
    PeriodicRandomSeeds,
    first_success_study,
    run_hybrid,
)
from swarm_sqp.problem import (
    ConstraintReport,
    EvaluationLedger,
    ProblemDefinition,
    evaluate,
    is_feasible,
    success,
)
from swarm_sqp.registry import BENCHMARKS, export_metadata, lookup
from swarm_sqp.sqp import SqpConfig, SqpResult, sqp_solve
from swarm_sqp.swarm import GpPso, SwarmConfig

__version__ = "0.1.0"

__all__ = [
    "BENCHMARKS",
    "ConstraintReport",
    "EvaluationLedger",
    "EveryIteration",
    "FinalOnly",
    "GpPso",
    "HybridResult",
    "OnGbestImprovement",
    "PeriodicRandomSeeds",
    "ProblemDefinition",
    "SqpConfig",
    "SqpResult",
    "SwarmConfig",
    "evaluate",
    "export_metadata",
    "first_success_study",
    "is_feasible",
    "lookup",
    "run_hybrid",
    "sqp_solve",
    "success",
]
