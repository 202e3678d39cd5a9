# swarm_sqp/cli.py
"""
Command-line front end.

    swarm_sqp --problem g12 --runs 5 --seed 1 --strategy final
    swarm_sqp --config experiments/smoke.yaml --format text-table

Exit codes: 0 on completion, 2 on bad arguments or configuration, 1 on an
internal error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from swarm_sqp.config import FORMATS, ExperimentConfig, load_config
from swarm_sqp.hybrid import HybridResult, run_hybrid
from swarm_sqp.io import TraceWriter, write_report
from swarm_sqp.registry import TRIGGER_STRATEGIES, lookup
from swarm_sqp.report import build_report, compare_reference

logger = logging.getLogger(__name__)

Task = Tuple[str, int, ExperimentConfig]


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="swarm_sqp", description="GP-PSO + SQP on the g01-g24 benchmarks")
    ap.add_argument("--problem", action="append", help="benchmark name, comma list or 'all' (repeatable)")
    ap.add_argument("--runs", type=int, help="runs per problem (default 25)")
    ap.add_argument("--seed", type=int, help="base seed; run i uses seed + i")
    ap.add_argument("--strategy", choices=sorted(TRIGGER_STRATEGIES), help="SQP trigger strategy")
    ap.add_argument("--iterations", type=int, help="swarm iterations per run (default 10000)")
    ap.add_argument("--out", help="report path (stdout when omitted)")
    ap.add_argument("--format", choices=FORMATS, help="report format")
    ap.add_argument("--trace", nargs="?", const="traces.jsonl", help="write per-iteration traces (JSON Lines)")
    ap.add_argument("--config", type=Path, help="experiment file (YAML or JSON)")
    ap.add_argument("--workers", type=int, help="worker processes")
    ap.add_argument("--compare-reference", action="store_const", const=True, default=None,
                    help="append the comparison against published results")
    ap.add_argument("--log-level", default="WARNING", help="logging level")
    return ap


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    config = load_config(args.config) if args.config else ExperimentConfig()
    return config.override(
        problems=tuple(args.problem) if args.problem else None,
        runs=args.runs,
        seed=args.seed,
        strategy=args.strategy,
        iterations=args.iterations,
        out=args.out,
        format=args.format,
        trace=args.trace,
        workers=args.workers,
        compare_reference=args.compare_reference,
    )


def run_task(task: Task) -> HybridResult:
    """One (problem, seed) run; top-level so worker processes can import it."""
    name, seed, config = task
    problem = lookup(name).problem
    record_positions = bool(config.trace) and problem.n == 2
    result = run_hybrid(problem, config.swarm_config(record_positions), config.sqp_config(),
                        config.make_strategy(), seed)
    logger.info("%s seed=%d: f=%.6f success=%s phase=%s fes=%d", name, seed, result.final.f,
                result.success, result.final_phase, result.ledger.total_fes)
    return result


def execute(config: ExperimentConfig) -> Dict[str, List[HybridResult]]:
    """Run every (problem, run) pair; results keep problem and seed order."""
    names = config.problem_names()
    tasks = [(name, config.seed + i, config) for name in names for i in range(config.runs)]
    if config.workers == 1:
        results = [run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            results = list(executor.map(run_task, tasks))
    grouped: Dict[str, List[HybridResult]] = {name: [] for name in names}
    for (name, _, _), result in zip(tasks, results):
        grouped[name].append(result)
    return grouped


def _write_traces(path: str, grouped: Dict[str, List[HybridResult]]) -> None:
    with TraceWriter(path) as writer:
        for results in grouped.values():
            for r in results:
                writer.write(r.trace_dict())


def cli_run(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_arg_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        logging.basicConfig(level=args.log_level.upper(), format="%(asctime)s %(name)s %(levelname)s %(message)s")
        config = config_from_args(args)
        config.problem_names()
        config.make_strategy()
        config.swarm_config()
        config.sqp_config()
    except (KeyError, ValueError, RuntimeError) as e:
        ap.print_usage(sys.stderr)
        print(f"swarm_sqp: error: {e.args[0] if e.args else e}", file=sys.stderr)
        return 2

    try:
        grouped = execute(config)
        report = build_report(grouped)
        text = write_report(report, config.out, config.format)
        if config.out is None:
            sys.stdout.write(text)
        if config.compare_reference:
            comparison = compare_reference(report)
            target = None if config.out is None else f"{config.out}.reference.{_suffix(config.format)}"
            text = write_report(comparison, target, config.format)
            if target is None:
                sys.stdout.write(text)
        if config.trace:
            _write_traces(config.trace, grouped)
    except Exception:
        logger.exception("Experiment failed")
        return 1
    return 0


def _suffix(fmt: str) -> str:
    return {"json": "json", "csv": "csv"}.get(fmt, "txt")


def main() -> None:
    sys.exit(cli_run())


if __name__ == "__main__":
    main()
