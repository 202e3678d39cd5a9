#!/usr/bin/env python3
"""
Earliest PSO FE count from which an SQP probe on gbest succeeds, per run.

Usage
-----
python scripts/first_success.py --problem g06 --problem g11 --runs 25 --iterations 2000
"""

from __future__ import annotations
import argparse
from dataclasses import replace

import pandas as pd
from swarm_sqp.hybrid import first_success_study
from swarm_sqp.registry import lookup
from swarm_sqp.swarm import SwarmConfig


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--problem",    action="append", required=True)
    ap.add_argument("--runs",       type=int, default=25)
    ap.add_argument("--seed",       type=int, default=0)
    ap.add_argument("--iterations", type=int, default=2000)
    args = ap.parse_args(argv)

    config = replace(SwarmConfig(), max_iterations=args.iterations)
    rows = []
    for name in args.problem:
        problem = lookup(name).problem
        for i in range(args.runs):
            study = first_success_study(problem, config, seed=args.seed + i)
            flags = study.probe_flags
            rows.append({
                "problem": name,
                "seed": args.seed + i,
                "first_success_fe": study.first_success_fe,
                "first_success_sqp_fes": study.first_success_sqp_fes,
                "from_iteration_0": bool(flags and flags[0]),
                # success followed by a later failure
                "erratic": any(a and not b for a, b in zip(flags, flags[1:])),
                "probe_fes": study.result.probe_ledger.sqp_fes,
            })

    df = pd.DataFrame(rows)
    summary = df.groupby("problem").agg(
        runs=("seed", "size"),
        from_iteration_0=("from_iteration_0", "sum"),
        erratic=("erratic", "sum"),
        mean_first_success_fe=("first_success_fe", "mean"),
        mean_sqp_fes=("first_success_sqp_fes", "mean"),
    )
    print(summary.to_string(float_format=lambda v: f"{v:.1E}"))


if __name__ == "__main__":
    main()
