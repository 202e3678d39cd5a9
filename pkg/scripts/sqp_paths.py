#!/usr/bin/env python3
"""
SQP iterate paths from random starts in the box, for plotting basins of attraction.

Usage
-----
python scripts/sqp_paths.py --problem g06 --problem g08 --problem g11 --starts 20 --out paths.jsonl.gz
"""

from __future__ import annotations
import argparse

import numpy as np
import pandas as pd
from swarm_sqp.io import TraceWriter
from swarm_sqp.problem import success
from swarm_sqp.registry import lookup
from swarm_sqp.sqp import sqp_solve


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--problem", action="append", required=True)
    ap.add_argument("--starts",  type=int, default=20)
    ap.add_argument("--seed",    type=int, default=0)
    ap.add_argument("--out",     required=True)
    args = ap.parse_args(argv)

    rows = []
    with TraceWriter(args.out) as writer:
        for name in args.problem:
            problem = lookup(name).problem
            rng = np.random.default_rng([args.seed, 2])
            for i in range(args.starts):
                x0 = rng.uniform(problem.lower, problem.upper)
                res = sqp_solve(problem, x0)
                writer.write({"problem": name, "start": i, **res.path_dict()})
                rows.append({
                    "problem": name,
                    "status": res.status,
                    "feasible": res.feasible,
                    "success": bool(res.feasible and success(res.f, problem.f_star)),
                    "steps": len(res.history) - 1,
                    "fes": res.fes,
                })

    df = pd.DataFrame(rows)
    summary = df.groupby("problem").agg(
        starts=("status", "size"),
        feasible=("feasible", "sum"),
        success=("success", "sum"),
        mean_steps=("steps", "mean"),
        mean_fes=("fes", "mean"),
    )
    print(summary.to_string(float_format=lambda v: f"{v:.1f}"))


if __name__ == "__main__":
    main()
