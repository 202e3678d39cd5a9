#!/usr/bin/env python3
"""
Run an experiment file problem by problem and print a progress row after
each problem finishes.

Usage
-----
python scripts/run_suite.py --config experiments/smoke.yaml --out suite.csv
"""

from __future__ import annotations
import argparse, logging, sys
from pathlib import Path

import pandas as pd
from swarm_sqp.cli import execute
from swarm_sqp.config import load_config
from swarm_sqp.logic import flatten_dot
from swarm_sqp.report import build_report, compare_reference, format_table


def progress(name: str, row: dict) -> dict:
    return {
        "problem": name,
        "success": {"pso": row["pso_success_pct"], "hybrid": row["success_pct"]},
        "feasible": {"pso": row["pso_feasible_pct"], "hybrid": row["feasible_pct"]},
        "f": {"best": row["f_best"], "avg": row["f_avg"]},
        "sqp_fe_share": round(row["sqp_fe_share"], 2),
    }


def main(argv: list[str] | None = None) -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--config", type=Path, required=True)
    ap.add_argument("--out",    type=Path)
    ap.add_argument("--runs",   type=int)
    ap.add_argument("--log-level", default="WARNING")
    args = ap.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper())

    config = load_config(args.config).override(runs=args.runs)
    frames = []
    for i, name in enumerate(config.problem_names()):
        grouped = execute(config.override(problems=(name,)))
        frame = build_report(grouped)
        frames.append(frame)
        flat = flatten_dot(progress(name, frame.iloc[0].to_dict()))
        if i == 0:
            print(*flat.keys(), sep="\t")
        print(*flat.values(), sep="\t")

    if not frames:
        sys.exit("No problems selected.")
    report = pd.concat(frames, ignore_index=True)
    print()
    print(format_table(report), end="")
    if config.compare_reference:
        flagged = compare_reference(report)
        flagged = flagged[flagged["flagged"]]
        print(f"\n✓ {len(report)} problems, {len(flagged)} flagged against the reference")
    if args.out:
        report.to_csv(args.out, index=False)


if __name__ == "__main__":
    main()
