# swarm_sqp/report.py
"""
Experiment report: one row per problem with success/feasibility rates,
mean FEs to accuracy and best/average/stdev of the objective ("conflict")
and max constraint, for the swarm alone and for the hybrid.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from swarm_sqp.hybrid import (
    PSO_SLACK,
    HybridResult,
    feasibility_rate,
    mean_fes_to_accuracy,
    success_rate,
)
from swarm_sqp.logic import solution_key
from swarm_sqp.reference import MEAN_FES, SUCCESS_FEASIBILITY

ExperimentReport = pd.DataFrame

REPORT_COLUMNS = [
    "problem", "runs", "f_star",
    "pso_success_pct", "pso_feasible_pct", "success_pct", "feasible_pct",
    "pso_mean_fes", "mean_fes",
    "pso_f_best", "pso_f_avg", "pso_f_std",
    "pso_max_constraint_best", "pso_max_constraint_avg", "pso_max_constraint_std",
    "f_best", "f_avg", "f_std",
    "max_constraint_best", "max_constraint_avg", "max_constraint_std",
    "max_violation_worst", "sqp_fe_share",
]
FLAG_THRESHOLD = 10.0


def _stats(f: Sequence[float], constraint: Sequence[float], best: int) -> List[float]:
    f = np.asarray(f, dtype=float)
    constraint = np.asarray(constraint, dtype=float)
    with np.errstate(all="ignore"):
        return [
            float(f[best]), float(np.mean(f)), float(np.std(f)),
            float(constraint[best]), float(np.mean(constraint)), float(np.std(constraint)),
        ]


def summarize(results: Sequence[HybridResult]) -> Dict[str, object]:
    """One report row for the runs of a single problem."""
    if not results:
        raise ValueError("Cannot summarize zero runs")
    problem = results[0].problem
    pso = [r.pso_final for r in results]
    final = [r.final for r in results]
    pso_best = min(range(len(pso)), key=lambda i: solution_key(pso[i].f, pso[i].report, PSO_SLACK))
    best = min(range(len(final)), key=lambda i: solution_key(final[i].f, final[i].report, results[i].final_slack))
    pso_fes = [r.pso_first_success_fe for r in results if r.pso_success and r.pso_first_success_fe is not None]

    row = {
        "problem": problem.name,
        "runs": len(results),
        "f_star": problem.f_star,
        "pso_success_pct": success_rate(results, problem.f_star, phase="pso"),
        "pso_feasible_pct": feasibility_rate(results, phase="pso"),
        "success_pct": success_rate(results, problem.f_star),
        "feasible_pct": feasibility_rate(results),
        "pso_mean_fes": float(np.mean(pso_fes)) if pso_fes else None,
        "mean_fes": mean_fes_to_accuracy(results),
    }
    values = _stats([s.f for s in pso], [s.report.max_constraint for s in pso], pso_best)
    values += _stats([s.f for s in final], [s.report.max_constraint for s in final], best)
    row.update(zip(REPORT_COLUMNS[9:21], values))
    row["max_violation_worst"] = float(max(s.report.max_violation for s in final))
    row["sqp_fe_share"] = float(np.mean([r.sqp_fe_share for r in results]))
    return row


def build_report(results_by_problem: Dict[str, Sequence[HybridResult]]) -> ExperimentReport:
    rows = [summarize(results) for results in results_by_problem.values()]
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def _fmt(column: str, value: object) -> str:
    rate = column.endswith("pct") or "success" in column
    if value is None or (isinstance(value, float) and np.isnan(value)):
        return "NA" if rate else "-"
    if isinstance(value, (bool, np.bool_, str)):
        return str(value)
    if rate:
        return f"{value:.0f}%"
    if column in ("f_star",) or column.endswith(("f_best", "f_avg")):
        return f"{value:.6f}"
    if column == "runs":
        return str(value)
    return f"{value:.1E}"


def format_table(report: ExperimentReport) -> str:
    """Tab-separated text table; f to 6 decimals, everything else like 5.8E-12."""
    lines = ["\t".join(report.columns)]
    for _, row in report.iterrows():
        lines.append("\t".join(
            str(row[c]) if c == "problem" else _fmt(c, None if pd.isna(row[c]) else row[c])
            for c in report.columns
        ))
    return "\n".join(lines) + "\n"


def _delta(measured: Optional[float], reference: Optional[float]) -> Optional[float]:
    if measured is None or reference is None or pd.isna(measured):
        return None
    return float(measured) - float(reference)


def compare_reference(report: ExperimentReport) -> pd.DataFrame:
    """
    Measured success and feasibility rates and mean FEs beside the published
    numbers of the four reference algorithms. The hybrid's mean FEs are set
    against the published swarm-plus-local-search figure. A rate delta of 10
    points or more is flagged;
    problems without published numbers are marked "no reference".
    """
    rows = []
    for _, r in report.iterrows():
        name = r["problem"]
        rates = SUCCESS_FEASIBILITY.get(name)
        fes = MEAN_FES.get(name)
        row = {
            "problem": name,
            "success_pso": r["pso_success_pct"],
            "success_hybrid": r["success_pct"],
            "feasible_pso": r["pso_feasible_pct"],
            "feasible_hybrid": r["feasible_pct"],
            "mean_fes_pso": r["pso_mean_fes"],
            "mean_fes_hybrid": r["mean_fes"],
        }
        if rates is None or fes is None:
            row.update(note="no reference", flagged=False)
            rows.append(row)
            continue
        row.update({
            "ref_success_gp_pso": rates["gp_pso"].success,
            "ref_success_gp_pso_sqp": rates["gp_pso_sqp"].success,
            "ref_success_peso_plus": rates["peso_plus"].success,
            "ref_success_dms_pso": rates["dms_pso"].success,
            "delta_success_pso": _delta(r["pso_success_pct"], rates["gp_pso"].success),
            "delta_success_hybrid": _delta(r["success_pct"], rates["gp_pso_sqp"].success),
            "ref_feasible_gp_pso": rates["gp_pso"].feasible,
            "ref_feasible_gp_pso_sqp": rates["gp_pso_sqp"].feasible,
            "ref_feasible_peso_plus": rates["peso_plus"].feasible,
            "ref_feasible_dms_pso": rates["dms_pso"].feasible,
            "delta_feasible_pso": _delta(r["pso_feasible_pct"], rates["gp_pso"].feasible),
            "delta_feasible_hybrid": _delta(r["feasible_pct"], rates["gp_pso_sqp"].feasible),
            "ref_fes_gp_pso": fes["gp_pso"],
            "ref_fes_gp_pso_loc": fes["gp_pso_loc"],
            "ref_fes_sqp": fes["sqp"],
            "ref_fes_peso_plus": fes["peso_plus"],
            "ref_fes_dms_pso": fes["dms_pso"],
            "delta_fes_pso": _delta(r["pso_mean_fes"], fes["gp_pso"]),
            "delta_fes_hybrid": _delta(r["mean_fes"], fes["gp_pso_loc"]),
        })
        deltas = [row["delta_success_pso"], row["delta_success_hybrid"],
                  row["delta_feasible_pso"], row["delta_feasible_hybrid"]]
        row["flagged"] = any(d is not None and abs(d) >= FLAG_THRESHOLD for d in deltas)
        row["note"] = ""
        rows.append(row)
    return pd.DataFrame(rows)
