# swarm_sqp/reference.py
"""
Published reference results for the g01-g24 suite.

Static data only, never recomputed:
  * SUCCESS_FEASIBILITY: final success / feasibility percentages of GP-PSO,
    GP-PSO-SQP, PESO+ and DMS-PSO (None where success is not applicable).
  * MEAN_FES: mean FEs to reach f - f* <= 1e-4 for GP-PSO, GP-PSO with local
    search (FE at which the local search first succeeds), the local search
    alone, PESO+ and DMS-PSO (None where no run succeeded).
  * OPTIMUM_STATS: known optimum plus best/average/stdev of the objective
    ("conflict") and max constraint for GP-PSO alone and after SQP.
"""

from __future__ import annotations

from typing import Dict, NamedTuple, Optional, Tuple

NA = None
_ = None  # "–": no successful run

ALGORITHMS = ("gp_pso", "gp_pso_sqp", "peso_plus", "dms_pso")
FE_COLUMNS = ("gp_pso", "gp_pso_loc", "sqp", "peso_plus", "dms_pso")


class Rate(NamedTuple):
    success: Optional[float]
    feasible: Optional[float]


class Stats(NamedTuple):
    best: float
    average: float
    stdev: float


class OptimumRow(NamedTuple):
    f_star: Optional[float]
    pso_f: Stats
    pso_max_constraint: Optional[Stats]
    sqp_f: Stats
    sqp_max_constraint: Stats


# success, feasible per algorithm in ALGORITHMS order
_RATES = {
    "g01": (100, 100, 100, 100, 100, 100, 100, 100),
    "g02": (70, 100, 70, 100, 56, 100, 84, 100),
    "g03": (70, 100, 100, 100, 100, 100, 100, 100),
    "g04": (100, 100, 100, 100, 100, 100, 100, 100),
    "g05": (0, 100, 100, 100, 100, 100, 100, 100),
    "g06": (100, 100, 100, 100, 100, 100, 100, 100),
    "g07": (0, 100, 100, 100, 96, 100, 100, 100),
    "g08": (100, 100, 100, 100, 100, 100, 100, 100),
    "g09": (0, 100, 100, 100, 100, 100, 100, 100),
    "g10": (0, 100, 70, 70, 16, 100, 100, 100),
    "g11": (100, 100, 100, 100, 100, 100, 100, 100),
    "g12": (100, 100, 100, 100, 100, 100, 100, 100),
    "g13": (90, 100, 100, 100, 100, 100, 100, 100),
    "g14": (0, 100, 100, 100, 0, 100, 100, 100),
    "g15": (90, 100, 100, 100, 100, 100, 100, 100),
    "g16": (100, 100, 100, 100, 100, 100, 100, 100),
    "g17": (100, 100, 90, 90, 0, 100, 0, 100),
    "g18": (20, 100, 100, 100, 92, 100, 100, 100),
    "g19": (0, 100, 100, 100, 0, 100, 100, 100),
    "g20": (NA, 0, NA, 0, NA, 0, NA, 0),
    "g21": (0, 0, 0, 0, 0, 100, 100, 100),
    "g22": (0, 0, 0, 0, 0, 0, 0, 0),
    "g23": (0, 0, 100, 100, 0, 96, 100, 100),
    "g24": (100, 100, 100, 100, 100, 100, 100, 100),
}

# in FE_COLUMNS order; g20 is NA in every column
_FES = {
    "g01": (5.5e4, 3.1e4, 9.2e1, 1.0e5, 3.3e4),
    "g02": (1.7e5, 1.1e5, 1.3e3, 2.3e5, 1.8e5),
    "g03": (3.2e4, 1.7e3, 1.3e3, 4.5e5, 2.6e4),
    "g04": (4.2e4, 4.1e4, 3.2e1, 8.0e4, 2.5e4),
    "g05": (_, 0.0, _, 4.5e5, 2.9e4),
    "g06": (4.1e4, 0.0, 4.0e1, 5.7e4, 2.8e4),
    "g07": (_, 6.1e4, 5.5e2, 3.5e5, 2.7e4),
    "g08": (1.2e4, 1.1e4, 8.5e1, 6.1e3, 4.1e3),
    "g09": (_, 0.0, 2.8e2, 9.8e4, 2.9e4),
    "g10": (_, 7.2e4, 7.2e2, 4.5e5, 2.6e4),
    "g11": (1.0e4, 0.0, 4.0e1, 4.5e5, 1.5e4),
    "g12": (9.1e3, 6.1e3, 4.1e1, 8.1e3, 5.4e3),
    "g13": (4.7e4, 4.4e3, 1.6e2, 4.5e5, 4.1e4),
    "g14": (_, 5.2e4, 1.5e3, _, 2.5e4),
    "g15": (3.8e4, 0.0, 8.2e1, 4.5e5, 2.9e4),
    "g16": (2.3e4, 2.5e4, 1.1e2, 4.9e4, 5.3e4),
    "g17": (7.4e4, 8.2e4, 1.5e3, _, _),
    "g18": (4.5e4, 2.0e4, 2.0e2, 2.1e5, 3.3e4),
    "g19": (_, 1.3e4, 4.2e2, _, 2.2e4),
    "g20": (NA, NA, NA, NA, NA),
    "g21": (_, _, _, _, 1.4e5),
    "g22": (_, _, _, _, _),
    "g23": (_, 3.7e4, 2.6e2, _, 2.1e5),
    "g24": (1.2e4, 7.4e0, 2.9e1, 2.0e4, 1.9e4),
}

_NAN = float("nan")

# f_star, then (best, average, stdev) for: PSO f, PSO max constraint, SQP f, SQP max constraint
_OPTIMA = {
    "g01": (-15.0, (-15.0, -15.0, 5.8e-12), (0.0, 0.0, 0.0), (-15.0, -15.0, 2.9e-12), (0.0, 0.0, 0.0)),
    "g02": (-0.803619, (-0.803616, -0.800309, 5.3e-3), (0.0, 0.0, 0.0),
            (-0.803619, -0.800316, 5.3e-3), (3.1e-15, 4.3e-15, 2.2e-15)),
    "g03": (-1.000500, (-1.000495, -1.000102, 9.9e-4), (-5.2e-6, -5.4e-7, 1.6e-6),
            (-1.000500, -1.000500, 2.7e-15), (7.0e-16, 5.2e-16, 6.7e-16)),
    "g04": (-30665.538672, (-30665.538672, -30665.538672, 3.8e-12), (0.0, 0.0, 0.0),
            (-30665.538672, -30665.538672, 3.8e-12), (0.0, 0.0, 0.0)),
    "g05": (5126.496714, (5126.496817, 5127.151053, 1.3), (-2.5e-14, -2.5e-14, 0.0),
            (5126.496714, 5126.496714, 1.0e-12), (8.9e-14, -1.4e-14, 3.6e-14)),
    "g06": (-6961.813876, (-6961.813876, -6961.813876, 1.9e-12), (0.0, 0.0, 0.0),
            (-6961.813876, -6961.813876, 1.9e-12), (0.0, 0.0, 0.0)),
    "g07": (24.306209, (24.330287, 24.639188, 2.4e-1), (0.0, 0.0, 0.0),
            (24.306209, 24.306209, 1.1e-14), (7.1e-15, 5.2e-15, 3.3e-15)),
    "g08": (-0.095825, (-0.095825, -0.095825, 1.4e-17), (0.0, 0.0, 0.0),
            (-0.095825, -0.095825, 1.4e-17), (-1.7e-1, -1.7e-1, 6.3e-10)),
    "g09": (680.630057, (680.630911, 680.633029, 1.6e-3), (0.0, 0.0, 0.0),
            (680.630057, 680.630057, 7.6e-14), (0.0, 8.2e-15, 2.2e-14)),
    "g10": (7049.248021, (7050.865659, 7093.127835, 3.0e1), (0.0, 0.0, 0.0),
            (7049.248021, 7049.248024, 1.0e-5), (0.0, -3.2e-6, 1.0e-5)),
    "g11": (0.749900, (0.749900, 0.749900, 1.7e-8), (-8.4e-16, -1.1e-16, 2.6e-16),
            (0.749900, 0.749900, 6.4e-17), (4.4e-17, 5.6e-18, 6.4e-17)),
    "g12": (-1.0, (-1.0, -1.0, 0.0), (0.0, 0.0, 0.0), (-1.0, -1.0, 0.0), (-6.2e-2, -6.2e-2, 4.8e-15)),
    "g13": (0.053942, (0.053942, 0.053979, 3.8e-5), (-6.2e-10, -6.2e-11, 2.0e-10),
            (0.053942, 0.053942, 5.0e-17), (6.2e-15, 2.2e-15, 2.2e-15)),
    "g14": (-47.764888, (-47.723001, -47.606122, 1.5e-1), (-9.4e-6, -9.9e-7, 3.0e-6),
            (-47.764888, -47.764888, 1.1e-14), (2.1e-16, 1.9e-16, 7.0e-17)),
    "g15": (961.715022, (961.715023, 961.715044, 3.0e-5), (-3.9e-14, -1.8e-14, 1.6e-14),
            (961.715022, 961.715022, 1.4e-13), (3.3e-15, 2.3e-15, 2.4e-15)),
    "g16": (-1.905155, (-1.905155, -1.905155, 4.7e-16), (0.0, 0.0, 0.0),
            (-1.905155, -1.905155, 4.7e-16), (0.0, 0.0, 0.0)),
    "g17": (8853.539675, (8853.539675, 8853.539675, 1.3e-7), (-1.1e-9, -1.1e-10, 3.5e-10),
            (8853.539675, 8853.539675, 1.3e-7), (-5.4e-14, -2.9e-13, 4.8e-13)),
    "g18": (-0.866025, (-0.866014, -0.858576, 1.2e-2), (0.0, 0.0, 0.0),
            (-0.866025, -0.866025, 2.1e-15), (6.8e-15, 1.4e-15, 2.5e-15)),
    "g19": (32.655593, (34.879435, 37.062544, 1.4), (0.0, 0.0, 0.0),
            (32.655593, 32.655593, 4.1e-15), (7.1e-15, 4.8e-15, 2.9e-15)),
    "g20": (None, (0.080909, 0.139964, 3.8e-2), (3.2e-3, 1.8e-1, 1.4e-1),
            (0.177130, 0.186264, 3.4e-3), (1.2e-1, 3.3e-1, 2.1e-1)),
    "g21": (193.724510, (1113.283037, 1372.222391, 2.7e2), None,
            (_NAN, _NAN, _NAN), (_NAN, _NAN, _NAN)),
    # max constraint average/stdev are not reported for g22
    "g22": (236.430976, (2144.075703, 11776.390206, 9.4e3), (1.7, _NAN, _NAN),
            (_NAN, _NAN, _NAN), (_NAN, _NAN, _NAN)),
    "g23": (-400.055100, (-2016.651110, -966.309692, 8.6e2), (1.7, 2.3, 2.6e-1),
            (-400.055100, -400.055100, 2.2e-13), (3.3e-15, 8.4e-15, 1.2e-14)),
    "g24": (-5.508013, (-5.508013, -5.508013, 9.4e-16), (0.0, 0.0, 0.0),
            (-5.508013, -5.508013, 9.4e-16), (0.0, 0.0, 0.0)),
}


def _rates(row: Tuple) -> Dict[str, Rate]:
    return {alg: Rate(row[2 * i], row[2 * i + 1]) for i, alg in enumerate(ALGORITHMS)}


def _optimum(row: Tuple) -> OptimumRow:
    f_star, pso_f, pso_c, sqp_f, sqp_c = row
    return OptimumRow(f_star, Stats(*pso_f), Stats(*pso_c) if pso_c else None, Stats(*sqp_f), Stats(*sqp_c))


SUCCESS_FEASIBILITY: Dict[str, Dict[str, Rate]] = {name: _rates(row) for name, row in _RATES.items()}
MEAN_FES: Dict[str, Dict[str, Optional[float]]] = {
    name: dict(zip(FE_COLUMNS, row)) for name, row in _FES.items()
}
OPTIMUM_STATS: Dict[str, OptimumRow] = {name: _optimum(row) for name, row in _OPTIMA.items()}
