# swarm_sqp/benchmarks.py
"""
Formulas of the g01-g24 constrained benchmark suite.

Each problem is a set of module-level functions (picklable, so runs can be
fanned out to worker processes) plus bounds and, where published, a point
attaining the known optimum. Objectives are minimized; inequalities are
g(x) <= 0 and equalities h(x) = 0.

Expressions are written with numpy so that domain errors (log of a negative
number, division by zero) surface as inf/nan and are turned into the
non-finite sentinel by `evaluate` instead of raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional

import numpy as np
from numpy.typing import NDArray

from swarm_sqp.problem import ProblemDefinition

Array = NDArray[np.float64]


@dataclass(frozen=True)
class Formula:
    """Raw transcription: what a BenchmarkEntry wraps into a ProblemDefinition."""

    lower: tuple
    upper: tuple
    objective: Callable[[Array], float]
    inequalities: Optional[Callable[[Array], Array]] = None
    equalities: Optional[Callable[[Array], Array]] = None
    n_ineq: int = 0
    n_eq: int = 0
    x_star: Optional[tuple] = None

    def build(self, name: str, f_star: Optional[float]) -> ProblemDefinition:
        kwargs = {}
        if self.inequalities is not None:
            kwargs["inequalities"] = self.inequalities
        if self.equalities is not None:
            kwargs["equalities"] = self.equalities
        return ProblemDefinition(
            name=name,
            lower=np.array(self.lower, dtype=float),
            upper=np.array(self.upper, dtype=float),
            objective=self.objective,
            n_ineq=self.n_ineq,
            n_eq=self.n_eq,
            f_star=f_star,
            **kwargs,
        )


# ---------------------------------------------------------------- g01
def g01_f(x: Array) -> float:
    return 5 * np.sum(x[0:4]) - 5 * np.sum(x[0:4] ** 2) - np.sum(x[4:13])


def g01_g(x: Array) -> Array:
    return np.array([
        2 * x[0] + 2 * x[1] + x[9] + x[10] - 10,
        2 * x[0] + 2 * x[2] + x[9] + x[11] - 10,
        2 * x[1] + 2 * x[2] + x[10] + x[11] - 10,
        -8 * x[0] + x[9],
        -8 * x[1] + x[10],
        -8 * x[2] + x[11],
        -2 * x[3] - x[4] + x[9],
        -2 * x[5] - x[6] + x[10],
        -2 * x[7] - x[8] + x[11],
    ])


# ---------------------------------------------------------------- g02
def g02_f(x: Array) -> float:
    cos = np.cos(x)
    numerator = np.sum(cos ** 4) - 2 * np.prod(cos ** 2)
    return -np.abs(numerator) / np.sqrt(np.sum(np.arange(1, x.size + 1) * x ** 2))


def g02_g(x: Array) -> Array:
    return np.array([0.75 - np.prod(x), np.sum(x) - 7.5 * x.size])


# ---------------------------------------------------------------- g03
def g03_f(x: Array) -> float:
    n = x.size
    return -(np.sqrt(n) ** n) * np.prod(x)


def g03_h(x: Array) -> Array:
    return np.array([np.sum(x ** 2) - 1.0])


# ---------------------------------------------------------------- g04
def g04_f(x: Array) -> float:
    return 5.3578547 * x[2] ** 2 + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141


def g04_g(x: Array) -> Array:
    u = 85.334407 + 0.0056858 * x[1] * x[4] + 0.0006262 * x[0] * x[3] - 0.0022053 * x[2] * x[4]
    v = 80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] ** 2
    w = 9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3]
    return np.array([u - 92.0, -u, v - 110.0, -v + 90.0, w - 25.0, -w + 20.0])


# ---------------------------------------------------------------- g05
def g05_f(x: Array) -> float:
    return 3 * x[0] + 0.000001 * x[0] ** 3 + 2 * x[1] + (0.000002 / 3) * x[1] ** 3


def g05_g(x: Array) -> Array:
    return np.array([-x[3] + x[2] - 0.55, -x[2] + x[3] - 0.55])


def g05_h(x: Array) -> Array:
    return np.array([
        1000 * np.sin(-x[2] - 0.25) + 1000 * np.sin(-x[3] - 0.25) + 894.8 - x[0],
        1000 * np.sin(x[2] - 0.25) + 1000 * np.sin(x[2] - x[3] - 0.25) + 894.8 - x[1],
        1000 * np.sin(x[3] - 0.25) + 1000 * np.sin(x[3] - x[2] - 0.25) + 1294.8,
    ])


# ---------------------------------------------------------------- g06
def g06_f(x: Array) -> float:
    return (x[0] - 10) ** 3 + (x[1] - 20) ** 3


def g06_g(x: Array) -> Array:
    return np.array([
        -(x[0] - 5) ** 2 - (x[1] - 5) ** 2 + 100,
        (x[0] - 6) ** 2 + (x[1] - 5) ** 2 - 82.81,
    ])


# ---------------------------------------------------------------- g07
def g07_f(x: Array) -> float:
    return (x[0] ** 2 + x[1] ** 2 + x[0] * x[1] - 14 * x[0] - 16 * x[1]
            + (x[2] - 10) ** 2 + 4 * (x[3] - 5) ** 2 + (x[4] - 3) ** 2
            + 2 * (x[5] - 1) ** 2 + 5 * x[6] ** 2 + 7 * (x[7] - 11) ** 2
            + 2 * (x[8] - 10) ** 2 + (x[9] - 7) ** 2 + 45)


def g07_g(x: Array) -> Array:
    return np.array([
        -105 + 4 * x[0] + 5 * x[1] - 3 * x[6] + 9 * x[7],
        10 * x[0] - 8 * x[1] - 17 * x[6] + 2 * x[7],
        -8 * x[0] + 2 * x[1] + 5 * x[8] - 2 * x[9] - 12,
        3 * (x[0] - 2) ** 2 + 4 * (x[1] - 3) ** 2 + 2 * x[2] ** 2 - 7 * x[3] - 120,
        5 * x[0] ** 2 + 8 * x[1] + (x[2] - 6) ** 2 - 2 * x[3] - 40,
        x[0] ** 2 + 2 * (x[1] - 2) ** 2 - 2 * x[0] * x[1] + 14 * x[4] - 6 * x[5],
        0.5 * (x[0] - 8) ** 2 + 2 * (x[1] - 4) ** 2 + 3 * x[4] ** 2 - x[5] - 30,
        -3 * x[0] + 6 * x[1] + 12 * (x[8] - 8) ** 2 - 7 * x[9],
    ])


# ---------------------------------------------------------------- g08
def g08_f(x: Array) -> float:
    # 0/0 at x1 = 0 becomes nan and is mapped to the sentinel
    return -(np.sin(2 * np.pi * x[0]) ** 3 * np.sin(2 * np.pi * x[1])) / (x[0] ** 3 * (x[0] + x[1]))


def g08_g(x: Array) -> Array:
    return np.array([x[0] ** 2 - x[1] + 1, 1 - x[0] + (x[1] - 4) ** 2])


# ---------------------------------------------------------------- g09
def g09_f(x: Array) -> float:
    return ((x[0] - 10) ** 2 + 5 * (x[1] - 12) ** 2 + x[2] ** 4 + 3 * (x[3] - 11) ** 2
            + 10 * x[4] ** 6 + 7 * x[5] ** 2 + x[6] ** 4 - 4 * x[5] * x[6] - 10 * x[5] - 8 * x[6])


def g09_g(x: Array) -> Array:
    return np.array([
        -127 + 2 * x[0] ** 2 + 3 * x[1] ** 4 + x[2] + 4 * x[3] ** 2 + 5 * x[4],
        -282 + 7 * x[0] + 3 * x[1] + 10 * x[2] ** 2 + x[3] - x[4],
        -196 + 23 * x[0] + x[1] ** 2 + 6 * x[5] ** 2 - 8 * x[6],
        4 * x[0] ** 2 + x[1] ** 2 - 3 * x[0] * x[1] + 2 * x[2] ** 2 + 5 * x[5] - 11 * x[6],
    ])


# ---------------------------------------------------------------- g10
def g10_f(x: Array) -> float:
    return x[0] + x[1] + x[2]


def g10_g(x: Array) -> Array:
    return np.array([
        -1 + 0.0025 * (x[3] + x[5]),
        -1 + 0.0025 * (x[4] + x[6] - x[3]),
        -1 + 0.01 * (x[7] - x[4]),
        -x[0] * x[5] + 833.33252 * x[3] + 100 * x[0] - 83333.333,
        -x[1] * x[6] + 1250 * x[4] + x[1] * x[3] - 1250 * x[3],
        -x[2] * x[7] + 1250000 + x[2] * x[4] - 2500 * x[4],
    ])


# ---------------------------------------------------------------- g11
def g11_f(x: Array) -> float:
    return x[0] ** 2 + (x[1] - 1) ** 2


def g11_h(x: Array) -> Array:
    return np.array([x[1] - x[0] ** 2])


# ---------------------------------------------------------------- g12
_G12_CENTRES = np.arange(1.0, 10.0)


def g12_f(x: Array) -> float:
    return -(100 - (x[0] - 5) ** 2 - (x[1] - 5) ** 2 - (x[2] - 5) ** 2) / 100.0


def g12_g(x: Array) -> Array:
    # feasible inside any of the 9^3 spheres; the nearest centre is separable per axis
    nearest = np.min((x[:, None] - _G12_CENTRES[None, :]) ** 2, axis=1)
    return np.array([np.sum(nearest) - 0.0625])


# ---------------------------------------------------------------- g13
def g13_f(x: Array) -> float:
    return np.exp(np.prod(x))


def g13_h(x: Array) -> Array:
    return np.array([
        np.sum(x ** 2) - 10,
        x[1] * x[2] - 5 * x[3] * x[4],
        x[0] ** 3 + x[1] ** 3 + 1,
    ])


# ---------------------------------------------------------------- g14
_G14_C = np.array([-6.089, -17.164, -34.054, -5.914, -24.721, -14.986, -24.1, -10.708, -26.662, -22.179])


def g14_f(x: Array) -> float:
    # x log x taken as 0 at x = 0 (reachable through bound clipping)
    terms = np.where(x > 0, x * (_G14_C + np.log(np.where(x > 0, x, 1.0) / np.sum(x))), 0.0)
    return np.sum(terms)


def g14_h(x: Array) -> Array:
    return np.array([
        x[0] + 2 * x[1] + 2 * x[2] + x[5] + x[9] - 2,
        x[3] + 2 * x[4] + x[5] + x[6] - 1,
        x[2] + x[6] + x[7] + 2 * x[8] + x[9] - 1,
    ])


# ---------------------------------------------------------------- g15
def g15_f(x: Array) -> float:
    return 1000 - x[0] ** 2 - 2 * x[1] ** 2 - x[2] ** 2 - x[0] * x[1] - x[0] * x[2]


def g15_h(x: Array) -> Array:
    return np.array([
        x[0] ** 2 + x[1] ** 2 + x[2] ** 2 - 25,
        8 * x[0] + 14 * x[1] + 7 * x[2] - 56,
    ])


# ---------------------------------------------------------------- g16
def _g16_terms(x: Array) -> Dict[str, float]:
    y1 = x[1] + x[2] + 41.6
    c1 = 0.024 * x[3] - 4.62
    y2 = 12.5 / c1 + 12.0
    c2 = 0.0003535 * x[0] ** 2 + 0.5311 * x[0] + 0.08705 * y2 * x[0]
    c3 = 0.052 * x[0] + 78.0 + 0.002377 * y2 * x[0]
    y3 = c2 / c3
    y4 = 19 * y3
    c4 = 0.04782 * (x[0] - y3) + 0.1956 * (x[0] - y3) ** 2 / x[1] + 0.6376 * y4 + 1.594 * y3
    c5 = 100 * x[1]
    c6 = x[0] - y3 - y4
    c7 = 0.950 - c4 / c5
    y5 = c6 * c7
    y6 = x[0] - y5 - y4 - y3
    c8 = (y5 + y4) * 0.995
    y7 = c8 / y1
    y8 = c8 / 3798.0
    c9 = y7 - 0.0663 * y7 / y8 - 0.3153
    y9 = 96.82 / c9 + 0.321 * y1
    y10 = 1.29 * y5 + 1.258 * y4 + 2.29 * y3 + 1.71 * y6
    y11 = 1.71 * x[0] - 0.452 * y4 + 0.580 * y3
    c10 = 12.3 / 752.3
    c11 = 1.75 * y2 * 0.995 * x[0]
    c12 = 0.995 * y10 + 1998.0
    y12 = c10 * x[0] + c11 / c12
    y13 = c12 - 1.75 * y2
    y14 = 3623.0 + 64.4 * x[1] + 58.4 * x[2] + 146312.0 / (y9 + x[4])
    c13 = 0.995 * y10 + 60.8 * x[1] + 48.0 * x[3] - 0.1121 * y14 - 5095.0
    y15 = y13 / c13
    y16 = 148000.0 - 331000.0 * y15 + 40.0 * y13 - 61.0 * y15 * y13
    c14 = 2324.0 * y10 - 28740000.0 * y2
    y17 = 14130000.0 - 1328.0 * y10 - 531.0 * y11 + c14 / c12
    c15 = y13 / y15 - y13 / 0.52
    c16 = 1.104 - 0.72 * y15
    c17 = y9 + x[4]
    return dict(y1=y1, y2=y2, y3=y3, y4=y4, y5=y5, y6=y6, y7=y7, y8=y8, y9=y9, y10=y10, y11=y11,
                y12=y12, y13=y13, y14=y14, y15=y15, y16=y16, y17=y17,
                c12=c12, c15=c15, c16=c16, c17=c17)


def g16_f(x: Array) -> float:
    t = _g16_terms(x)
    return (0.000117 * t["y14"] + 0.1365 + 0.00002358 * t["y13"] + 0.000001502 * t["y16"]
            + 0.0321 * t["y12"] + 0.004324 * t["y5"] + 0.0001 * t["c15"] / t["c16"]
            + 37.48 * t["y2"] / t["c12"] - 0.0000005843 * t["y17"])


def g16_g(x: Array) -> Array:
    t = _g16_terms(x)
    y = [t[f"y{i}"] for i in range(1, 18)]
    ranges = [
        (213.1, 405.23), (17.505, 1053.6667), (11.275, 35.03), (214.228, 665.585),
        (7.458, 584.463), (0.961, 265.916), (1.612, 7.046), (0.146, 0.222),
        (107.99, 273.366), (922.693, 1286.105), (926.832, 1444.046), (18.766, 537.141),
        (1072.163, 3247.039), (8961.448, 26844.086), (0.063, 0.386), (71084.33, 140000.0),
        (2802713.0, 12146108.0),
    ]
    head = [
        0.28 / 0.72 * y[4] - y[3],
        x[2] - 1.5 * x[1],
        3496.0 * y[1] / t["c12"] - 21.0,
        110.6 + y[0] - 62212.0 / t["c17"],
    ]
    bounds = []
    for value, (low, high) in zip(y, ranges):
        bounds.extend([low - value, value - high])
    return np.array(head + bounds)


# ---------------------------------------------------------------- g17
def g17_f(x: Array) -> float:
    if 0 <= x[0] < 300:
        f1 = 30 * x[0]
    elif 300 <= x[0] <= 400:
        f1 = 31 * x[0]
    else:
        f1 = 0.0
    if 0 <= x[1] < 100:
        f2 = 28 * x[1]
    elif 100 <= x[1] < 200:
        f2 = 29 * x[1]
    elif 200 <= x[1] <= 1000:
        f2 = 30 * x[1]
    else:
        f2 = 0.0
    return f1 + f2


def g17_h(x: Array) -> Array:
    a = x[2] * x[3] / 131.078
    return np.array([
        -x[0] + 300 - a * np.cos(1.48477 - x[5]) + 0.90798 * x[2] ** 2 * np.cos(1.47588) / 131.078,
        -x[1] - a * np.cos(1.48477 + x[5]) + 0.90798 * x[3] ** 2 * np.cos(1.47588) / 131.078,
        -x[4] - a * np.sin(1.48477 + x[5]) + 0.90798 * x[3] ** 2 * np.sin(1.47588) / 131.078,
        200 - a * np.sin(1.48477 - x[5]) + 0.90798 * x[2] ** 2 * np.sin(1.47588) / 131.078,
    ])


# ---------------------------------------------------------------- g18
def g18_f(x: Array) -> float:
    return -0.5 * (x[0] * x[3] - x[1] * x[2] + x[2] * x[8] - x[4] * x[8] + x[4] * x[7] - x[5] * x[6])


def g18_g(x: Array) -> Array:
    return np.array([
        x[2] ** 2 + x[3] ** 2 - 1,
        x[8] ** 2 - 1,
        x[4] ** 2 + x[5] ** 2 - 1,
        x[0] ** 2 + (x[1] - x[8]) ** 2 - 1,
        (x[0] - x[4]) ** 2 + (x[1] - x[5]) ** 2 - 1,
        (x[0] - x[6]) ** 2 + (x[1] - x[7]) ** 2 - 1,
        (x[2] - x[4]) ** 2 + (x[3] - x[5]) ** 2 - 1,
        (x[2] - x[6]) ** 2 + (x[3] - x[7]) ** 2 - 1,
        x[6] ** 2 + (x[7] - x[8]) ** 2 - 1,
        x[1] * x[2] - x[0] * x[3],
        -x[2] * x[8],
        x[4] * x[8],
        x[5] * x[6] - x[4] * x[7],
    ])


# ---------------------------------------------------------------- g19
_G19_A = np.array([
    [-16, 2, 0, 1, 0],
    [0, -2, 0, 0.4, 2],
    [-3.5, 0, 2, 0, 0],
    [0, -2, 0, -4, -1],
    [0, -9, -2, 1, -2.8],
    [2, 0, -4, 0, 0],
    [-1, -1, -1, -1, -1],
    [-1, -2, -3, -2, -1],
    [1, 2, 3, 4, 5],
    [1, 1, 1, 1, 1],
])
_G19_B = np.array([-40, -2, -0.25, -4, -4, -1, -40, -60, 5, 1])
_G19_C = np.array([
    [30, -20, -10, 32, -10],
    [-20, 39, -6, -31, 32],
    [-10, -6, 10, -6, -10],
    [32, -31, -6, 39, -20],
    [-10, 32, -10, -20, 30],
])
_G19_D = np.array([4, 8, 10, 6, 2])
_G19_E = np.array([-15, -27, -36, -18, -12])


def g19_f(x: Array) -> float:
    y = x[10:15]
    return float(y @ _G19_C @ y + 2 * np.sum(_G19_D * y ** 3) - _G19_B @ x[:10])


def g19_g(x: Array) -> Array:
    y = x[10:15]
    return -2 * (_G19_C.T @ y) - 3 * _G19_D * y ** 2 - _G19_E + _G19_A.T @ x[:10]


# ---------------------------------------------------------------- g20
_G20_A = np.tile([0.0693, 0.0577, 0.05, 0.2, 0.26, 0.55, 0.06, 0.1, 0.12, 0.18, 0.1, 0.09], 2)
_G20_B = np.tile([44.094, 58.12, 58.12, 137.4, 120.9, 170.9, 62.501, 84.94, 133.425, 82.507, 46.07, 60.097], 2)
_G20_C = np.array([123.7, 31.7, 45.7, 14.7, 84.7, 27.7, 49.7, 7.1, 2.1, 17.7, 0.85, 0.64])
_G20_D = np.array([31.244, 36.12, 34.784, 92.7, 82.7, 91.6, 56.708, 82.7, 80.8, 64.517, 49.4, 49.1])
_G20_E = np.array([0.1, 0.3, 0.4, 0.3, 0.6, 0.3])
_G20_K = 0.7302 * 530 * 14.7 / 40


def g20_f(x: Array) -> float:
    return float(_G20_A @ x)


def g20_g(x: Array) -> Array:
    total = np.sum(x)
    first = [(x[i] + x[i + 12]) / (total + _G20_E[i]) for i in range(3)]
    second = [(x[i + 3] + x[i + 15]) / (total + _G20_E[i + 3]) for i in range(3)]
    return np.array(first + second)


def g20_h(x: Array) -> Array:
    low, high = x[:12], x[12:]
    ratio_high = np.sum(high / _G20_B[12:])
    ratio_low = np.sum(low / _G20_B[:12])
    h = high / (_G20_B[12:] * ratio_high) - _G20_C * low / (40 * _G20_B[:12] * ratio_low)
    h13 = np.sum(x) - 1
    h14 = np.sum(low / _G20_D) + _G20_K * ratio_high - 1.671
    return np.concatenate([h, [h13, h14]])


# ---------------------------------------------------------------- g21
def g21_f(x: Array) -> float:
    return x[0]


def g21_g(x: Array) -> Array:
    return np.array([-x[0] + 35 * x[1] ** 0.6 + 35 * x[2] ** 0.6])


def g21_h(x: Array) -> Array:
    return np.array([
        -300 * x[2] + 7500 * x[4] - 7500 * x[5] - 25 * x[3] * x[4] + 25 * x[3] * x[5] + x[2] * x[3],
        100 * x[1] + 155.365 * x[3] + 2500 * x[6] - x[1] * x[3] - 25 * x[3] * x[6] - 15536.5,
        -x[4] + np.log(-x[3] + 900),
        -x[5] + np.log(x[3] + 300),
        -x[6] + np.log(-2 * x[3] + 700),
    ])


# ---------------------------------------------------------------- g22
def g22_f(x: Array) -> float:
    return x[0]


def g22_g(x: Array) -> Array:
    return np.array([x[0] - x[1] ** 0.6 - x[2] ** 0.6 - x[3] ** 0.6])


def g22_h(x: Array) -> Array:
    return np.array([
        x[4] - 100000 * x[7] + 1e7,
        x[5] + 100000 * x[7] - 100000 * x[8],
        x[6] + 100000 * x[8] - 5e7,
        x[4] + 100000 * x[9] - 3.3e7,
        x[5] + 100000 * x[10] - 4.4e7,
        x[6] + 100000 * x[11] - 6.6e7,
        x[4] - 120 * x[1] * x[12],
        x[5] - 80 * x[2] * x[13],
        x[6] - 40 * x[3] * x[14],
        x[7] - x[10] + x[15],
        x[8] - x[11] + x[16],
        -x[17] + np.log(x[9] - 100),
        -x[18] + np.log(-x[7] + 300),
        -x[19] + np.log(x[15]),
        -x[20] + np.log(-x[8] + 400),
        -x[21] + np.log(x[16]),
        -x[7] - x[9] + x[12] * x[17] - x[12] * x[18] + 400,
        x[7] - x[8] - x[10] + x[13] * x[19] - x[13] * x[20] + 400,
        x[8] - x[11] - 4.60517 * x[14] + x[14] * x[21] + 100,
    ])


# ---------------------------------------------------------------- g23
def g23_f(x: Array) -> float:
    return -9 * x[4] - 15 * x[7] + 6 * x[0] + 16 * x[1] + 10 * (x[5] + x[6])


def g23_g(x: Array) -> Array:
    return np.array([
        x[8] * x[2] + 0.02 * x[5] - 0.025 * x[4],
        x[8] * x[3] + 0.02 * x[6] - 0.015 * x[7],
    ])


def g23_h(x: Array) -> Array:
    return np.array([
        x[0] + x[1] - x[2] - x[3],
        0.03 * x[0] + 0.01 * x[1] - x[8] * (x[2] + x[3]),
        x[2] + x[5] - x[4],
        x[3] + x[6] - x[7],
    ])


# ---------------------------------------------------------------- g24
def g24_f(x: Array) -> float:
    return -x[0] - x[1]


def g24_g(x: Array) -> Array:
    return np.array([
        -2 * x[0] ** 4 + 8 * x[0] ** 3 - 8 * x[0] ** 2 + x[1] - 2,
        -4 * x[0] ** 4 + 32 * x[0] ** 3 - 88 * x[0] ** 2 + 96 * x[0] + x[1] - 36,
    ])


FORMULAS: Dict[str, Formula] = {
    "g01": Formula(
        lower=(0,) * 13, upper=(1,) * 9 + (100,) * 3 + (1,),
        objective=g01_f, inequalities=g01_g, n_ineq=9,
        x_star=(1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 1),
    ),
    "g02": Formula(
        lower=(0,) * 20, upper=(10,) * 20,
        objective=g02_f, inequalities=g02_g, n_ineq=2,
        x_star=(3.16246061572185, 3.12833142812967, 3.09479212988791, 3.06145059523469,
                3.02792915885555, 2.99382606701730, 2.95866871765285, 2.92184227312450,
                0.49482511456933, 0.48835711005490, 0.48231642711865, 0.47664475092742,
                0.47129550835493, 0.46623099264167, 0.46142004984199, 0.45683664767217,
                0.45245876903267, 0.44826762241853, 0.44424700958760, 0.44038285956317),
    ),
    "g03": Formula(
        lower=(0,) * 10, upper=(1,) * 10,
        objective=g03_f, equalities=g03_h, n_eq=1,
        x_star=(0.31624357647283069, 0.316243577414338339, 0.316243578012345927,
                0.316243575664017895, 0.316243578205526066, 0.31624357738855069,
                0.316243575472949512, 0.316243577164883938, 0.316243578155920302,
                0.316243576147374916),
    ),
    "g04": Formula(
        lower=(78, 33, 27, 27, 27), upper=(102, 45, 45, 45, 45),
        objective=g04_f, inequalities=g04_g, n_ineq=6,
        x_star=(78, 33, 29.9952560256815985, 45, 36.7758129057882073),
    ),
    "g05": Formula(
        lower=(0, 0, -0.55, -0.55), upper=(1200, 1200, 0.55, 0.55),
        objective=g05_f, inequalities=g05_g, equalities=g05_h, n_ineq=2, n_eq=3,
        x_star=(679.945148297028709, 1026.06697600004691, 0.118876369094410433, -0.39623348521517826),
    ),
    "g06": Formula(
        lower=(13, 0), upper=(100, 100),
        objective=g06_f, inequalities=g06_g, n_ineq=2,
        x_star=(14.09500000000000064, 0.8429607892154795668),
    ),
    "g07": Formula(
        lower=(-10,) * 10, upper=(10,) * 10,
        objective=g07_f, inequalities=g07_g, n_ineq=8,
        x_star=(2.17199634142692, 2.3636830416034, 8.77392573913157, 5.09598443745173,
                0.990654756560493, 1.43057392853463, 1.32164415364306, 9.82872576524495,
                8.2800915887356, 8.3759266477347),
    ),
    "g08": Formula(
        lower=(0, 0), upper=(10, 10),
        objective=g08_f, inequalities=g08_g, n_ineq=2,
        x_star=(1.22797135260752599, 4.24537336612274885),
    ),
    "g09": Formula(
        lower=(-10,) * 7, upper=(10,) * 7,
        objective=g09_f, inequalities=g09_g, n_ineq=4,
        x_star=(2.33049935147405174, 1.95137236847114592, -0.477541399510615805, 4.36572624923625874,
                -0.624486959100388983, 1.03813099410962173, 1.5942266780671519),
    ),
    "g10": Formula(
        lower=(100, 1000, 1000, 10, 10, 10, 10, 10),
        upper=(10000, 10000, 10000, 1000, 1000, 1000, 1000, 1000),
        objective=g10_f, inequalities=g10_g, n_ineq=6,
        x_star=(579.306685017979589, 1359.97067807935605, 5109.97065743133317, 182.01769963061534,
                295.601173702746792, 217.982300369384632, 286.41652592786852, 395.60117370274673),
    ),
    "g11": Formula(
        lower=(-1, -1), upper=(1, 1),
        objective=g11_f, equalities=g11_h, n_eq=1,
        x_star=(-0.707036070037170616, 0.500000004333606807),
    ),
    "g12": Formula(
        lower=(0, 0, 0), upper=(10, 10, 10),
        objective=g12_f, inequalities=g12_g, n_ineq=1,
        x_star=(5, 5, 5),
    ),
    "g13": Formula(
        lower=(-2.3, -2.3, -3.2, -3.2, -3.2), upper=(2.3, 2.3, 3.2, 3.2, 3.2),
        objective=g13_f, equalities=g13_h, n_eq=3,
        x_star=(-1.71714224003, 1.59572124049468, 1.8272502406271, -0.763659881912867, -0.76365986736498),
    ),
    "g14": Formula(
        lower=(0,) * 10, upper=(10,) * 10,
        objective=g14_f, equalities=g14_h, n_eq=3,
        x_star=(0.0406684113216282, 0.147721240492452, 0.783205732104114, 0.00141433931889084,
                0.485293636780388, 0.000693183051556082, 0.0274052040687766, 0.0179509660214818,
                0.0373268186859717, 0.0968844604336845),
    ),
    "g15": Formula(
        lower=(0, 0, 0), upper=(10, 10, 10),
        objective=g15_f, equalities=g15_h, n_eq=2,
        x_star=(3.51212812611795133, 0.216987510429556135, 3.55217854929179921),
    ),
    "g16": Formula(
        lower=(704.4148, 68.6, 0, 193, 25), upper=(906.3855, 288.88, 134.75, 287.0966, 84.1988),
        objective=g16_f, inequalities=g16_g, n_ineq=38,
        x_star=(705.174537070090537, 68.5999999999999943, 102.899999999999991,
                282.324931593660324, 37.5841164258054832),
    ),
    "g17": Formula(
        lower=(0, 0, 340, 340, -1000, 0), upper=(400, 1000, 420, 420, 1000, 0.5236),
        objective=g17_f, equalities=g17_h, n_eq=4,
        x_star=(201.784467214523659, 99.9999999999999005, 383.071034852773266, 420,
                -10.9076584514292652, 0.0731482312084287128),
    ),
    "g18": Formula(
        lower=(-10,) * 8 + (0,), upper=(10,) * 8 + (20,),
        objective=g18_f, inequalities=g18_g, n_ineq=13,
        x_star=(-0.657776192427943163, -0.153418773482438542, 0.323413871675240938,
                -0.946257611651304398, -0.657776194376798906, -0.753213434632691414,
                0.323413874123576972, -0.346462947962331735, 0.59979466285217542),
    ),
    "g19": Formula(
        lower=(0,) * 15, upper=(10,) * 15,
        objective=g19_f, inequalities=g19_g, n_ineq=5,
        x_star=(1.66991341326291344e-17, 3.95378229282456509e-16, 3.94599045143233784,
                1.06036597479721211e-16, 3.2831773458454161, 9.99999999999999822,
                1.12829414671605333e-17, 1.2026194599794709e-17, 2.50706276000769697e-15,
                2.24624122987970677e-15, 0.370764847417013987, 0.278456024942955571,
                0.523838487672241171, 0.388620152510322781, 0.298156764974678579),
    ),
    "g20": Formula(
        lower=(0,) * 24, upper=(10,) * 24,
        objective=g20_f, inequalities=g20_g, equalities=g20_h, n_ineq=6, n_eq=14,
    ),
    "g21": Formula(
        lower=(0, 0, 0, 100, 6.3, 5.9, 4.5), upper=(1000, 40, 40, 300, 6.7, 6.4, 6.25),
        objective=g21_f, inequalities=g21_g, equalities=g21_h, n_ineq=1, n_eq=5,
        x_star=(193.724510070034967, 5.56944131553368433e-27, 17.3191887294084914,
                100.047897801386839, 6.68445185362377892, 5.99168428444264833, 6.21451648886070451),
    ),
    "g22": Formula(
        lower=(0, 0, 0, 0, 0, 0, 0, 100, 100, 100.01, 100, 100, 0, 0, 0, 0.01, 0.01,
               -4.7, -4.7, -4.7, -4.7, -4.7),
        upper=(20000, 1e6, 1e6, 1e6, 4e7, 4e7, 4e7, 299.99, 399.99, 300, 400, 600, 500, 500, 500,
               300, 400, 6.25, 6.25, 6.25, 6.25, 6.25),
        objective=g22_f, inequalities=g22_g, equalities=g22_h, n_ineq=1, n_eq=19,
        x_star=(236.430975504001054, 135.82847151732463, 204.818152544824585, 6446.54654059436416,
                3007540.83940215595, 4074188.65771341929, 32918270.5028952882, 130.075408394314167,
                170.817294970528621, 299.924591605478554, 399.258113423595205, 330.817294971142758,
                184.51831230897065, 248.64670239647424, 127.658546694545862, 269.182627528746707,
                160.000016724090955, 5.29788288102680571, 5.13529735903945728, 5.59531526444068827,
                5.43444479314453499, 5.07517453535834395),
    ),
    "g23": Formula(
        lower=(0, 0, 0, 0, 0, 0, 0, 0, 0.01), upper=(300, 300, 100, 200, 100, 300, 100, 200, 0.03),
        objective=g23_f, inequalities=g23_g, equalities=g23_h, n_ineq=2, n_eq=4,
        x_star=(0.00510000000000259465, 99.9947000000000514, 9.01920162996045897e-18,
                99.9999000000000535, 0.000100000000027086086, 2.75700683389584542e-14,
                99.9999999999999574, 200, 0.0100000100000100008),
    ),
    "g24": Formula(
        lower=(0, 0), upper=(3, 4),
        objective=g24_f, inequalities=g24_g, n_ineq=2,
        x_star=(2.32952019747762, 3.17849307411774),
    ),
}
