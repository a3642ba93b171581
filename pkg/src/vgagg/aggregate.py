"""VGA and OWA aggregation operators.

VGA weights each sample by its share of the total visibility-graph degree.
The OWA family uses maximal-entropy weights for a prescribed orness, found
by solving a one-dimensional polynomial equation for the first weight; the
remaining weights then follow a geometric progression.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .errors import ContractViolation, EmptyInputError, SolverFailure
from .visibility import TimeSeries, VisibilityGraph, as_series, build_graph

__all__ = [
    "OwaSpec",
    "AggregationResult",
    "vga_weights",
    "vga_aggregate",
    "owa_solve_w1",
    "w1_residual",
    "common_ratio",
    "owa_weights",
    "owa_aggregate",
    "orness",
    "arithmetic_mean",
]

Rounding = Literal["exact", "4dp"]

# bracket scan for the first OWA weight
_GRID_POINTS = 1024
_EDGE = 1e-12
_SUM_TOL = 1e-9
# below this distance from the uniform point, use the deflated form
_DEFLATE_RADIUS = 0.5


@dataclass(frozen=True)
class OwaSpec:
    n: int
    alpha: float

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 1:
            raise ContractViolation(f"OWA argument count must be a positive integer, got {self.n!r}")
        if not (0.0 <= self.alpha <= 1.0):
            raise ContractViolation(f"orness must lie in [0, 1], got {self.alpha!r}")


@dataclass(frozen=True)
class AggregationResult:
    value: float
    weights: tuple[float, ...]
    method: str


def vga_weights(graph: VisibilityGraph) -> tuple[float, ...]:
    """Degree-proportional weights; a lone vertex gets weight 1."""
    if graph.n == 0:
        raise EmptyInputError("cannot weight an empty graph")
    if graph.n == 1:
        return (1.0,)
    total = sum(graph.degrees)
    return tuple(d / total for d in graph.degrees)


def vga_aggregate(series: TimeSeries | Sequence[float], engine: str = "fast") -> AggregationResult:
    s = as_series(series)
    if len(s) == 0:
        raise EmptyInputError("cannot aggregate an empty series")
    weights = vga_weights(build_graph(s, engine=engine))
    value = math.fsum(w * a for w, a in zip(weights, s.y.tolist()))
    return AggregationResult(value=value, weights=weights, method="VGA")


def w1_residual(n: int, alpha: float, w1: float) -> float:
    """Residual of the maximal-entropy equation for the first weight,

        w1 * (a + 1 - n*w1)**n = a**(n-1) * ((a - n)*w1 + 1),  a = (n-1)*alpha,

    divided through by ``a**(n-1)`` so it is O(1) for every n and alpha.
    """
    a = (n - 1) * alpha
    return w1 * (a + 1.0 - n * w1) ** n / a ** (n - 1) - ((a - n) * w1 + 1.0)


def _deflated_coefficients(n: int, alpha: float) -> list[float]:
    # With x = n*w1 and y = x - 1 the equation is (1+y)(a-y)^n - a^n - (a-n)a^(n-1) y = 0,
    # whose constant and linear terms vanish: y = 0 (the uniform vector) is a
    # double root. Dividing by y^2 leaves a degree n-1 polynomial; returned
    # highest power first for Horner evaluation.
    a = (n - 1) * alpha
    coeffs = []
    for m in range(n + 1, 1, -1):
        c = math.comb(n, m) * a ** (n - m) - math.comb(n, m - 1) * a ** (n - m + 1)
        coeffs.append(c if m % 2 == 0 else -c)
    return coeffs


def _w1_sign_function(n: int, alpha: float):
    """A function with the sign of the w1 residual but without the double root at 1/n.

    Near ``1/n`` the residual is pure rounding noise, so the deflated
    polynomial decides the sign there; elsewhere the residual itself does.
    """
    coeffs = _deflated_coefficients(n, alpha)

    def g(w1: float) -> float:
        y = n * w1 - 1.0
        if abs(y) < _DEFLATE_RADIUS:
            acc = 0.0
            for c in coeffs:
                acc = acc * y + c
            return acc
        return w1_residual(n, alpha, w1)

    return g


def _bisect(g, lo: float, hi: float, glo: float) -> float:
    # run to float exhaustion: the bracket ends up one ulp wide
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        gmid = g(mid)
        if gmid == 0.0:
            return mid
        if (gmid < 0.0) == (glo < 0.0):
            lo, glo = mid, gmid
        else:
            hi = mid


def common_ratio(n: int, alpha: float, w1: float) -> float:
    """Ratio between consecutive maximal-entropy weights given the first one.

    The last weight is ``((a - n)*w1 + 1) / (a + 1 - n*w1)``; substituting the
    w1 equation turns this into ``w1 * r**(n-1)`` with ``r = (a + 1 - n*w1)/a``,
    which avoids the cancellation in the numerator at extreme orness.
    """
    a = (n - 1) * alpha
    return (a + 1.0 - n * w1) / a


def owa_solve_w1(spec: OwaSpec) -> float:
    """First maximal-entropy OWA weight for ``n >= 3`` and ``0 < alpha < 1``, ``alpha != 0.5``.

    The uniform point ``w1 = 1/n`` is a double root for every alpha and never
    the answer; the genuine root lies above it when ``alpha > 0.5`` and below
    it otherwise. That side is scanned on a uniform grid for a sign change,
    which is then bisected down to one ulp.
    """
    n, alpha = spec.n, spec.alpha
    if n < 3 or not (0.0 < alpha < 1.0) or alpha == 0.5:
        raise ContractViolation(f"w1 solve needs n >= 3 and 0 < alpha < 1, alpha != 0.5; got n={n}, alpha={alpha}")
    g = _w1_sign_function(n, alpha)
    lo, hi = (1.0 / n, 1.0 - _EDGE) if alpha > 0.5 else (_EDGE, 1.0 / n)
    grid = np.linspace(lo, hi, _GRID_POINTS)
    values = [g(float(x)) for x in grid]
    for k in range(len(grid) - 1):
        a, b = float(grid[k]), float(grid[k + 1])
        ga, gb = values[k], values[k + 1]
        if ga == 0.0:
            root = a
        elif (ga < 0.0) != (gb < 0.0):
            root = _bisect(g, a, b, ga)
        else:
            continue
        if common_ratio(n, alpha, root) > 0.0:
            return root
    raise SolverFailure(f"no sign change for w1 in ({lo:g}, {hi:g}) with n={n}, alpha={alpha}")


def owa_weights(spec: OwaSpec) -> tuple[float, ...]:
    """Maximal-entropy OWA weights with orness ``spec.alpha``, largest-rank first."""
    n, alpha = spec.n, spec.alpha
    if n == 1:
        return (1.0,)
    if n == 2:
        return (alpha, 1.0 - alpha)
    if alpha == 1.0:
        return (1.0,) + (0.0,) * (n - 1)
    if alpha == 0.0:
        return (0.0,) * (n - 1) + (1.0,)
    if alpha == 0.5:
        return (1.0 / n,) * n
    w1 = owa_solve_w1(spec)
    r = common_ratio(n, alpha, w1)
    weights = tuple(w1 * r ** (j - 1) for j in range(1, n + 1))
    if abs(math.fsum(weights) - 1.0) > _SUM_TOL:
        raise SolverFailure(f"weights for n={n}, alpha={alpha} sum to {math.fsum(weights)!r}")
    return weights


def owa_aggregate(values: Sequence[float], spec: OwaSpec, rounding: Rounding = "exact") -> AggregationResult:
    """Weighted sum of ``values`` sorted in descending order.

    ``rounding="4dp"`` rounds each weight to four decimals before the dot
    product, the way published weight tables are applied by hand.
    """
    vals = [float(v) for v in values]
    if len(vals) != spec.n:
        raise ContractViolation(f"expected {spec.n} values, got {len(vals)}")
    weights = owa_weights(spec)
    if rounding == "4dp":
        weights = tuple(round(w, 4) for w in weights)
    elif rounding != "exact":
        raise ContractViolation(f"unknown rounding mode {rounding!r}")
    ranked = sorted(vals, reverse=True)
    value = math.fsum(w * p for w, p in zip(weights, ranked))
    return AggregationResult(value=value, weights=weights, method="OWA")


def orness(weights: Sequence[float]) -> float:
    n = len(weights)
    if n < 2:
        raise ContractViolation("orness needs at least two weights")
    return math.fsum((n - j) / (n - 1) * w for j, w in enumerate(weights, start=1))


def arithmetic_mean(values: Sequence[float]) -> float:
    vals = [float(v) for v in values]
    if not vals:
        raise EmptyInputError("mean of no values")
    return math.fsum(vals) / len(vals)
