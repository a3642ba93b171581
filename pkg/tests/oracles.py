"""Reference computations that share no code with the package."""

from __future__ import annotations

import warnings
from fractions import Fraction

import numpy as np
from scipy.optimize import brentq, minimize


def exact_visibility_edges(values, times=None):
    """All visible pairs, decided in exact rational arithmetic.

    Uses the criterion in its division form
    y_k < y_j + (y_i - y_j) * (t_j - t_k) / (t_j - t_i) with Fractions, so
    there is no rounding at all.
    """
    y = [Fraction(v) for v in values]
    t = [Fraction(v) for v in (times if times is not None else range(1, len(y) + 1))]
    edges = set()
    for i in range(len(y)):
        for j in range(i + 1, len(y)):
            if all(y[k] < y[j] + (y[i] - y[j]) * (t[j] - t[k]) / (t[j] - t[i]) for k in range(i + 1, j)):
                edges.add((i, j))
    return edges


def max_entropy_weights(n, alpha):
    """Maximal-entropy OWA weights by constrained optimisation (SLSQP)."""
    coef = np.array([(n - j) / (n - 1) for j in range(1, n + 1)])
    cons = [
        {"type": "eq", "fun": lambda w: np.sum(w) - 1.0},
        {"type": "eq", "fun": lambda w: coef @ w - alpha},
    ]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        res = minimize(
            lambda w: np.sum(w * np.log(np.clip(w, 1e-300, None))),
            np.full(n, 1.0 / n),
            method="SLSQP",
            bounds=[(1e-12, 1.0)] * n,
            constraints=cons,
            options={"ftol": 1e-15, "maxiter": 1000},
        )
    assert res.success, res.message
    return res.x


def w1_by_brentq(n, alpha):
    """Root of the raw (undeflated) first-weight polynomial via scipy's brentq.

    The genuine root is bracketed using the ratio form of the weights: for
    alpha > 0.5 it lies in (1/n, 1), otherwise in (0, 1/n). The end at 1/n is
    nudged by a step large enough to leave the double root's noise band.
    """
    a = (n - 1) * alpha

    def f(w):
        return w * (a + 1 - n * w) ** n - a ** (n - 1) * ((a - n) * w + 1)

    lo, hi = (1.0 / n, 1.0 - 1e-15) if alpha > 0.5 else (1e-300, 1.0 / n)
    grid = np.linspace(lo, hi, 20001)[1:-1]
    vals = np.array([f(x) for x in grid])
    idx = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
    # the genuine root is the sign change farthest from the uniform point
    k = idx[-1] if alpha > 0.5 else idx[0]
    return brentq(f, grid[k], grid[k + 1], xtol=1e-16, rtol=4 * np.finfo(float).eps)
