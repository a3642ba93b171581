"""Natural visibility graphs of time series.

Two samples ``(t_i, y_i)`` and ``(t_j, y_j)`` see each other when every sample
strictly between them lies strictly below the straight chord joining them.
A sample exactly on the chord blocks the view, so collinear runs collapse to
path segments.

The chord test is evaluated in cross-multiplied form,

    (y_k - y_j) * (t_j - t_i) < (y_i - y_j) * (t_j - t_k),

with no division and no epsilon slack. Every construction path in this module
calls the same predicate, which keeps the brute-force builder and the
running-maximum builder bit-for-bit comparable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from numba import njit

from .errors import ContractViolation

__all__ = [
    "TimePoint",
    "TimeSeries",
    "VisibilityGraph",
    "as_series",
    "visible",
    "build_graph",
    "build_graph_oracle",
    "build_graph_fast",
    "degree_distribution",
]


class TimePoint(NamedTuple):
    t: float
    y: float


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Ordered samples with strictly increasing, finite abscissas.

    Arrays are copied to read-only float64 on construction.
    """

    t: np.ndarray
    y: np.ndarray

    def __post_init__(self) -> None:
        t = np.array(self.t, dtype=np.float64).reshape(-1)
        y = np.array(self.y, dtype=np.float64).reshape(-1)
        if t.shape != y.shape:
            raise ContractViolation(f"abscissa/value length mismatch: {t.size} != {y.size}")
        if not (np.all(np.isfinite(t)) and np.all(np.isfinite(y))):
            raise ContractViolation("time series contains NaN or infinite entries")
        if t.size > 1 and not np.all(np.diff(t) > 0):
            raise ContractViolation("abscissas must be strictly increasing")
        t.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_values(cls, values: Iterable[float], t: Iterable[float] | None = None) -> "TimeSeries":
        """Build a series; abscissas default to the ordinal positions 1..n."""
        y = np.asarray(list(values), dtype=np.float64)
        if t is None:
            t = np.arange(1, y.size + 1, dtype=np.float64)
        return cls(t=np.asarray(list(t), dtype=np.float64), y=y)

    @property
    def points(self) -> list[TimePoint]:
        return [TimePoint(float(a), float(b)) for a, b in zip(self.t, self.y)]

    def __len__(self) -> int:
        return int(self.y.size)


def as_series(data: TimeSeries | Sequence[float] | np.ndarray) -> TimeSeries:
    if isinstance(data, TimeSeries):
        return data
    return TimeSeries.from_values(data)


@dataclass(frozen=True)
class VisibilityGraph:
    """Undirected simple graph on series indices.

    ``edges`` holds canonical ``(i, j)`` pairs with ``i < j`` in sorted order;
    ``neighbors[v]`` is the sorted adjacency list of ``v``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...]
    neighbors: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "VisibilityGraph":
        canon = sorted({(min(a, b), max(a, b)) for a, b in edges})
        adj: list[list[int]] = [[] for _ in range(n)]
        for i, j in canon:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise ContractViolation(f"invalid edge ({i}, {j}) for {n} vertices")
            adj[i].append(j)
            adj[j].append(i)
        neighbors = tuple(tuple(sorted(a)) for a in adj)
        return cls(
            n=n,
            edges=tuple(canon),
            degrees=tuple(len(a) for a in neighbors),
            neighbors=neighbors,
        )

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def to_edgelist(self) -> str:
        """One ``"i j"`` line per edge, 0-based, ``i < j``, newline-terminated."""
        return "".join(f"{i} {j}\n" for i, j in self.edges)


@njit(cache=True)
def _below(t, y, i, k, j):
    # sample k strictly under the chord from i to j
    return (y[k] - y[j]) * (t[j] - t[i]) < (y[i] - y[j]) * (t[j] - t[k])


@njit(cache=True)
def _oracle_kernel(t, y):
    n = y.shape[0]
    m = n * (n - 1) // 2
    src = np.empty(m, dtype=np.int64)
    dst = np.empty(m, dtype=np.int64)
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            ok = True
            for k in range(i + 1, j):
                if not _below(t, y, i, k, j):
                    ok = False
                    break
            if ok:
                src[count] = i
                dst[count] = j
                count += 1
    return src[:count], dst[:count]


@njit(cache=True)
def _fast_kernel(t, y):
    # For fixed i, j is visible iff slope(i, j) beats every slope(i, k), k < j.
    # Track the arg-max k and test it with the shared chord predicate.
    n = y.shape[0]
    m = n * (n - 1) // 2
    src = np.empty(m, dtype=np.int64)
    dst = np.empty(m, dtype=np.int64)
    count = 0
    for i in range(n - 1):
        src[count] = i
        dst[count] = i + 1
        count += 1
        best = i + 1
        for j in range(i + 2, n):
            if _below(t, y, i, best, j):
                src[count] = i
                dst[count] = j
                count += 1
                best = j
    return src[:count], dst[:count]


def _check_index(n: int, i: int, j: int) -> None:
    if not (0 <= i < j < n):
        raise ContractViolation(f"need 0 <= i < j < n, got i={i}, j={j}, n={n}")


def visible(series: TimeSeries | Sequence[float], i: int, j: int) -> bool:
    """True when samples ``i < j`` see each other."""
    s = as_series(series)
    _check_index(len(s), i, j)
    return all(_below(s.t, s.y, i, k, j) for k in range(i + 1, j))


def _graph_from_arrays(n: int, src: np.ndarray, dst: np.ndarray) -> VisibilityGraph:
    edges = tuple(zip(src.tolist(), dst.tolist()))
    return VisibilityGraph.from_edges(n, edges)


def build_graph_oracle(series: TimeSeries | Sequence[float]) -> VisibilityGraph:
    """Brute-force construction: test every pair against every sample between.

    O(n^3) in the worst case. Kept as the reference the fast builder is
    checked against.
    """
    s = as_series(series)
    src, dst = _oracle_kernel(s.t, s.y)
    return _graph_from_arrays(len(s), src, dst)


def build_graph_fast(series: TimeSeries | Sequence[float]) -> VisibilityGraph:
    """O(n^2) construction by a running maximum of chord slopes per anchor."""
    s = as_series(series)
    src, dst = _fast_kernel(s.t, s.y)
    return _graph_from_arrays(len(s), src, dst)


_ENGINES = {"fast": build_graph_fast, "oracle": build_graph_oracle}


def build_graph(series: TimeSeries | Sequence[float], engine: str = "fast") -> VisibilityGraph:
    try:
        builder = _ENGINES[engine]
    except KeyError:
        raise ContractViolation(f"unknown engine {engine!r}; expected one of {sorted(_ENGINES)}") from None
    return builder(series)


def degree_distribution(graph: VisibilityGraph) -> dict[int, int]:
    """Map degree value -> number of vertices with that degree, keys ascending."""
    return dict(sorted(Counter(graph.degrees).items()))
