"""Deterministic series generators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import ContractViolation
from ..visibility import TimeSeries

KINDS = ("periodic", "conway", "spiked-periodic", "uniform-random")

DEFAULT_PATTERN = (4.0, 3.0, 2.0, 5.0, 1.0)


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate.

    ``pattern`` drives the periodic kinds. For ``spiked-periodic`` the value
    at 0-based ``spike_position`` is replaced by ``spike_height``.
    ``uniform-random`` draws from [0, 1) with a PCG64 stream seeded by
    ``seed``, which is mandatory for that kind.
    """

    kind: str
    length: int
    pattern: tuple[float, ...] = DEFAULT_PATTERN
    spike_position: int | None = None
    spike_height: float | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ContractViolation(f"unknown generator kind {self.kind!r}; expected one of {KINDS}")
        if int(self.length) != self.length or self.length < 1:
            raise ContractViolation(f"length must be a positive integer, got {self.length!r}")
        object.__setattr__(self, "pattern", tuple(float(p) for p in self.pattern))
        if self.kind in ("periodic", "spiked-periodic") and not self.pattern:
            raise ContractViolation("periodic kinds need a non-empty pattern")
        if self.kind == "uniform-random" and self.seed is None:
            raise ContractViolation("uniform-random generation requires a seed")
        if self.kind == "spiked-periodic":
            if self.spike_position is None or self.spike_height is None:
                raise ContractViolation("spiked-periodic needs spike_position and spike_height")
            if not (0 <= self.spike_position < self.length):
                raise ContractViolation(
                    f"spike position {self.spike_position} outside 0..{self.length - 1}"
                )


def conway(length: int) -> list[int]:
    """Hofstadter-Conway sequence a(1)=a(2)=1, a(n)=a(a(n-1))+a(n-a(n-1))."""
    if length < 1:
        return []
    a = [0, 1, 1]  # 1-based; a[0] unused
    for n in range(3, length + 1):
        a.append(a[a[n - 1]] + a[n - a[n - 1]])
    return a[1 : length + 1]


def repeat_pattern(pattern: Sequence[float], length: int) -> list[float]:
    p = list(pattern)
    return [p[i % len(p)] for i in range(length)]


def generate(spec: GeneratorSpec) -> TimeSeries:
    if spec.kind == "periodic":
        values = repeat_pattern(spec.pattern, spec.length)
    elif spec.kind == "spiked-periodic":
        values = repeat_pattern(spec.pattern, spec.length)
        values[spec.spike_position] = float(spec.spike_height)
    elif spec.kind == "conway":
        values = [float(v) for v in conway(spec.length)]
    else:
        rng = np.random.default_rng(spec.seed)
        values = rng.random(spec.length).tolist()
    return TimeSeries.from_values(values)
