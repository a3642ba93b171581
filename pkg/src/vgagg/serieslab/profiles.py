"""Weight profiles of structured series: repeated patterns and isolated spikes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..aggregate import vga_weights
from ..errors import ContractViolation
from ..visibility import build_graph
from .generators import GeneratorSpec, generate


@dataclass(frozen=True)
class PeriodicProfile:
    period: int
    repetitions: int
    degrees: tuple[int, ...]
    weights: tuple[float, ...]

    def period_degrees(self) -> list[tuple[int, ...]]:
        p = self.period
        return [self.degrees[r * p : (r + 1) * p] for r in range(self.repetitions)]

    def interior_periods(self) -> list[tuple[int, ...]]:
        """Degree blocks of every period except the first and the last."""
        return self.period_degrees()[1:-1]

    @property
    def interior_is_periodic(self) -> bool:
        return len(set(self.interior_periods())) == 1


def periodic_weight_profile(pattern: Sequence[float], repetitions: int, engine: str = "fast") -> PeriodicProfile:
    if repetitions < 4:
        raise ContractViolation(f"need at least 4 repetitions, got {repetitions}")
    pattern = tuple(float(p) for p in pattern)
    series = generate(GeneratorSpec("periodic", len(pattern) * repetitions, pattern=pattern))
    graph = build_graph(series, engine=engine)
    return PeriodicProfile(
        period=len(pattern),
        repetitions=repetitions,
        degrees=graph.degrees,
        weights=vga_weights(graph),
    )


def spike_influence_profile(
    pattern: Sequence[float],
    periods_before: int,
    periods_after_range: Iterable[int],
    spike_height: float = 50.0,
    engine: str = "fast",
) -> list[tuple[int, float]]:
    """VGA weight of a spike as more periods follow it.

    The series is ``periods_before + 1 + periods_after`` copies of ``pattern``
    with the first value of copy ``periods_before`` replaced by the spike.
    Returns ``(periods_after, spike_weight)`` pairs in the order given.
    """
    pattern = tuple(float(p) for p in pattern)
    if not pattern:
        raise ContractViolation("pattern must not be empty")
    if not spike_height > max(pattern):
        raise ContractViolation(f"spike height {spike_height} must exceed the pattern maximum {max(pattern)}")
    if periods_before < 0:
        raise ContractViolation("periods_before must be non-negative")
    p = len(pattern)
    position = p * periods_before
    out = []
    for after in periods_after_range:
        if after < 0:
            raise ContractViolation("trailing period counts must be non-negative")
        spec = GeneratorSpec(
            "spiked-periodic",
            p * (periods_before + 1 + after),
            pattern=pattern,
            spike_position=position,
            spike_height=spike_height,
        )
        weights = vga_weights(build_graph(generate(spec), engine=engine))
        out.append((after, weights[position]))
    return out
