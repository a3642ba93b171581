"""Visibility-graph averaging and maximal-entropy OWA aggregation of time series."""

from .aggregate import (
    AggregationResult,
    OwaSpec,
    arithmetic_mean,
    orness,
    owa_aggregate,
    owa_solve_w1,
    owa_weights,
    vga_aggregate,
    vga_weights,
)
from .errors import ContractViolation, EmptyInputError, IngestionError, SolverFailure, VgaggError
from .visibility import (
    TimePoint,
    TimeSeries,
    VisibilityGraph,
    build_graph,
    build_graph_fast,
    build_graph_oracle,
    degree_distribution,
    visible,
)

__version__ = "0.1.0"

__all__ = [
    "AggregationResult",
    "OwaSpec",
    "arithmetic_mean",
    "orness",
    "owa_aggregate",
    "owa_solve_w1",
    "owa_weights",
    "vga_aggregate",
    "vga_weights",
    "ContractViolation",
    "EmptyInputError",
    "IngestionError",
    "SolverFailure",
    "VgaggError",
    "TimePoint",
    "TimeSeries",
    "VisibilityGraph",
    "build_graph",
    "build_graph_fast",
    "build_graph_oracle",
    "degree_distribution",
    "visible",
]
