"""Exception types shared across the package."""

from __future__ import annotations


class VgaggError(Exception):
    """Base class for all package errors."""


class ContractViolation(VgaggError, ValueError):
    """An argument violates an operation's precondition."""


class EmptyInputError(ContractViolation):
    """An aggregation was asked to reduce zero values."""


class SolverFailure(VgaggError, RuntimeError):
    """The maximal-entropy OWA root solve found no admissible root."""


class IngestionError(VgaggError, ValueError):
    """Malformed panel or series input.

    ``line`` is 1-based; ``column`` is the column label (or 1-based index
    when no label applies).
    """

    def __init__(self, message: str, line: int | None = None, column: str | int | None = None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
