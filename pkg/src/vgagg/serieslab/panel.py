"""Day-by-year panel ingestion, per-row aggregation and result export.

A panel is a CSV whose header row carries column labels (years) after a
leading label cell, and whose first column carries row labels (days). Empty
cells are missing observations. Each row is aggregated on its own: the
present cells form a short series, which is handed to the VGA operator and
to the OWA family for each requested orness.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from ..aggregate import OwaSpec, Rounding, owa_aggregate, vga_weights
from ..errors import ContractViolation, IngestionError
from ..visibility import TimeSeries, build_graph

log = logging.getLogger(__name__)

ABSCISSAS = ("column", "ordinal")


class SkippedRowWarning(UserWarning):
    """A panel row had no present values and was left out of the results."""


@dataclass(frozen=True)
class PanelTable:
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    cells: tuple[tuple[float | None, ...], ...]

    def __post_init__(self) -> None:
        if len(self.cells) != len(self.row_labels):
            raise ContractViolation("row count does not match row labels")
        for label, row in zip(self.row_labels, self.cells):
            if len(row) != len(self.col_labels):
                raise ContractViolation(f"row {label!r} has {len(row)} cells, expected {len(self.col_labels)}")

    def present(self, row: int) -> tuple[list[int], list[float]]:
        """Column indices and values of the non-missing cells of ``row``."""
        idx = [c for c, v in enumerate(self.cells[row]) if v is not None]
        return idx, [self.cells[row][c] for c in idx]

    def is_aggregable(self, row: int) -> bool:
        return any(v is not None for v in self.cells[row])


def _parse_cell(raw: str, thousands: str | None, line: int, column: str) -> float | None:
    text = raw.strip()
    if not text:
        return None
    if thousands:
        text = text.replace(thousands, "")
    try:
        value = float(text)
    except ValueError:
        raise IngestionError(f"cannot parse {raw!r} as a number", line=line, column=column) from None
    if not math.isfinite(value):
        raise IngestionError(f"non-finite value {raw!r}", line=line, column=column)
    return value


def parse_panel(source: str | TextIO, thousands: str | None = ",") -> PanelTable:
    """Parse panel CSV text (or an open text stream).

    ``thousands`` is stripped from every numeric cell before conversion; pass
    ``None`` to disable. Cells containing the CSV delimiter must be quoted.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    reader = csv.reader(stream)
    header: list[str] | None = None
    row_labels: list[str] = []
    cells: list[tuple[float | None, ...]] = []
    seen: dict[str, int] = {}
    for record in reader:
        line = reader.line_num
        if not record:
            continue
        if header is None:
            header = [c.strip() for c in record]
            if len(header) < 2:
                raise IngestionError("header needs a label cell and at least one column", line=line)
            continue
        if len(record) != len(header):
            raise IngestionError(f"expected {len(header)} fields, found {len(record)}", line=line)
        label = record[0].strip()
        if not label:
            raise IngestionError("missing row label", line=line, column=1)
        if label in seen:
            raise IngestionError(f"duplicate row label {label!r} (first on line {seen[label]})", line=line, column=1)
        seen[label] = line
        row_labels.append(label)
        cells.append(tuple(_parse_cell(raw, thousands, line, header[c]) for c, raw in enumerate(record[1:], start=1)))
    if header is None:
        raise IngestionError("empty panel: no header row")
    return PanelTable(row_labels=tuple(row_labels), col_labels=tuple(header[1:]), cells=tuple(cells))


def read_panel(path: str | Path, thousands: str | None = ",") -> PanelTable:
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_panel(fh, thousands=thousands)


@dataclass(frozen=True)
class RowResult:
    label: str
    columns: tuple[str, ...]
    values: tuple[float, ...]
    degrees: tuple[int, ...]
    weights: tuple[float, ...]
    vga: float
    owa: dict[float, float] = field(default_factory=dict)

    @property
    def k(self) -> int:
        return len(self.values)


def row_series(table: PanelTable, row: int, abscissa: str = "column") -> TimeSeries:
    """Series of the present cells of ``row``.

    ``abscissa="column"`` places each value at its column position, so gaps
    keep their width; ``"ordinal"`` packs the present values onto 1..k.
    """
    if abscissa not in ABSCISSAS:
        raise ContractViolation(f"unknown abscissa convention {abscissa!r}; expected one of {ABSCISSAS}")
    idx, values = table.present(row)
    if abscissa == "column":
        return TimeSeries.from_values(values, t=[c + 1 for c in idx])
    return TimeSeries.from_values(values)


def aggregate_row(
    table: PanelTable,
    row: int,
    alphas: Sequence[float] = (),
    rounding: Rounding = "exact",
    abscissa: str = "column",
    engine: str = "fast",
) -> RowResult:
    series = row_series(table, row, abscissa)
    if len(series) == 0:
        raise ContractViolation(f"row {table.row_labels[row]!r} has no present values")
    idx, values = table.present(row)
    graph = build_graph(series, engine=engine)
    weights = vga_weights(graph)
    vga = math.fsum(w * v for w, v in zip(weights, values))
    owa = {float(a): owa_aggregate(values, OwaSpec(len(values), float(a)), rounding).value for a in alphas}
    return RowResult(
        label=table.row_labels[row],
        columns=tuple(table.col_labels[c] for c in idx),
        values=tuple(values),
        degrees=graph.degrees,
        weights=weights,
        vga=vga,
        owa=owa,
    )


def aggregate_panel(
    table: PanelTable,
    alphas: Sequence[float] = (),
    rounding: Rounding = "exact",
    abscissa: str = "column",
    engine: str = "fast",
) -> list[RowResult]:
    """Aggregate every row in input order; empty rows are skipped with a warning."""
    results = []
    for r, label in enumerate(table.row_labels):
        if not table.is_aggregable(r):
            log.warning("row %s has no present values; skipped", label)
            warnings.warn(f"row {label!r} has no present values; skipped", SkippedRowWarning, stacklevel=2)
            continue
        results.append(aggregate_row(table, r, alphas, rounding, abscissa, engine))
    return results


def _alpha_key(alpha: float) -> str:
    return f"owa_{alpha:g}"


def _alphas_of(rows: Iterable[RowResult]) -> list[float]:
    seen: list[float] = []
    for r in rows:
        for a in r.owa:
            if a not in seen:
                seen.append(a)
    return seen


def results_records(rows: Sequence[RowResult]) -> list[dict]:
    alphas = _alphas_of(rows)
    out = []
    for r in rows:
        rec = {"row": r.label, "k": r.k, "vga": r.vga}
        for a in alphas:
            rec[_alpha_key(a)] = r.owa.get(a)
        out.append(rec)
    return out


def weights_records(rows: Sequence[RowResult]) -> list[dict]:
    return [
        {"row": r.label, "position": pos, "column": col, "degree": d, "weight": w}
        for r in rows
        for pos, (col, d, w) in enumerate(zip(r.columns, r.degrees, r.weights), start=1)
    ]


def _to_csv(records: list[dict], fieldnames: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({k: ("" if v is None else repr(v) if isinstance(v, float) else v) for k, v in rec.items()})
    return buf.getvalue()


def results_csv(rows: Sequence[RowResult]) -> str:
    """Row label, k, VGA aggregate and one column per orness; full precision."""
    fields = ["row", "k", "vga"] + [_alpha_key(a) for a in _alphas_of(rows)]
    return _to_csv(results_records(rows), fields)


def weights_csv(rows: Sequence[RowResult]) -> str:
    """Long format: one line per (row, present value)."""
    return _to_csv(weights_records(rows), ["row", "position", "column", "degree", "weight"])


def results_json(rows: Sequence[RowResult]) -> str:
    """JSON mirror of :func:`results_csv` and :func:`weights_csv`."""
    return json.dumps({"results": results_records(rows), "weights": weights_records(rows)}, indent=2)
