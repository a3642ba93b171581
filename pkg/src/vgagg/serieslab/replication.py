"""Compare panel aggregation against the published TAIEX December tables.

The reference tables ship as CSV under ``vgagg/data``:

* ``table2.csv``: closing index per December day (rows) and year (columns)
* ``table6.csv``: OWA aggregates per day for orness 0.1, 0.5, 0.6, 0.9
* ``table7.csv``: VGA weights on the same grid as ``table2.csv``
* ``table8.csv``: VGA aggregates per day
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from importlib import resources
from typing import Sequence

from .panel import PanelTable, RowResult, aggregate_panel, parse_panel

TABLE6_ALPHAS = (0.1, 0.5, 0.6, 0.9)
TABLE6_TOL = 2.0
TABLE6_TOL_UNIFORM = 0.02  # alpha = 0.5 needs no root solve
TABLE7_TOL = 1e-4
TABLE8_TOL = 0.05
# slack for comparing numbers printed to a fixed number of decimals
_PRINT_SLACK = 1e-9


def data_text(name: str) -> str:
    return resources.files("vgagg").joinpath("data", name).read_text(encoding="utf-8")


def load_table2() -> PanelTable:
    return parse_panel(data_text("table2.csv"))


def _rows(name: str) -> tuple[list[str], list[list[str]]]:
    reader = csv.reader(data_text(name).splitlines())
    header = next(reader)
    return header, [r for r in reader if r]


def expected_table6() -> dict[str, dict[float, float]]:
    header, rows = _rows("table6.csv")
    alphas = [float(h) for h in header[1:]]
    return {r[0]: {a: float(v) for a, v in zip(alphas, r[1:])} for r in rows}


def expected_table7() -> dict[str, dict[str, float]]:
    header, rows = _rows("table7.csv")
    return {r[0]: {col: float(v) for col, v in zip(header[1:], r[1:]) if v.strip()} for r in rows}


def expected_table8() -> dict[str, float]:
    _, rows = _rows("table8.csv")
    return {r[0]: float(r[1]) for r in rows}


@dataclass(frozen=True)
class Deviation:
    row: str
    column: str
    computed: float | None
    expected: float | None

    @property
    def abs_dev(self) -> float:
        if self.computed is None or self.expected is None:
            return float("inf")
        return abs(self.computed - self.expected)


@dataclass
class TableCheck:
    name: str
    description: str
    compared: int = 0
    max_deviation: float = 0.0
    failures: list[Deviation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.compared > 0 and not self.failures

    def record(self, dev: Deviation, tol: float) -> None:
        self.compared += 1
        self.max_deviation = max(self.max_deviation, dev.abs_dev)
        if dev.abs_dev > tol + _PRINT_SLACK:
            self.failures.append(dev)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.compared} cells, max |dev| {self.max_deviation:.6g}) {self.description}"


@dataclass
class ReplicationReport:
    table6: TableCheck
    table7: TableCheck
    table8: TableCheck
    rows: list[RowResult]

    @property
    def checks(self) -> list[TableCheck]:
        return [self.table6, self.table7, self.table8]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = []
        for check in self.checks:
            lines.append(check.summary())
            for d in check.failures:
                comp = "missing" if d.computed is None else f"{d.computed:.4f}"
                exp = "missing" if d.expected is None else f"{d.expected:.4f}"
                lines.append(f"  row {d.row} column {d.column}: computed {comp}, expected {exp}")
        return "\n".join(lines) + "\n"


def check_table6(rows: Sequence[RowResult], alphas: Sequence[float]) -> TableCheck:
    expected = expected_table6()
    check = TableCheck("Table 6", "OWA aggregates (4-dp weights)")
    for r in rows:
        for a in alphas:
            exp = expected.get(r.label, {}).get(a)
            if exp is None:
                continue
            tol = TABLE6_TOL_UNIFORM if a == 0.5 else TABLE6_TOL
            check.record(Deviation(r.label, f"alpha={a:g}", r.owa.get(a), exp), tol)
    return check


def check_table7(rows: Sequence[RowResult]) -> TableCheck:
    expected = expected_table7()
    check = TableCheck("Table 7", "VGA weights (rounded to 4 dp)")
    for r in rows:
        exp_row = expected.get(r.label)
        if exp_row is None:
            continue
        got = {col: round(w, 4) for col, w in zip(r.columns, r.weights)}
        for col in sorted(set(got) | set(exp_row), key=lambda c: (len(c), c)):
            check.record(Deviation(r.label, col, got.get(col), exp_row.get(col)), TABLE7_TOL)
    return check


def check_table8(rows: Sequence[RowResult]) -> TableCheck:
    expected = expected_table8()
    check = TableCheck("Table 8", "VGA aggregates")
    for r in rows:
        if r.label in expected:
            check.record(Deviation(r.label, "vga", r.vga, expected[r.label]), TABLE8_TOL)
    return check


def replicate(
    table: PanelTable | None = None,
    alphas: Sequence[float] = TABLE6_ALPHAS,
    rounding: str = "4dp",
    abscissa: str = "column",
) -> ReplicationReport:
    """Aggregate ``table`` (default: the shipped TAIEX panel) and compare."""
    if table is None:
        table = load_table2()
    alphas = tuple(float(a) for a in alphas)
    rows = aggregate_panel(table, alphas=alphas, rounding=rounding, abscissa=abscissa)
    return ReplicationReport(
        table6=check_table6(rows, alphas),
        table7=check_table7(rows),
        table8=check_table8(rows),
        rows=rows,
    )
