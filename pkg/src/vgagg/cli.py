"""Command-line entry point.

Exit codes: 0 success, 1 a tolerance check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

import numpy as np

from . import __version__
from .aggregate import OwaSpec, arithmetic_mean, orness, owa_aggregate, owa_weights, vga_aggregate, vga_weights
from .errors import IngestionError, VgaggError
from .serieslab.generators import KINDS, GeneratorSpec, generate
from .serieslab.panel import ABSCISSAS, aggregate_panel, read_panel, results_csv, results_json, weights_csv
from .serieslab.replication import TABLE6_ALPHAS, replicate
from .visibility import TimeSeries, build_graph

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _parse_number(text: str, line: int, column: int) -> float:
    try:
        value = float(text)
    except ValueError:
        raise IngestionError(f"cannot parse {text!r} as a number", line=line, column=column) from None
    if not np.isfinite(value):
        raise IngestionError(f"non-finite value {text!r}", line=line, column=column)
    return value


def _looks_numeric(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def read_values(source: str) -> list[float]:
    """Values from an existing file (one per line) or an inline comma list."""
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
        first = next((ln for ln in lines if ln.strip()), "")
        if first and not _looks_numeric(first.strip()):
            raise InputError(f"{source}: looks like a panel CSV (header row); use the 'panel' subcommand")
        return [_parse_number(ln.strip(), i, 1) for i, ln in enumerate(lines, start=1) if ln.strip()]
    items = source.split(",")
    values = [_parse_number(item.strip(), 1, c) for c, item in enumerate(items, start=1)]
    return values


def parse_alphas(text: str) -> list[float]:
    out = []
    for item in text.split(","):
        try:
            a = float(item)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad alpha {item!r}") from None
        if not 0.0 <= a <= 1.0:
            raise argparse.ArgumentTypeError(f"alpha {a} outside [0, 1]")
        out.append(a)
    return out


def parse_pattern(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad pattern {text!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_graph(args) -> int:
    values = read_values(args.source)
    if not values:
        raise InputError("no values given")
    series = TimeSeries.from_values(values)
    graph = build_graph(series, engine=args.engine)
    weights = vga_weights(graph)
    if args.json:
        doc = {
            "n": graph.n,
            "edges": [list(e) for e in graph.edges],
            "values": values,
            "degrees": list(graph.degrees),
            "weights": list(weights),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return EXIT_OK
    lines = [f"# vertices {graph.n} edges {len(graph.edges)}\n", graph.to_edgelist(), "# index value degree weight\n"]
    for i, (v, d, w) in enumerate(zip(values, graph.degrees, weights)):
        lines.append(f"{i} {v:g} {d} {w:.4f}\n")
    _emit("".join(lines), args.out)
    return EXIT_OK


def cmd_aggregate(args) -> int:
    values = read_values(args.source)
    if not values:
        raise InputError("no values given")
    if args.method == "vga":
        res = vga_aggregate(values, engine=args.engine)
        docs = [{"method": "VGA", "value": res.value, "weights": list(res.weights)}]
    elif args.method == "mean":
        docs = [{"method": "mean", "value": arithmetic_mean(values), "weights": [1.0 / len(values)] * len(values)}]
    else:
        alphas = args.alphas if args.alphas is not None else [0.5]
        docs = []
        for a in alphas:
            res = owa_aggregate(values, OwaSpec(len(values), a), args.rounding)
            docs.append({"method": "OWA", "alpha": a, "value": res.value, "weights": list(res.weights)})
    if args.json:
        _emit(json.dumps(docs if len(docs) > 1 else docs[0], indent=2) + "\n", args.out)
    elif args.method == "owa" and len(docs) > 1:
        _emit("".join(f"alpha={d['alpha']:g} {d['value']:.2f}\n" for d in docs), args.out)
    else:
        _emit(f"{docs[0]['value']:.2f}\n", args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    spec = GeneratorSpec(
        kind=args.kind,
        length=args.length,
        pattern=args.pattern,
        spike_position=args.spike_position,
        spike_height=args.spike_height,
        seed=args.seed,
    )
    series = generate(spec)
    values = series.y.tolist()
    if args.json:
        _emit(json.dumps({"kind": spec.kind, "values": values}) + "\n", args.out)
    else:
        _emit("".join(f"{v!r}\n" for v in values), args.out)
    return EXIT_OK


def cmd_panel(args) -> int:
    table = read_panel(args.source)
    rows = aggregate_panel(table, alphas=args.alphas or [], rounding=args.rounding, abscissa=args.abscissa)
    if args.weights_out:
        _emit(weights_csv(rows), args.weights_out)
    if args.json:
        _emit(results_json(rows) + "\n", args.out)
        return EXIT_OK
    if args.out:
        _emit(results_csv(rows), args.out)
        return EXIT_OK
    alphas = sorted({a for r in rows for a in r.owa})
    header = ["row", "k", "vga"] + [f"owa_{a:g}" for a in alphas]
    lines = [",".join(header) + "\n"]
    for r in rows:
        cells = [r.label, str(r.k), f"{r.vga:.2f}"] + [f"{r.owa[a]:.2f}" for a in alphas]
        lines.append(",".join(cells) + "\n")
    sys.stdout.write("".join(lines))
    return EXIT_OK


def cmd_replicate(args) -> int:
    table = None
    if args.source is not None:
        if not os.path.isfile(args.source):
            raise InputError(f"fixture not found: {args.source}")
        table = read_panel(args.source)
    alphas = args.alphas if args.alphas is not None else list(TABLE6_ALPHAS)
    report = replicate(table, alphas=alphas, rounding=args.rounding, abscissa=args.abscissa)
    _emit(report.render(), args.out)
    return EXIT_OK if report.passed else EXIT_TOLERANCE


def cmd_selftest(args) -> int:
    checks = []
    example = [40, 45, 70, 50, 85, 55, 70, 75]
    g_fast = build_graph(example, engine="fast")
    checks.append(("example degrees", g_fast.degrees == (2, 2, 4, 2, 5, 2, 3, 2)))
    checks.append(("example VGA value", abs(vga_aggregate(example).value - 65.68) <= 0.01))
    rng = np.random.default_rng(2024)
    y = rng.random(200)
    checks.append(("fast == oracle", build_graph(y, "fast").edges == build_graph(y, "oracle").edges))
    worst = max(
        abs(orness(owa_weights(OwaSpec(n, a))) - a)
        for n in range(3, 13)
        for a in (0.1, 0.3, 0.6, 0.9)
    )
    checks.append(("owa orness", worst <= 1e-6))
    row = [round(w, 4) for w in owa_weights(OwaSpec(9, 0.9))]
    checks.append(("owa n=9 alpha=0.9", row == [0.5540, 0.2473, 0.1104, 0.0493, 0.0220, 0.0098, 0.0044, 0.0020, 0.0009]))
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_TOLERANCE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vgagg", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, engine=False, alphas=False, rounding=False):
        p.add_argument("--json", action="store_true", help="full-precision JSON output")
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
        if engine:
            p.add_argument("--engine", choices=("oracle", "fast"), default="fast")
        if alphas:
            p.add_argument("--alphas", type=parse_alphas, help="comma-separated orness values")
        if rounding:
            p.add_argument("--rounding", choices=("exact", "4dp"), default="exact")

    p = sub.add_parser("graph", help="visibility graph edge list and degrees")
    p.add_argument("source", help="file with one value per line, or inline comma list")
    common(p, engine=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("aggregate", help="aggregate a single series")
    p.add_argument("source", help="file with one value per line, or inline comma list")
    p.add_argument("--method", choices=("vga", "owa", "mean"), default="vga")
    common(p, engine=True, alphas=True, rounding=True)
    p.set_defaults(func=cmd_aggregate)

    p = sub.add_parser("generate", help="emit a generated series")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--pattern", type=parse_pattern, default=(4.0, 3.0, 2.0, 5.0, 1.0))
    p.add_argument("--spike-position", type=int)
    p.add_argument("--spike-height", type=float)
    p.add_argument("--seed", type=int)
    common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("panel", help="aggregate every row of a panel CSV")
    p.add_argument("source", help="panel CSV path")
    p.add_argument("--abscissa", choices=ABSCISSAS, default="column")
    p.add_argument("--weights-out", metavar="PATH", help="write long-format weights CSV")
    common(p, alphas=True, rounding=True)
    p.set_defaults(func=cmd_panel)

    p = sub.add_parser("replicate", help="compare against the published TAIEX tables")
    p.add_argument("source", nargs="?", help="panel CSV (default: shipped fixture)")
    p.add_argument("--abscissa", choices=ABSCISSAS, default="column")
    p.add_argument("--alphas", type=parse_alphas, help="restrict the OWA comparison to these orness values")
    p.add_argument("--rounding", choices=("exact", "4dp"), default="4dp")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_replicate)

    p = sub.add_parser("selftest", help="quick internal consistency checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, VgaggError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
