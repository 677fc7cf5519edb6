"""Command-line front end: build, eval, info and bench.

Exit codes: 0 success, 2 usage or parse error, 3 I/O error, 4 evaluation
out of range.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time

import numpy as np

from .collection import Axis, GridAxis, SetAxis
from .errors import DuplicateAbscissaError, InterpolationError, TableFormatError, ValueOutOfRangeError
from .functional import DefaultResult
from .interpolators import Method
from .multimap import MultiMap, leaf_count, level_collections, multi_insert
from .results import ResultHesse, _Composite, labeled_leaves, scalar_value
from .table_io import load, read_function, save
from .testfunctions import FIXED_DIMENSIONS, FUNCTIONS

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_RANGE = 4


class UsageError(Exception):
    pass


def _fmt(v: float) -> str:
    """17 significant digits; negative zero prints as ``0.0``."""
    text = f"{v + 0.0:.17g}"
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def parse_axes(text: str) -> list[Axis]:
    """``grid:n:xmin:xmax`` or ``set:x0;x1;...`` entries separated by commas."""
    axes = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        kind, _, rest = item.partition(":")
        try:
            if kind == "grid":
                n, xmin, xmax = rest.split(":")
                axes.append(GridAxis(int(n), float(xmin), float(xmax)))
            elif kind == "set":
                axes.append(SetAxis(float(v) for v in rest.split(";") if v.strip()))
            else:
                raise UsageError(f"unknown axis kind {kind!r} in {item!r}")
        except (ValueError, DuplicateAbscissaError) as exc:
            raise UsageError(f"invalid axis {item!r}: {exc}") from exc
    if not axes:
        raise UsageError("no axes given")
    return axes


def parse_spec(text: str) -> list[Method]:
    try:
        return [Method.parse(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_points(text: str) -> list[tuple[float, ...]]:
    """Inline ``x0,x1;x0,x1`` or a file with one point per line."""
    if os.path.isfile(text):
        with open(text) as fh:
            lines = [ln.split("#")[0] for ln in fh]
    else:
        lines = text.split(";")
    points = []
    for ln in lines:
        ln = ln.replace(",", " ").strip()
        if not ln:
            continue
        try:
            points.append(tuple(float(v) for v in ln.split()))
        except ValueError as exc:
            raise UsageError(f"invalid point {ln!r}") from exc
    return points


def read_csv_table(path: str) -> MultiMap:
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    if not rows:
        raise UsageError(f"{path}: no data rows")
    try:
        [float(c) for c in rows[0]]
    except ValueError:
        rows = rows[1:]
    if not rows:
        raise UsageError(f"{path}: no data rows")
    width = len(rows[0])
    if width < 2:
        raise UsageError(f"{path}: rows need at least one abscissa and one ordinate column")
    table = MultiMap(width - 1)
    for lineno, row in enumerate(rows, 1):
        if len(row) != width:
            raise UsageError(f"{path}: row {lineno} has {len(row)} columns, expected {width}")
        try:
            values = [float(c) for c in row]
        except ValueError as exc:
            raise UsageError(f"{path}: row {lineno}: {exc}") from exc
        key = tuple(values[:-1])
        if table.get(key) is not None:
            raise UsageError(f"{path}: row {lineno}: duplicate abscissa key {key}")
        multi_insert(table, key).y = values[-1]
    return table


def format_result(result) -> str:
    if not isinstance(result, _Composite):
        return _fmt(scalar_value(result))
    weights = {"fp": 1, "fpp": 2}
    parts = []
    for label, value in labeled_leaves(result):
        if _hesse_only(result) and sum(weights.get(name, 0) for name in label) > 2:
            continue
        parts.append(f"{'.'.join(label)}={_fmt(value)}")
    return " ".join(parts)


def _hesse_only(result) -> bool:
    while isinstance(result, _Composite):
        if not isinstance(result, ResultHesse):
            return False
        result = result.f
    return True


# -- commands ------------------------------------------------------------------


def cmd_build(args) -> int:
    if len(args.targets) == 2:
        if args.function or args.csv:
            raise UsageError("give the function either as positional argument or via --function")
        args.function, args.output = args.targets
    elif len(args.targets) == 1:
        args.output = args.targets[0]
    else:
        raise UsageError("expected [FUNCTION] OUTPUT")
    if args.csv:
        table = read_csv_table(args.csv)
    else:
        if not args.axes:
            raise UsageError("--axes is required with --function")
        axes = parse_axes(args.axes)
        name = args.function or "sinsum"
        if name not in FUNCTIONS:
            raise UsageError(f"unknown function {name!r}; choose from {', '.join(FUNCTIONS)}")
        fixed = FIXED_DIMENSIONS.get(name)
        if fixed is not None and fixed != len(axes):
            raise UsageError(f"{name} needs {fixed} axes, got {len(axes)}")
        fn = FUNCTIONS[name]
        table = MultiMap(len(axes))
        table.configure(axes, lambda key: fn(*key))
    try:
        save(table, args.output)
    except (TableFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"{leaf_count(table)} elements written to {args.output}")
    return EXIT_OK


def _load_function(path, spec_text, default):
    methods = parse_spec(spec_text)
    table = load(path)
    if len(methods) != table.dimensions:
        raise UsageError(f"spec has {len(methods)} methods but the table has {table.dimensions} dimensions")
    f = read_function(table, methods)
    if default is not None:
        f.set_error_policy(DefaultResult(default))
    return f


def cmd_eval(args) -> int:
    f = _load_function(args.table, args.spec, args.default)
    points = parse_points(args.points)
    out = []
    for pt in points:
        if len(pt) != f.dimensions:
            raise UsageError(f"point {pt} has {len(pt)} coordinates, expected {f.dimensions}")
        try:
            out.append(format_result(f(*pt)))
        except ValueOutOfRangeError as exc:
            sys.stdout.write("".join(line + "\n" for line in out))
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_RANGE
    sys.stdout.write("".join(line + "\n" for line in out))
    return EXIT_OK


def describe_table(table: MultiMap) -> list[str]:
    lines = [f"D={table.dimensions}", f"leaves={leaf_count(table)}"]
    for level in range(table.dimensions):
        colls = level_collections(table, level)
        sizes = [len(c) for c in colls]
        filled = [c for c in colls if len(c)]
        if filled:
            lo = min(c.xmin for c in filled)
            hi = max(c.xmax for c in filled)
            rng = f"[{lo:g}, {hi:g}]"
        else:
            rng = "[]"
        grid = "yes" if filled and all(c.is_equidistant() for c in filled) else "no"
        if not sizes:
            count = "0"
        elif min(sizes) == max(sizes):
            count = str(sizes[0])
        else:
            count = f"{min(sizes)}..{max(sizes)}"
        lines.append(f"level {level}: collections={len(colls)} count={count} range={rng} grid={grid}")
    return lines


def cmd_info(args) -> int:
    table = load(args.table)
    print("\n".join(describe_table(table)))
    return EXIT_OK


def _common_box(table: MultiMap):
    box = []
    for level in range(table.dimensions):
        filled = [c for c in level_collections(table, level) if len(c)]
        if not filled:
            raise UsageError("table is empty")
        box.append((max(c.xmin for c in filled), min(c.xmax for c in filled)))
    return box


def cmd_bench(args) -> int:
    specs = [s for group in args.spec for s in group.split(";") if s.strip()]
    if not specs:
        raise UsageError("at least one --spec is required")
    methods = [parse_spec(s) for s in specs]
    reference = None
    if args.reference is not None:
        if args.reference not in FUNCTIONS:
            raise UsageError(f"unknown reference function {args.reference!r}")
        reference = FUNCTIONS[args.reference]
    table = load(args.table)
    for s, m in zip(specs, methods):
        if len(m) != table.dimensions:
            raise UsageError(f"spec {s!r} has {len(m)} methods but the table has {table.dimensions} dimensions")
    box = _common_box(table)
    rng = np.random.default_rng(args.seed)
    points = [tuple(float(rng.uniform(lo, hi)) for lo, hi in box) for _ in range(args.points)]
    functions = [read_function(table, m) for m in methods]

    values = [[scalar_value(f(*pt)) for pt in points] for f in functions]
    if reference is not None:
        truth = [reference(*pt) for pt in points]
    else:
        truth = values[0]

    writer = csv.writer(sys.stdout, lineterminator="\n")
    if args.reps > 0:
        writer.writerow(["spec", "evals_per_sec", "max_abs_error"])
    else:
        writer.writerow(["spec", "max_abs_error"])
    for s, f, vals in zip(specs, functions, values):
        err = max((abs(a - b) for a, b in zip(vals, truth)), default=0.0)
        if args.reps > 0:
            start = time.perf_counter()
            for _ in range(args.reps):
                for pt in points:
                    f(*pt)
            elapsed = time.perf_counter() - start
            rate = args.reps * len(points) / elapsed if elapsed > 0 else float("inf")
            writer.writerow([s, f"{rate:.6g}", _fmt(err)])
        else:
            writer.writerow([s, _fmt(err)])
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ndinterp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="sample a built-in function or ingest CSV into a table")
    p.add_argument("--axes", help="e.g. grid:21:-1:1,set:0;0.5;4")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--function", help=f"one of {', '.join(FUNCTIONS)}")
    src.add_argument("--csv", help="rows of D abscissas followed by one ordinate")
    p.add_argument("targets", nargs="+", metavar="[FUNCTION] OUTPUT")
    p.set_defaults(run=cmd_build)

    p = sub.add_parser("eval", help="evaluate a table at points")
    p.add_argument("--spec", required=True, help="per-dimension methods, e.g. gridpolint3,gridsplineh")
    p.add_argument("--points", required=True, help="file, or inline 'x0,x1;x0,x1'")
    p.add_argument("--default", type=float, help="return this value instead of failing out of range")
    p.add_argument("table")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("info", help="print table metadata")
    p.add_argument("table")
    p.set_defaults(run=cmd_info)

    p = sub.add_parser("bench", help="time and compare method stacks")
    p.add_argument("--spec", action="append", required=True, help="method list; repeat or separate by ';'")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--points", type=int, default=1000)
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--reference", help="built-in function used as exact reference")
    p.add_argument("table")
    p.set_defaults(run=cmd_bench)
    return parser


def main(argv=None) -> int:
    try:
        parser = build_parser()
        args, extra = parser.parse_known_args(argv)
        if extra:
            # argparse does not resume a positional list after an option
            if args.command != "build" or any(e.startswith("-") for e in extra):
                raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
            args.targets.extend(extra)
        if getattr(args, "reps", 0) < 0:
            raise UsageError("--reps must be non-negative")
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TableFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueOutOfRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except InterpolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
