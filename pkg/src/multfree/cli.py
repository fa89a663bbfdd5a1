"""Command-line front end: exact sizes, expectation tables, Monte Carlo runs,
p-grid sweeps and tail bounds, emitted as human tables, CSV or JSON."""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass

from .bounds import chernoff_lower, chernoff_two_sided, chernoff_upper
from .core import level_size, max_level_index, reduce_multiplier
from .errors import MultfreeError
from .extremal import brute_force_max, max_set, max_set_size, path_dp_max
from .montecarlo import monte_carlo
from .random_subsets import expected_total, level_probability, max_set_size_in_subset
from .sampling import SampleSpec, sample_subset

_SWEEP_COLUMNS = ("n", "a", "b", "p", "seed", "trial", "size", "analytic", "ratio", "target")
_ORACLE_CLI_LIMIT = 18


@dataclass(frozen=True)
class SweepRow:
    """One (p, trial) point of a sweep; ratio tracks the target curve b/(b+p)."""

    n: int
    a: int
    b: int
    p: float
    seed: int
    trial: int
    size: int
    analytic: float
    ratio: float
    target: float


def _real(x) -> str:
    return f"{float(x):.12g}"


def _cell(value) -> str:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, float):
        return _real(value)
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def _json_value(value):
    if isinstance(value, float):
        return None if math.isnan(value) else float(_real(value))
    if isinstance(value, tuple):
        return list(value)
    return value


def _emit(rows: list[dict], columns, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row[c]) for c in columns])
    elif fmt == "json":
        print(json.dumps([{c: _json_value(row[c]) for c in columns} for row in rows]), file=out)
    else:
        cells = [[_cell(row[c]) for c in columns] for row in rows]
        widths = [max(len(col), *(len(r[i]) for r in cells)) if cells else len(col)
                  for i, col in enumerate(columns)]
        print("  ".join(col.rjust(w) for col, w in zip(columns, widths)), file=out)
        for r in cells:
            print("  ".join(cell.rjust(w) for cell, w in zip(r, widths)), file=out)


def _ratio_arg(text: str) -> tuple[int, int]:
    num, _, den = text.partition("/")
    try:
        numerator = int(num)
        denominator = int(den) if den else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected '<b>/<a>' or '<b>', got {text!r}")
    if numerator < 1 or denominator < 1:
        raise argparse.ArgumentTypeError("numerator and denominator must be positive")
    return numerator, denominator


def _p_arg(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number, got {text!r}")
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError(f"p must lie in [0, 1], got {text}")
    return p


def _seed_arg(text: str) -> int:
    try:
        seed = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an unsigned integer, got {text!r}")
    if seed < 0 or seed >= 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return seed


def _grid_arg(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected '<start>:<stop>:<step>', got {text!r}")
    try:
        start, stop, step = (float(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected real grid bounds, got {text!r}")
    if step <= 0:
        raise argparse.ArgumentTypeError("step must be positive")
    if stop < start:
        raise argparse.ArgumentTypeError("stop must be >= start")
    count = round((stop - start) / step)
    if abs(start + count * step - stop) > 1e-9:
        raise argparse.ArgumentTypeError("step must divide stop - start (within 1e-9)")
    grid = [start + k * step for k in range(count)] + [stop]  # endpoints inclusive and exact
    if grid[0] < 0 or grid[-1] > 1:
        raise argparse.ArgumentTypeError("grid values must lie in [0, 1]")
    return grid


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multfree",
        description="Maximum multiple-free subsets of {1..n}: exact sizes, "
        "expectations, Monte Carlo sampling and tail bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p_exact = sub.add_parser("exact", help="maximum multiple-free subset of {1..n}")
    p_exact.add_argument("--n", type=int, required=True)
    p_exact.add_argument("--ratio", type=_ratio_arg, required=True)
    p_exact.add_argument("--emit-set", action="store_true")
    add_format(p_exact)
    p_exact.set_defaults(func=cmd_exact)

    p_expect = sub.add_parser("expect", help="expected maximum size for a p-sample")
    p_expect.add_argument("--n", type=int, required=True)
    p_expect.add_argument("--ratio", type=_ratio_arg, required=True)
    p_expect.add_argument("--p", type=_p_arg, required=True)
    p_expect.add_argument("--per-level", action="store_true")
    p_expect.set_defaults(func=cmd_expect)

    p_sample = sub.add_parser("sample", help="Monte Carlo trials at one p")
    p_sample.add_argument("--n", type=int, required=True)
    p_sample.add_argument("--ratio", type=_ratio_arg, required=True)
    p_sample.add_argument("--p", type=_p_arg, required=True)
    p_sample.add_argument("--seed", type=_seed_arg, required=True)
    p_sample.add_argument("--trials", type=int, required=True)
    p_sample.add_argument("--per-level", action="store_true")
    p_sample.add_argument("--threads", type=int, default=None)
    add_format(p_sample)
    p_sample.set_defaults(func=cmd_sample)

    p_sweep = sub.add_parser("sweep", help="Monte Carlo sweep over a p grid")
    p_sweep.add_argument("--n", type=int, required=True)
    p_sweep.add_argument("--ratio", type=_ratio_arg, required=True)
    p_sweep.add_argument("--p-grid", type=_grid_arg, required=True, dest="p_grid")
    p_sweep.add_argument("--trials", type=int, required=True)
    p_sweep.add_argument("--seed", type=_seed_arg, required=True)
    p_sweep.add_argument("--threads", type=int, default=None)
    add_format(p_sweep)
    p_sweep.set_defaults(func=cmd_sweep)

    p_oracle = sub.add_parser("oracle", help="cross-check the solver against both referees")
    p_oracle.add_argument("--n", type=int, required=True)
    p_oracle.add_argument("--ratio", type=_ratio_arg, required=True)
    p_oracle.add_argument("--p", type=_p_arg, default=None)
    p_oracle.set_defaults(func=cmd_oracle)

    p_bound = sub.add_parser("bound", help="tail bound values")
    p_bound.add_argument("--lambda", type=float, required=True, dest="lam")
    p_bound.add_argument("--mean", type=float, required=True)
    p_bound.add_argument("--kind", choices=("upper", "lower", "two-sided"), required=True)
    p_bound.set_defaults(func=cmd_bound)

    return parser


def cmd_exact(args) -> int:
    m = reduce_multiplier(*args.ratio)
    if args.emit_set:
        result = max_set(args.n, m)
        size, witness = result.size, result.witness
    else:
        size, witness = max_set_size(args.n, m), None
    if args.format == "table":
        print(f"size {size}")
        if witness is not None:
            print("set " + " ".join(str(v) for v in witness))
        return 0
    row = {"n": args.n, "a": m.a, "b": m.b, "size": size}
    columns = ["n", "a", "b", "size"]
    if witness is not None:
        row["witness"] = list(witness)
        columns.append("witness")
    _emit([row], columns, args.format)
    return 0


def cmd_expect(args) -> int:
    m = reduce_multiplier(*args.ratio)
    total = expected_total(args.n, m, args.p)
    if args.per_level:
        rows = []
        for i in range(max_level_index(args.n, m.b) + 1):
            pi = level_probability(i, args.p)
            size = level_size(args.n, m.b, i)
            rows.append({"level": i, "count": size, "probability": pi, "expected": size * pi})
        _emit(rows, ("level", "count", "probability", "expected"), "table")
        print(f"total {_real(total)}")
    else:
        print(_real(total))
    return 0


def cmd_sample(args) -> int:
    if args.trials < 1:
        print("error: --trials must be >= 1", file=sys.stderr)
        return 2
    m = reduce_multiplier(*args.ratio)
    summary = monte_carlo(args.n, m, args.p, args.trials, args.seed, threads=args.threads)
    base = {
        "n": args.n,
        "a": m.a,
        "b": m.b,
        "p": args.p,
        "seed": args.seed,
        "trials": args.trials,
    }
    head = {
        **base,
        "mean": summary.mean,
        "stddev": summary.sample_stddev,
        "analytic": summary.analytic_total,
        "envelope": summary.envelope,
    }
    head_columns = tuple(base) + ("mean", "stddev", "analytic", "envelope")
    if not args.per_level:
        _emit([head], head_columns, args.format)
        return 0
    levels = []
    for i, mean_star in enumerate(summary.per_level_means):
        pi = level_probability(i, args.p)
        size = level_size(args.n, m.b, i)
        levels.append(
            {**base, "level": i, "level_total": size, "probability": pi,
             "expected": size * pi, "mean_star": mean_star}
        )
    level_columns = tuple(base) + ("level", "level_total", "probability", "expected", "mean_star")
    if args.format == "table":
        _emit([head], head_columns, "table")
        _emit(levels, level_columns, "table")
    else:
        _emit(levels, level_columns, args.format)
    return 0


def cmd_sweep(args) -> int:
    if args.trials < 1:
        print("error: --trials must be >= 1", file=sys.stderr)
        return 2
    m = reduce_multiplier(*args.ratio)
    rows = []
    for p in args.p_grid:
        summary = monte_carlo(args.n, m, p, args.trials, args.seed, threads=args.threads)
        target = m.b / (m.b + p)
        for trial, size in enumerate(summary.sizes):
            ratio = size / (args.n * p) if p > 0 else math.nan
            rows.append(
                SweepRow(
                    n=args.n, a=m.a, b=m.b, p=p, seed=args.seed, trial=trial,
                    size=size, analytic=summary.analytic_total, ratio=ratio, target=target,
                ).__dict__
            )
    _emit(rows, _SWEEP_COLUMNS, args.format)
    return 0


def cmd_oracle(args) -> int:
    if args.n > _ORACLE_CLI_LIMIT:
        print(f"error: --n must be <= {_ORACLE_CLI_LIMIT} for oracle runs", file=sys.stderr)
        return 2
    m = reduce_multiplier(*args.ratio)
    if args.p is None:
        elements = list(range(1, args.n + 1))
        solver = max_set_size(args.n, m)
    else:
        sample = sample_subset(SampleSpec(n=args.n, p=args.p, seed=0, trial=0))
        elements = list(sample.elements())
        solver = max_set_size_in_subset(sample, m)
    enumeration = brute_force_max(elements, m)
    dp = path_dp_max(elements, m)
    print(f"solver      {solver}")
    print(f"enumeration {enumeration}")
    print(f"path-dp     {dp}")
    if solver == enumeration == dp:
        print("agreement   ok")
        return 0
    print("agreement   MISMATCH")
    return 1


def cmd_bound(args) -> int:
    if args.kind == "upper":
        value = chernoff_upper(args.lam, args.mean)
    elif args.kind == "lower":
        value = chernoff_lower(args.lam, args.mean)
    else:
        value = min(1.0, chernoff_two_sided(args.lam, args.mean))
    print(_real(value))
    return 0


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    threads = getattr(args, "threads", None)
    if threads is None:
        try:
            threads = int(os.environ.get("MULTFREE_THREADS", "1"))
        except ValueError:
            threads = 1
    args.threads = max(1, threads)
    try:
        return args.func(args)
    except MultfreeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
