"""Command line entry point: bench, generate, costmodel, validate."""
from __future__ import annotations

import argparse
import sys

from . import costmodel
from .bench import BenchValidationError, Method, MethodConfig, emit_csv, run_bench
from .datasets import DatasetSpec, Kind, format_points, generate, read_points
from .hierarchy import Hierarchy, HierarchyConfig
from .predicates import CoordinateOutOfRange


def _load(args):
    if args.points:
        return read_points(args.points), "points"
    return generate(DatasetSpec(Kind(args.dist), args.n, args.seed)), args.dist


def cmd_bench(args) -> int:
    pts, dist = _load(args)
    report = None
    for m in args.method:
        cfg = MethodConfig(Method(m), alpha=args.alpha, beta=args.beta, rng_seed=args.seed)
        r = run_bench(pts, cfg, dist, shuffle=args.shuffle, shuffle_seed=args.seed,
                      repeats=args.repeats, timeout=args.timeout)
        if report is None:
            report = r
        else:
            report.rows.extend(r.rows)
    text = emit_csv(report)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_generate(args) -> int:
    pts = generate(DatasetSpec(Kind(args.dist), args.n, args.seed))
    text = f"# {args.dist} n={len(pts)} seed={args.seed}\n" + format_points(pts)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if len(pts) < args.n:
        print(f"note: {args.n - len(pts)} duplicate points dropped", file=sys.stderr)
    return 0


def cmd_costmodel(args) -> int:
    ns = range(args.n_min, args.n_max + 1, args.step)
    sys.stdout.write(costmodel.emit_csv(costmodel.table(ns, args.alpha, args.beta, args.max_k)))
    if args.crossovers:
        for name, n in costmodel.crossovers(args.alpha, args.beta).items():
            print(f"# crossover {name}: n={n}", file=sys.stderr)
    return 0


def cmd_validate(args) -> int:
    pts, _ = _load(args)
    h = Hierarchy(HierarchyConfig(alpha=args.alpha, beta=args.beta, rng_seed=args.seed))
    for p in pts:
        h.insert(p)
    problems = h.validate(full=args.full)
    for msg in problems:
        print(msg)
    print(f"{len(h)} sites, levels {h.level_sizes()}: "
          f"{'ok' if not problems else f'{len(problems)} problems'}")
    return 1 if problems else 0


def _add_source(p):
    p.add_argument("--dist", choices=[k.value for k in Kind], default="random")
    p.add_argument("--n", type=int, default=5000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", help="read points from a file instead of generating")
    p.add_argument("--alpha", type=float, default=30.0)
    p.add_argument("--beta", type=float, default=1.0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="delaunay-hierarchy")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="build with one or more location methods and report counters")
    _add_source(b)
    b.add_argument("--method", action="append", choices=[m.value for m in Method],
                   help="repeatable; default runs all four")
    b.add_argument("--shuffle", action="store_true")
    b.add_argument("--repeats", type=int, default=1)
    b.add_argument("--timeout", type=float, help="per-cell time limit in seconds")
    b.add_argument("--csv", help="write CSV here instead of stdout")
    b.set_defaults(func=cmd_bench)

    g = sub.add_parser("generate", help="write a benchmark point set")
    g.add_argument("--dist", choices=[k.value for k in Kind], default="random")
    g.add_argument("--n", type=int, default=5000)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("costmodel", help="tabulate the analytic cost formulas as CSV")
    c.add_argument("--alpha", type=float, default=40.0)
    c.add_argument("--beta", type=float, default=1.0)
    c.add_argument("--n-min", type=int, default=10)
    c.add_argument("--n-max", type=int, default=2000)
    c.add_argument("--step", type=int, default=10)
    c.add_argument("--max-k", type=int, default=3)
    c.add_argument("--crossovers", action="store_true", help="also print crossovers to stderr")
    c.set_defaults(func=cmd_costmodel)

    v = sub.add_parser("validate", help="build a hierarchy and check every level")
    _add_source(v)
    v.add_argument("--full", action="store_true", help="global empty-circle check")
    v.set_defaults(func=cmd_validate)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "method", "unset") is None:
        args.method = [m.value for m in Method]
    try:
        return args.func(args)
    except (OSError, ValueError, CoordinateOutOfRange, BenchValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2 if not isinstance(exc, BenchValidationError) else 1


if __name__ == "__main__":
    sys.exit(main())
