"""Command-line front end: ``sweep`` and ``bench`` subcommands.

Exit codes: 0 on success, 2 on configuration errors, 3 when ``--strict``
is given and at least one sweep point (or benchmark cell) failed.
"""

import argparse
import sys

from .bench import BENCH_COLUMNS, run_benchmark
from .config import load_config
from .errors import ConfigError
from .sweep import SWEEP_COLUMNS, emit_csv, run_sweep, write_csv

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3


def _common(parser):
    parser.add_argument("--config", required=True, help="key = value configuration file")
    parser.add_argument("--out", help="CSV output path (default: standard output)")
    parser.add_argument("--rel-tol", type=float, help="override the quadrature relative tolerance")
    parser.add_argument("--quadrature", choices=("simpson", "trapezoid"),
                        help="override the quadrature rule")
    parser.add_argument("--strict", action="store_true",
                        help="exit with status 3 if any point fails")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sommerfeld",
        description="Field of a vertical dipole over lossy ground: sweeps and quadrature benchmark.")
    sub = parser.add_subparsers(dest="command", required=True)
    sweep = sub.add_parser("sweep", help="frequency or distance sweep, written as CSV")
    _common(sweep)
    sweep.add_argument("--axis", choices=("freq", "dist"), help="override the sweep axis")
    sweep.add_argument("--methods", help="comma-separated methods, e.g. ni,spm,etalon")
    sweep.add_argument("--points", type=int, help="override the number of axis points")
    sweep.add_argument("--workers", type=int, default=1, help="threads used for evaluation")
    bench = sub.add_parser("bench", help="quadrature timing benchmark, written as CSV")
    _common(bench)
    bench.add_argument("--repetitions", type=int, help="timed runs per cell (median reported)")
    return parser


def _write(table, out, columns):
    if out:
        emit_csv(table, out, columns)
    else:
        write_csv(table, sys.stdout, columns)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config).with_overrides(
            rel_tol=args.rel_tol, quadrature=args.quadrature,
            axis=getattr(args, "axis", None), methods=getattr(args, "methods", None),
            points=getattr(args, "points", None), repetitions=getattr(args, "repetitions", None))
        scenario = cfg.scenario()
        if args.command == "sweep":
            spec = cfg.sweep_spec()
        else:
            spec = cfg.benchmark_spec()
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    if args.command == "sweep":
        table = run_sweep(spec, scenario, workers=args.workers)
        columns = SWEEP_COLUMNS
    else:
        table = run_benchmark(spec, scenario)
        columns = BENCH_COLUMNS
    try:
        _write(table, args.out, columns)
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_CONFIG
    failures = [row for row in table if row["error"]]
    for row in failures:
        print(f"warning: {row['error']}", file=sys.stderr)
    if failures and args.strict:
        return EXIT_SOLVER
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
