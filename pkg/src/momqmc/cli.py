"""Command-line interface: run sweeps, plot results, query exact values, dump points."""

from __future__ import annotations

import argparse
import sys

from .estimators import ExperimentConfig
from .harness import read_csv, run_experiment, write_csv
from .integrands import keister_exact
from .pointsets import KIND_CODES, KINDS, draw_pointset
from .rng import SeedPath, SplitMix64, derive_seed
from .svgplot import emit_plots


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="momqmc",
        description="Randomized QMC integration of the Keister function with "
                    "median-of-means and mean-of-means aggregation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run an experiment sweep and write a results CSV")
    run_p.add_argument("--pointset", choices=KINDS, default="lattice")
    run_p.add_argument("--dims", default="2,3,5,8",
                       help="comma-separated list of dimensions (default: 2,3,5,8)")
    run_p.add_argument("--log2n-min", type=int, default=8)
    run_p.add_argument("--log2n-max", type=int, default=19)
    run_p.add_argument("--replicates", type=int, default=11)
    run_p.add_argument("--trials", type=int, default=25)
    run_p.add_argument("--seed", type=int, default=0)
    run_p.add_argument("--out", default="results.csv")
    run_p.add_argument("--threads", type=int, default=None,
                       help="worker threads (default: available parallelism); "
                            "results are identical for any value")
    run_p.add_argument("--unpaired", action="store_true",
                       help="draw separate replicate sets for the median and mean pipelines")

    plot_p = sub.add_parser("plot", help="render comparison/difference SVGs from a results CSV")
    plot_p.add_argument("--in", dest="infile", required=True)
    plot_p.add_argument("--outdir", required=True)

    exact_p = sub.add_parser("exact", help="print the exact Keister integral for a dimension")
    exact_p.add_argument("--dim", type=int, required=True)

    points_p = sub.add_parser("points", help="dump one randomized point set as CSV on stdout")
    points_p.add_argument("--pointset", choices=KINDS, default="lattice")
    points_p.add_argument("--dim", type=int, required=True)
    points_p.add_argument("--log2n", type=int, required=True)
    points_p.add_argument("--seed", type=int, default=0)

    return parser


def _cmd_run(args: argparse.Namespace) -> int:
    dims = tuple(int(tok) for tok in args.dims.split(",") if tok.strip())
    config = ExperimentConfig(
        pointset_kind=args.pointset,
        dims=dims,
        log2n_min=args.log2n_min,
        log2n_max=args.log2n_max,
        replicates=args.replicates,
        trials=args.trials,
        master_seed=args.seed,
        paired=not args.unpaired,
    )
    rows = run_experiment(config, threads=args.threads)
    path = write_csv(rows, args.out)
    wins = sum(row.diff >= 0.0 for row in rows)
    print(f"wrote {len(rows)} rows to {path} "
          f"(median-of-means at least as accurate in {wins}/{len(rows)} cells)")
    return 0


def _cmd_plot(args: argparse.Namespace) -> int:
    rows = read_csv(args.infile)
    written = emit_plots(rows, args.outdir)
    print(f"wrote {len(written)} SVG files to {args.outdir}")
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    print(format(keister_exact(args.dim).value, ".15g"))
    return 0


def _cmd_points(args: argparse.Namespace) -> int:
    path = SeedPath(args.seed, (
        ("pointset", KIND_CODES[args.pointset]),
        ("dim", args.dim),
        ("log2n", args.log2n),
    ))
    points = draw_pointset(args.pointset, args.log2n, args.dim, SplitMix64(derive_seed(path)))
    for row in points.coords:
        print(",".join(format(c, ".17g") for c in row))
    return 0


_COMMANDS = {
    "run": _cmd_run,
    "plot": _cmd_plot,
    "exact": _cmd_exact,
    "points": _cmd_points,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
