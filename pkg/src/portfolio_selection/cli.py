"""Command-line entry point: run experiments, list them, query analytics."""

from __future__ import annotations

import argparse
import sys

from . import analytics
from .distributions import DistributionSpec, uniform
from .errors import ConfigurationError, DomainError, NumericError
from .experiments import (
    BUILTINS,
    DEFAULT_REPLICATIONS,
    list_experiments,
    load_experiment_file,
    run_experiment,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="portfolio-lab",
        description="Simulation laboratory for budget-constrained project "
        "portfolio selection under different decision-aggregation rules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a named experiment and write CSV output")
    run.add_argument("experiment", help="builtin experiment name (see `list`)")
    run.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    run.add_argument(
        "--reps",
        type=int,
        default=DEFAULT_REPLICATIONS,
        help=f"Monte Carlo replications per point (default {DEFAULT_REPLICATIONS})",
    )
    run.add_argument("--workers", type=int, default=1, help="parallel workers")
    run.add_argument("--out", default=".", help="output directory (default .)")
    run.add_argument(
        "--config",
        default=None,
        help="YAML file overriding any field of the named experiment",
    )

    sub.add_parser("list", help="list builtin experiments")

    analytics_p = sub.add_parser(
        "analytics", help="evaluate closed-form order-statistic benchmarks"
    )
    asub = analytics_p.add_subparsers(dest="analytic", required=True)

    def add_support(p):
        p.add_argument("--q-low", type=float, default=-5.0)
        p.add_argument("--q-high", type=float, default=5.0)

    mx = asub.add_parser("max", help="expected total of the true top m of n")
    mx.add_argument("--m", type=int, required=True)
    mx.add_argument("--n", type=int, required=True)
    add_support(mx)
    mx.add_argument(
        "--dist",
        choices=("uniform", "truncated-normal", "power-law"),
        default="uniform",
    )
    mx.add_argument("--mean", type=float, default=0.0)
    mx.add_argument("--sd", type=float, default=1.0)
    mx.add_argument("--exponent", type=float, default=-0.5)

    ms = asub.add_parser("mstar", help="budget maximizing the top-m total")
    ms.add_argument("--n", type=int, required=True)
    add_support(ms)

    es = asub.add_parser("estar", help="mean of the i-th order statistic")
    es.add_argument("--i", type=int, required=True, help="rank, 1 = minimum")
    es.add_argument("--n", type=int, required=True)
    add_support(es)
    es.add_argument(
        "--dist",
        choices=("uniform", "truncated-normal", "power-law"),
        default="uniform",
    )
    es.add_argument("--mean", type=float, default=0.0)
    es.add_argument("--sd", type=float, default=1.0)
    es.add_argument("--exponent", type=float, default=-0.5)

    return parser


def _dist_from_args(args) -> DistributionSpec:
    if args.dist == "uniform":
        return uniform(args.q_low, args.q_high)
    if args.dist == "truncated-normal":
        return DistributionSpec(
            "truncated-normal", args.q_low, args.q_high, mean=args.mean, sd=args.sd
        )
    return DistributionSpec(
        "power-law", args.q_low, args.q_high, exponent=args.exponent
    )


def _cmd_run(args) -> int:
    if args.config is not None:
        spec = load_experiment_file(args.config)
    elif args.experiment in BUILTINS:
        spec = BUILTINS[args.experiment]
    else:
        known = ", ".join(sorted(BUILTINS))
        print(f"unknown experiment {args.experiment!r}; known: {known}", file=sys.stderr)
        return 2
    paths = run_experiment(
        spec,
        seed=args.seed,
        replications=args.reps,
        out_dir=args.out,
        workers=args.workers,
    )
    for path in paths:
        print(path)
    return 0


def _cmd_list() -> int:
    width = max(len(name) for name, _ in list_experiments())
    for name, description in list_experiments():
        print(f"{name:<{width}}  {description}")
    return 0


def _cmd_analytics(args) -> int:
    if args.analytic == "max":
        dist = _dist_from_args(args)
        if dist.kind == "uniform":
            bound = analytics.max_performance_uniform(
                args.m, args.n, args.q_low, args.q_high
            )
        else:
            bound = analytics.max_performance_general(args.m, args.n, dist)
        print(f"total={bound.total:.6f} per_project={bound.per_project:.6f}")
    elif args.analytic == "mstar":
        m_star = analytics.optimal_budget(args.n, args.q_low, args.q_high)
        limit = analytics.selectiveness_limit(args.q_low, args.q_high)
        print(f"m_star={m_star:.6f} selectiveness_limit={limit:.6f}")
    else:
        dist = _dist_from_args(args)
        mean = analytics.order_statistic_mean(args.i, args.n, dist)
        print(f"order_statistic_mean={mean:.6f}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        if args.command == "list":
            return _cmd_list()
        return _cmd_analytics(args)
    except (ConfigurationError, DomainError, NumericError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
