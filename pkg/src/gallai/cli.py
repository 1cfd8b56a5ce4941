"""Command line interface.

Exit codes: 0 success, 1 usage or data errors, 2 capacity or cap errors,
3 I/O errors.
"""

from __future__ import annotations

import argparse
import sys

from .counting import count_exact, DEFAULT_NODE_CAP
from .errors import CapacityError
from .estimate import KNUTH, NAIVE, estimate_knuth, estimate_naive
from .graph import format_edge_list, generate_gnp, load_edge_list, save_edge_list, triangle_stats
from .selfcheck import run_selfcheck
from .sweep import emit_csv, load_sweep_config, run_sweep


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gallai",
        description="Count, estimate and survey Gallai (rainbow-triangle-free) 3-colourings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="sample G(n,p) and write its edge list")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", default=None, help="path for the edge list (default stdout)")

    stats = sub.add_parser("stats", help="triangle statistics of an edge list")
    stats.add_argument("--in", dest="in_path", required=True)

    count = sub.add_parser("count", help="exact Gallai colouring count")
    count.add_argument("--in", dest="in_path", required=True)
    count.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)

    estimate = sub.add_parser("estimate", help="randomized estimate of the count")
    estimate.add_argument("--in", dest="in_path", required=True)
    estimate.add_argument("--method", choices=[NAIVE, KNUTH], required=True)
    estimate.add_argument("--samples", type=int, default=10_000)
    estimate.add_argument("--seed", type=int, default=0)

    sweep = sub.add_parser("sweep", help="run a density sweep from a config file")
    sweep.add_argument("--config", required=True)
    sweep.add_argument("--out", default=None, help="path for the CSV (default stdout)")
    sweep.add_argument("--plot", default=None, help="also render a figure to this path")

    sub.add_parser("verify", help="run the built-in invariant suite")
    return parser


def _cmd_gen(args) -> int:
    graph = generate_gnp(args.n, args.p, args.seed)
    if args.out is None:
        sys.stdout.write(format_edge_list(graph))
    else:
        save_edge_list(graph, args.out)
    return 0


def _cmd_stats(args) -> int:
    graph = load_edge_list(args.in_path)
    stats = triangle_stats(graph)
    print(f"n={graph.n}")
    print(f"edges={graph.edge_count}")
    print(f"triangles={stats.triangle_count}")
    print(f"triangle_edges={stats.triangle_edge_count}")
    return 0


def _cmd_count(args) -> int:
    graph = load_edge_list(args.in_path)
    report = count_exact(graph, args.node_cap)
    print(f"free_edges={report.free_edge_count}")
    print(f"components={report.component_count}")
    print(f"nodes_explored={report.nodes_explored}")
    print(f"capped={1 if report.capped else 0}")
    if report.capped:
        print(f"count capped at node_cap={args.node_cap}; no exact value", file=sys.stderr)
        return 2
    print(f"count={report.count}")
    return 0


def _cmd_estimate(args) -> int:
    graph = load_edge_list(args.in_path)
    estimator = estimate_naive if args.method == NAIVE else estimate_knuth
    est = estimator(graph, args.samples, args.seed)
    print(f"method={est.method}")
    print(f"seed={est.seed}")
    print(f"samples={est.samples}")
    print(f"zero_hit={1 if est.zero_hit else 0}")
    if est.zero_hit:
        print(f"log3_upper_bound={est.log3_upper_bound:.12g}")
    else:
        print(f"log3_estimate={est.log3_estimate:.12g}")
        print(f"log3_stderr={est.log3_stderr:.12g}")
    return 0


def _cmd_sweep(args) -> int:
    cfg = load_sweep_config(args.config)
    records = run_sweep(cfg)
    text = emit_csv(records)
    if args.out is None:
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    if args.plot is not None:
        from .plotting import render_sweep_figure

        render_sweep_figure(records, args.plot)
    return 0


def _cmd_verify(args) -> int:
    return 0 if run_selfcheck() else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "stats": _cmd_stats,
    "count": _cmd_count,
    "estimate": _cmd_estimate,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
}


def cli_main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems and 0 for --help; fold to our codes
        return 0 if exc.code in (0, None) else 1
    try:
        return _COMMANDS[args.command](args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    raise SystemExit(cli_main())
