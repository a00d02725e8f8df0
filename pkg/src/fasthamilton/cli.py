"""Command-line front end: gen / solve / verify / bench / expansion.

Exit codes are a stable contract: 0 success, 1 usage or I/O error,
2 algorithmic failure (solver gave up, verification failed).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .bench import (BenchConfig, scaling_benchmark, write_csv, write_ndjson,
                    write_summary)
from .errors import FastHamiltonError, PhaseFailureError
from .graphgen import StoredGraph, generate_graph
from .oracle import QueryBudget
from .stitch import find_hamilton_cycle
from .verify import check_expansion, verify_hamilton_cycle

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ALGO = 2


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit2(message)


class SystemExit2(Exception):
    def __init__(self, message):
        super().__init__(message)


def _resolve_p(args) -> float:
    """Exactly one of --p / --C; C mode clamps p to 1 with a warning."""
    if (args.p is None) == (args.C is None):
        raise SystemExit2("exactly one of --p / --C must be given")
    if args.p is not None:
        return args.p
    p = args.C * math.log(args.n) / args.n
    if p > 1.0:
        print(f"warning: p = {args.C}*ln({args.n})/{args.n} = {p:.4f} clamped to 1.0",
              file=sys.stderr)
        p = 1.0
    return p


def _load_or_generate(args) -> StoredGraph:
    if args.graph is not None:
        return StoredGraph.load(args.graph)
    if args.n is None:
        raise SystemExit2("either --graph or --n with --p/--C is required")
    return generate_graph(args.n, _resolve_p(args), args.graph_seed)


def cmd_gen(args) -> int:
    graph = generate_graph(args.n, _resolve_p(args), args.graph_seed)
    graph.save(args.out)
    print(f"wrote {args.out}: n={graph.n} p={graph.p!r} m={graph.m}")
    return EXIT_OK


def cmd_solve(args) -> int:
    graph = _load_or_generate(args)
    budget = None
    if args.per_vertex_cap or args.total_cap:
        default = QueryBudget.default_for(graph.n)
        budget = QueryBudget(args.per_vertex_cap or default.per_vertex_cap,
                             args.total_cap or default.total_cap)
    last_failure = None
    for attempt in range(args.retries + 1):
        algo_seed = args.algo_seed if attempt == 0 else int(
            np.random.SeedSequence([args.algo_seed, attempt]).generate_state(1, np.uint64)[0])
        try:
            cycle, stats = find_hamilton_cycle(graph, algo_seed, budget=budget)
        except PhaseFailureError as exc:
            last_failure = exc
            print(f"attempt {attempt + 1}: {exc}", file=sys.stderr)
            continue
        ok, violation = verify_hamilton_cycle(graph, cycle)
        if not ok:  # hard postcondition; should be unreachable
            print(f"internal error: produced invalid cycle: {violation}", file=sys.stderr)
            return EXIT_ALGO
        if args.out_cycle:
            with open(args.out_cycle, "w") as fh:
                fh.write("\n".join(str(v) for v in cycle.order))
                fh.write(f"\n{cycle.order[0]}\n")
        if args.out_stats:
            with open(args.out_stats, "w") as fh:
                json.dump(stats.to_dict(), fh, indent=2, sort_keys=True)
                fh.write("\n")
        print(f"hamilton cycle found in {stats.oracle_calls_total} oracle calls "
              f"(attempt {attempt + 1})")
        return EXIT_OK
    print(f"failed after {args.retries + 1} attempt(s); "
          f"last phase: {last_failure.phase}", file=sys.stderr)
    if args.out_stats and last_failure.stats is not None:
        with open(args.out_stats, "w") as fh:
            json.dump(last_failure.stats.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_ALGO


def cmd_verify(args) -> int:
    graph = StoredGraph.load(args.graph)
    with open(args.cycle) as fh:
        vs = [int(line) for line in fh.read().split()]
    if len(vs) >= 2 and vs[0] == vs[-1]:
        vs = vs[:-1]  # closing repeat of the first vertex
    ok, violation = verify_hamilton_cycle(graph, vs)
    if ok:
        print("valid hamilton cycle")
        return EXIT_OK
    print(f"INVALID: {violation}")
    return EXIT_ALGO


def cmd_bench(args) -> int:
    config = BenchConfig(ns=[int(t) for t in args.ns.split(",")],
                         seeds_per_n=args.seeds, C=args.C,
                         master_seed=args.master_seed,
                         algorithm=args.algorithm, workers=args.workers)
    report = scaling_benchmark(config)
    write_ndjson(report, args.out_prefix + ".ndjson")
    write_summary(report, args.out_prefix + ".summary.json")
    write_csv(report, args.out_prefix + ".csv")
    print(f"slope={report.slope:.4f} +- {report.slope_ci:.4f} "
          f"failures={report.failures}")
    return EXIT_OK


def cmd_expansion(args) -> int:
    graph = _load_or_generate(args)
    report = check_expansion(graph, args.algo_seed, args.samples)
    out = {
        "samples_done": report.samples_done,
        "violations": report.violations,
        "min_ratio": report.min_ratio,
        "max_ratio": report.max_ratio,
        "partial": report.partial,
        "passed": report.passed,
    }
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(out, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK if report.passed else EXIT_ALGO


def _add_graph_args(p, generate_only=False):
    if not generate_only:
        p.add_argument("--graph", help="graph file to load")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--C", type=float, default=None,
                   help="density coefficient: p = min(1, C ln n / n)")
    p.add_argument("--graph-seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fasthamilton",
                     description="Hamilton cycles in G(n,p) in linear time")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph file")
    _add_graph_args(g, generate_only=True)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="find a Hamilton cycle")
    _add_graph_args(s)
    s.add_argument("--algo-seed", type=int, default=0)
    s.add_argument("--retries", type=int, default=0)
    s.add_argument("--per-vertex-cap", type=int, default=None)
    s.add_argument("--total-cap", type=int, default=None)
    s.add_argument("--out-cycle", default=None)
    s.add_argument("--out-stats", default=None)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="verify a cycle file against a graph file")
    v.add_argument("--graph", required=True)
    v.add_argument("--cycle", required=True)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="scaling benchmark over an n grid")
    b.add_argument("--ns", required=True, help="comma-separated n values")
    b.add_argument("--seeds", type=int, default=20)
    b.add_argument("--C", type=float, default=200.0)
    b.add_argument("--master-seed", type=int, default=0)
    b.add_argument("--algorithm", choices=["main", "baseline"], default="main")
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--out-prefix", required=True)
    b.set_defaults(func=cmd_bench)

    e = sub.add_parser("expansion", help="sampled d-neighborhood expansion check")
    _add_graph_args(e)
    e.add_argument("--algo-seed", type=int, default=0)
    e.add_argument("--samples", type=int, default=1000)
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_expansion)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "retries", 0) < 0:
            raise SystemExit2("--retries must be >= 0")
        return args.func(args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FastHamiltonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ALGO


if __name__ == "__main__":
    sys.exit(main())
