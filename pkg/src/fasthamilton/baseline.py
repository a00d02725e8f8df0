"""Greedy random-walk baseline solver (Angluin-Valiant style sketch).

Non-normative: this exists as the order-of-growth comparison point for
the benchmarks.  It grows a path by querying the endpoint, and once the
path covers half the vertices it detaches long cycles (Posa rotations
restricted to distance >= n/2) and reattaches them when a cycle vertex
is sampled.  It needs more than O(log n) queries at some vertices, so
its oracle runs with relaxed per-vertex caps.
"""

from __future__ import annotations

import math
import time

from .errors import (BudgetExceededError, InvalidArgumentError,
                     OracleExhaustedError, PhaseFailureError)
from .graphgen import StoredGraph
from .oracle import NeighborOracle, QueryBudget
from .pathseq import PathSeq
from .runstats import RunStats
from .stitch import HamiltonCycle

__all__ = ["baseline_angluin_valiant"]


def baseline_angluin_valiant(graph: StoredGraph, algo_seed: int,
                             total_call_cap: int | None = None
                             ) -> tuple[HamiltonCycle, RunStats]:
    """Random-walk path growth with long rotations; gives up at the call cap.

    Default cap is 40 n ln n total oracle calls.  Returns a verified-shape
    cycle plus stats; raises PhaseFailureError("baseline", ...) on give-up.
    """
    n = graph.n
    if n < 4:
        raise InvalidArgumentError("need n >= 4")
    cap = total_call_cap if total_call_cap is not None else math.ceil(40.0 * n * math.log(n))
    # the baseline hammers endpoint vertices, so only the total cap binds
    oracle = NeighborOracle(graph, algo_seed,
                            budget=QueryBudget(per_vertex_cap=cap, total_cap=cap))
    stats = RunStats(n=n, p=graph.p, graph_seed=graph.graph_seed, algo_seed=algo_seed)
    t0 = time.perf_counter()

    def fail(msg: str, exc: Exception | None = None):
        stats.outcome = "failure"
        stats.failure_phase = "baseline"
        stats.oracle_calls_total = oracle.total_calls
        stats.oracle_calls_max_per_vertex = oracle.max_calls_per_vertex
        stats.time_phase2 = time.perf_counter() - t0
        err = PhaseFailureError("baseline", msg, stats=stats)
        raise err from exc

    P = PathSeq([0])
    detached: PathSeq | None = None  # long cycle held aside
    rotations = 0
    try:
        while True:
            if oracle.total_calls >= cap:
                fail(f"gave up after {cap} oracle calls")
            w = oracle.new_neighbor(P.end())
            if detached is not None and w in detached:
                # reattach the stored cycle rotated so the hit vertex leads;
                # the seam edge (old detach endpoint, old detach start) is
                # the cycle edge that closed it originally
                if w == detached.start():
                    P = P.concat(detached)
                else:
                    head, tail = detached.split_before(w)
                    P = P.concat(tail).concat(head)
                detached = None
                rotations += 1
                continue
            if not P.contains(w):
                P = P.concat(PathSeq([w]))
                continue
            if len(P) == n and detached is None and w == P.start():
                break  # wraparound edge found: Hamilton cycle complete
            # long Posa rotation: detach the cycle closed by {w, end}
            # when it spans at least half the vertices
            if detached is None and 2 * len(P) >= n and w != P.start():
                if len(P) - P.rank(w) >= n // 2:
                    P, detached = P.split_before(w)
                    rotations += 1
    except (OracleExhaustedError, BudgetExceededError) as exc:
        fail(str(exc), exc)

    stats.outcome = "success"
    stats.oracle_calls_total = oracle.total_calls
    stats.oracle_calls_max_per_vertex = oracle.max_calls_per_vertex
    stats.phase2_rotations = rotations
    stats.time_phase2 = time.perf_counter() - t0
    return HamiltonCycle(P.to_list()), stats
