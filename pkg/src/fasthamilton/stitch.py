"""Phase 2: stitching the two-matching cycle cover into a Hamilton cycle.

The union of two independent perfect matchings is a cycle cover with
O(log n) cycles whp.  We greedily grow a path to 3n/4 vertices, absorb
each remaining cycle with batched neighbor samples and long Posa
rotations, and finally close the Hamilton path into a cycle.  Every
endpoint whose neighborhood we sample goes into a used set and is never
queried again within this phase.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .errors import (BudgetExceededError, InvalidArgumentError,
                     OracleExhaustedError, PhaseFailureError)
from .graphgen import StoredGraph, bipartition
from .matching import Matching, fast_perfect_matching
from .oracle import NeighborOracle, QueryBudget
from .pathseq import PathSeq
from .runstats import RunStats

__all__ = ["CycleCover", "UsedSet", "HamiltonCycle", "cycle_cover",
           "sample_neighbors", "greedy_absorb", "add_single_cycle",
           "close_cycle", "find_hamilton_cycle"]


@dataclass
class HamiltonCycle:
    """Cyclic vertex order; consecutive and wraparound pairs are edges."""

    order: list[int]

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)


class CycleCover:
    """Vertex-disjoint cycles covering V, from the union of two matchings.

    2-cycles represent doubled edges; a single 1-cycle holds the odd-n
    set-aside vertex.
    """

    def __init__(self, cycles: list[list[int]]):
        self.cycles = cycles
        self.cycle_of = {v: i for i, cyc in enumerate(cycles) for v in cyc}

    def __len__(self):
        return len(self.cycles)


class UsedSet:
    """Insert-only record of vertices whose neighborhoods phase 2 sampled."""

    def __init__(self, n: int, debug: bool = False):
        self._members: set[int] = set()
        self._n = n
        self._debug = debug

    def add(self, v: int) -> None:
        self._members.add(v)
        if self._debug:
            assert 8 * len(self._members) <= self._n, "used set grew past n/8"

    def __contains__(self, v: int) -> bool:
        return v in self._members

    @property
    def count(self) -> int:
        return len(self._members)


def cycle_cover(M1: Matching, M2: Matching, set_aside: int | None = None) -> CycleCover:
    """Decompose M1 union M2 into alternating cycles covering all vertices."""
    if M1.A0 or M1.B0 or M2.A0 or M2.B0 or set(M1.a2b) != set(M2.a2b):
        raise InvalidArgumentError("cycle_cover needs two perfect matchings on the same bipartition")
    cycles: list[list[int]] = []
    seen: set[int] = set()
    for a in sorted(M1.a2b):
        if a in seen:
            continue
        cyc = []
        cur = a
        while True:
            cyc.append(cur)
            seen.add(cur)
            b = M1.a2b[cur]
            cyc.append(b)
            cur = M2.b2a[b]
            if cur == a:
                break
        cycles.append(cyc)
    if set_aside is not None:
        cycles.append([set_aside])
    return CycleCover(cycles)


def default_sample_size(n: int) -> int:
    """Phase-2 batch size: ceil(40 ln n) samples per endpoint."""
    return math.ceil(40.0 * math.log(n))


def sample_neighbors(oracle: NeighborOracle, v: int, k: int) -> list[int]:
    """k new_neighbor(v) draws, deduplicated, first-occurrence order kept.

    The sample order matters: all candidate searches scan it and take the
    first qualifying element, which keeps runs replayable.
    """
    return list(dict.fromkeys(oracle.new_neighbor(v) for _ in range(k)))


def greedy_absorb(oracle: NeighborOracle, cover: CycleCover,
                  stats: RunStats | None = None,
                  sample_size: int | None = None):
    """Greedily chain cycles into one path of more than 3n/4 vertices.

    Returns (path, used set, indices of cycles not yet absorbed).  Gives
    up if a whole sample batch from the endpoint stays inside the path.
    """
    n = oracle.n
    k = sample_size if sample_size is not None else default_sample_size(n)
    U = UsedSet(n, debug=oracle.debug)
    first = cover.cycles[0]
    P = PathSeq(first)
    consumed = {0}
    while 4 * len(P) <= 3 * n:
        p_end = P.end()
        U.add(p_end)
        # query one neighbor at a time and stop on the first hit outside P
        # (each query succeeds with probability >= 1/4 while |P| <= 3n/4);
        # the batch cap only bounds the worst case
        hit = None
        for _ in range(k):
            w = oracle.new_neighbor(p_end)
            if not P.contains(w):
                hit = w
                break
        if hit is None:
            raise PhaseFailureError("phase2-greedy-absorb",
                                    f"no fresh-cycle vertex among {k} samples of {p_end}")
        ci = cover.cycle_of[hit]
        cyc = cover.cycles[ci]
        i = cyc.index(hit)
        # cut at the hit vertex; forward traversal makes its cycle
        # predecessor the new endpoint
        segment = cyc[i:] + cyc[:i]
        P = P.concat(PathSeq(segment))
        consumed.add(ci)
    remaining = [i for i in range(len(cover.cycles)) if i not in consumed]
    return P, U, remaining


def _search_join_v(P: PathSeq, N: list[int], n_start: set[int]):
    """First sampled v whose path predecessor lies in N_start, first half."""
    for v in N:
        if P.contains(v):
            pv = P.pred(v)
            if pv is not None and pv in n_start and P.half(v):
                return v
    return None


def _search_second_half(P: PathSeq, N: list[int], U: UsedSet):
    """First sampled q in the second half whose predecessor is unused."""
    for q in N:
        if P.contains(q) and not P.half(q):
            pq = P.pred(q)
            if pq is not None and pq not in U:
                return q
    return None


def _search_rotation_v(P: PathSeq, N: list[int], U: UsedSet):
    """First sampled v != start in the first half with unused predecessor."""
    start = P.start()
    for v in N:
        if v != start and P.contains(v) and P.half(v):
            pv = P.pred(v)
            if pv is not None and pv not in U:
                return v
    return None


def _rotate(P: PathSeq, v: int, q: int) -> PathSeq:
    """Long Posa rotation: (start..pred(v)) + (q..end) + (v..pred(q))."""
    left, rest = P.split_before(v)
    mid, tail = rest.split_before(q)
    return left.concat(tail).concat(mid)


def _assert_join_edges(graph: StoredGraph, pred_v, c_start, c_end, q, p_end, v):
    for a, b in ((pred_v, c_start), (c_end, q), (p_end, v)):
        assert graph.has_edge(a, b), f"join used non-edge {{{a}, {b}}}"


def add_single_cycle(oracle: NeighborOracle, P: PathSeq, C: list[int],
                     U: UsedSet, stats: RunStats | None = None,
                     sample_size: int | None = None) -> PathSeq:
    """Absorb one disjoint cycle into a path of length >= 3n/4.

    Loops batched sampling at the endpoint; joins the cycle when a sampled
    vertex has its predecessor adjacent to the cycle's start, otherwise
    performs one long Posa rotation to move the endpoint.  Returns the
    rebuilt path; any failed search aborts the run.
    """
    n = oracle.n
    k = sample_size if sample_size is not None else default_sample_size(n)
    c_start, c_end = C[0], C[-1]
    n_start = {w for w in sample_neighbors(oracle, c_start, k) if P.contains(w)}
    n_end = sample_neighbors(oracle, c_end, k)
    U.add(c_start)
    U.add(c_end)
    while True:
        p_end = P.end()
        N = sample_neighbors(oracle, p_end, k)
        U.add(p_end)
        v = _search_join_v(P, N, n_start)
        if v is not None:
            q = _search_second_half(P, n_end, U)
            if q is None:
                raise PhaseFailureError("phase2-add-cycle",
                                        "no usable second-half vertex adjacent to the cycle end")
            if oracle.debug:
                _assert_join_edges(oracle.graph, P.pred(v), c_start, c_end, q, p_end, v)
            left, rest = P.split_before(v)
            mid, tail = rest.split_before(q)
            return left.concat(PathSeq(C)).concat(tail).concat(mid)
        v = _search_rotation_v(P, N, U)
        if v is None:
            raise PhaseFailureError("phase2-add-cycle",
                                    "no rotation pivot in the endpoint's sample")
        pv = P.pred(v)
        N2 = sample_neighbors(oracle, pv, k)
        U.add(pv)
        q = _search_second_half(P, N2, U)
        if q is None:
            raise PhaseFailureError("phase2-add-cycle",
                                    "no second-half partner for the rotation pivot")
        P = _rotate(P, v, q)
        if stats is not None:
            stats.phase2_rotations += 1


def close_cycle(oracle: NeighborOracle, P: PathSeq, U: UsedSet,
                stats: RunStats | None = None,
                sample_size: int | None = None) -> HamiltonCycle:
    """Close a Hamilton path into a Hamilton cycle.

    Same loop as cycle absorption with the cycle replaced by the path
    start and the join condition mirrored onto successors: a sampled v
    with succ(v) adjacent to the start closes up as
    (start..v) + (end..succ(v) reversed).
    """
    if len(P) != oracle.n:
        raise InvalidArgumentError("close_cycle needs a Hamilton path")
    n = oracle.n
    k = sample_size if sample_size is not None else default_sample_size(n)
    p_start = P.start()
    n_start = {w for w in sample_neighbors(oracle, p_start, k) if P.contains(w)}
    U.add(p_start)
    while True:
        p_end = P.end()
        N = sample_neighbors(oracle, p_end, k)
        U.add(p_end)
        hit = None
        for v in N:
            if P.contains(v) and P.half(v):
                sv = P.succ(v)
                if sv is not None and sv in n_start:
                    hit = v
                    break
        if hit is not None:
            r = P.rank(hit)
            order = P.to_list()
            # prefix up to v, then the suffix walked backwards from the end
            return HamiltonCycle(order[:r] + order[r:][::-1])
        v = _search_rotation_v(P, N, U)
        if v is None:
            raise PhaseFailureError("phase2-close-cycle",
                                    "no rotation pivot in the endpoint's sample")
        pv = P.pred(v)
        N2 = sample_neighbors(oracle, pv, k)
        U.add(pv)
        q = _search_second_half(P, N2, U)
        if q is None:
            raise PhaseFailureError("phase2-close-cycle",
                                    "no second-half partner for the rotation pivot")
        P = _rotate(P, v, q)
        if stats is not None:
            stats.phase2_rotations += 1


def find_hamilton_cycle(graph: StoredGraph, algo_seed: int,
                        budget: QueryBudget | None = None,
                        debug: bool = False) -> tuple[HamiltonCycle, RunStats]:
    """Full pipeline: two matchings, cycle cover, stitching, closing.

    Returns (cycle, stats); raises PhaseFailureError carrying the stats
    snapshot when any phase gives up.  A failed run is terminal here;
    retrying with a fresh algo_seed is the caller's policy.
    """
    if graph.n < 4:
        raise InvalidArgumentError("need n >= 4")
    A, B, set_aside = bipartition(graph.n)
    oracle = NeighborOracle(graph, algo_seed, budget=budget, debug=debug)
    stats = RunStats(n=graph.n, p=graph.p, graph_seed=graph.graph_seed,
                     algo_seed=algo_seed)

    def fail(phase: str, exc: Exception):
        stats.outcome = "failure"
        stats.failure_phase = phase
        stats.oracle_calls_total = oracle.total_calls
        stats.oracle_calls_max_per_vertex = oracle.max_calls_per_vertex
        stats.phase2_calls = oracle.total_calls - stats.phase1_calls
        raise PhaseFailureError(phase, str(exc), stats=stats) from exc

    t0 = time.perf_counter()
    try:
        m1 = fast_perfect_matching(oracle, A, B, stats=stats)
        oracle.reset_exposure()
        m2 = fast_perfect_matching(oracle, A, B, stats=stats)
    except (OracleExhaustedError, BudgetExceededError) as exc:
        stats.time_phase1 = time.perf_counter() - t0
        fail("phase1-matching", exc)
    stats.phase1_calls = oracle.total_calls
    stats.time_phase1 = time.perf_counter() - t0

    t1 = time.perf_counter()
    cover = cycle_cover(m1, m2, set_aside)
    stats.cycles_in_cover = len(cover)
    stage = "phase2-greedy-absorb"
    try:
        P, U, remaining = greedy_absorb(oracle, cover, stats=stats)
        stage = "phase2-add-cycle"
        for ci in remaining:
            P = add_single_cycle(oracle, P, cover.cycles[ci], U, stats=stats)
        stage = "phase2-close-cycle"
        ham = close_cycle(oracle, P, U, stats=stats)
    except PhaseFailureError as exc:
        stats.time_phase2 = time.perf_counter() - t1
        fail(exc.phase, exc)
    except (OracleExhaustedError, BudgetExceededError) as exc:
        stats.time_phase2 = time.perf_counter() - t1
        fail(stage, exc)
    stats.time_phase2 = time.perf_counter() - t1

    stats.outcome = "success"
    stats.oracle_calls_total = oracle.total_calls
    stats.oracle_calls_max_per_vertex = oracle.max_calls_per_vertex
    stats.phase2_calls = oracle.total_calls - stats.phase1_calls
    return ham, stats
