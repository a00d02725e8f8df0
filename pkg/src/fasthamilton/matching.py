"""Phase 1: fast perfect matching on the bipartite view.

The driver repeatedly pops an unmatched B-vertex and runs an augmenting
random walk (increase_matching).  Between walks it deepens the exposed
d-neighborhood of the unmatched A-vertices following the schedule
d(t) = min(sqrt(n/t), ln n), which is what makes the walks terminate
after O(1) expected swaps per matched vertex.
"""

from __future__ import annotations

import math

from .errors import InvalidArgumentError
from .oracle import NeighborOracle
from .runstats import RunStats

__all__ = ["Matching", "NeighborhoodState", "d_schedule",
           "fast_perfect_matching", "increase_matching", "expose_level"]


def d_schedule(n: int, t: int) -> float:
    """Exposure depth while t vertices remain unmatched: min(sqrt(n/t), ln n)."""
    if t < 1:
        raise InvalidArgumentError(f"t must be >= 1, got {t}")
    return min(math.sqrt(n / t), math.log(n))


class Matching:
    """A partial bijection between the A and B sides, plus unmatched sets."""

    def __init__(self, A, B):
        self.a2b: dict[int, int] = {}
        self.b2a: dict[int, int] = {}
        self.A0 = set(A)
        self.B0 = set(B)

    def __len__(self):
        return len(self.a2b)

    def match(self, a: int, b: int) -> None:
        self.a2b[a] = b
        self.b2a[b] = a
        self.A0.discard(a)
        self.B0.discard(b)

    def pairs(self):
        return list(self.a2b.items())

    def is_perfect_on(self, A, B) -> bool:
        return not self.A0 and not self.B0 and \
            set(self.a2b) == set(A) and set(self.b2a) == set(B)


class NeighborhoodState:
    """The dynamically maintained d-neighborhood of the unmatched A-side.

    exposed[a] holds the first d bipartite samples of a (for a in A0);
    inverse is the exact inverse relation, used for the O(1) membership
    check at the top of every walk.
    """

    def __init__(self):
        self.d = 0
        self.exposed: dict[int, list[int]] = {}
        self.inverse: dict[int, set[int]] = {}

    def purge(self, a: int) -> None:
        """Drop a's entries when a leaves A0 (eager stale-entry policy)."""
        inv = self.inverse
        for b in self.exposed.pop(a, ()):
            s = inv.get(b)
            if s is not None:
                s.discard(a)
                if not s:
                    del inv[b]


def increase_matching(oracle: NeighborOracle, M: Matching, v: int,
                      N: NeighborhoodState, stats: RunStats | None = None,
                      walk_log: list | None = None) -> None:
    """Augment M by exactly one edge, starting the walk at unmatched v in B.

    The augmenting walk runs as a loop; each iteration of the swap branch
    replaces a matched pair and continues from the evicted B-vertex.
    """
    inv = N.inverse
    A0 = M.A0
    a2b = M.a2b
    b2a = M.b2a
    steps = 0
    size_at_entry = len(A0)
    while True:
        cands = inv.get(v)
        if cands:
            # v was already exposed by some unmatched a; smallest id wins
            a = min(cands)
            M.match(a, v)
            N.purge(a)
            break
        w = oracle.bipartite_new_neighbor(v, "A")
        if w in A0:
            M.match(w, v)
            N.purge(w)
            break
        # w is matched: swap its pair over to v and continue from the evictee
        u = a2b[w]
        a2b[w] = v
        b2a[v] = w
        del b2a[u]
        v = u
        steps += 1
    if stats is not None:
        stats.matching_walk_steps += steps
    if walk_log is not None:
        walk_log.append((size_at_entry, steps))


def expose_level(oracle: NeighborOracle, N: NeighborhoodState, A0) -> int:
    """Deepen the exposed neighborhood by one level: one new sample per a in A0.

    Returns the number of edges exposed (|A0|).
    """
    N.d += 1
    exposed = N.exposed
    inverse = N.inverse
    for a in A0:
        w = oracle.bipartite_new_neighbor(a, "B")
        lst = exposed.get(a)
        if lst is None:
            lst = exposed[a] = []
        lst.append(w)
        s = inverse.get(w)
        if s is None:
            inverse[w] = {a}
        else:
            s.add(a)
    return len(A0)


def fast_perfect_matching(oracle: NeighborOracle, A, B,
                          stats: RunStats | None = None,
                          walk_log: list | None = None) -> Matching:
    """Find a perfect matching between A and B, O(n) oracle calls whp.

    B-vertices are processed in ascending id order (the analysis is
    order-oblivious; determinism aids replay).  Raises oracle errors
    upward; the pipeline wraps them into a phase failure.
    """
    if len(A) != len(B) or len(A) < 1:
        raise InvalidArgumentError("A and B must be nonempty and balanced")
    n = oracle.n
    log_n = math.log(n)
    M = Matching(A, B)
    N = NeighborhoodState()
    exposed_edges = 0
    for v in sorted(B):
        M.B0.discard(v)
        increase_matching(oracle, M, v, N, stats=stats, walk_log=walk_log)
        # deepen after the walk, exactly in the pseudocode's order; the
        # while condition is re-evaluated every level since |A0| moved
        while N.d < (d_schedule(n, len(M.A0)) if M.A0 else log_n):
            exposed_edges += expose_level(oracle, N, M.A0)
    if stats is not None:
        stats.exposed_edges_per_matching.append(exposed_edges)
    return M
