"""Uniform-with-replacement neighbor queries over a stored graph.

The oracle realizes the query model the rest of the algorithm relies on:
each call for vertex v returns a neighbor that is uniform on V - v and
independent of every earlier call, as long as the per-vertex and total
budgets hold.  The mechanism is edge orientation with four-outcome coin
flips plus resampling of already-revealed out-neighbors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from random import Random

from .errors import BudgetExceededError, InvalidArgumentError, OracleExhaustedError
from .graphgen import StoredGraph

__all__ = ["QueryBudget", "NeighborOracle"]

# orientation bit masks, keyed on the canonical (lo, hi) pair
_LO_TO_HI = 1
_HI_TO_LO = 2


@dataclass(frozen=True)
class QueryBudget:
    """Hard caps on oracle usage; exceeding either raises, never truncates."""

    per_vertex_cap: int
    total_cap: int

    def __post_init__(self):
        if self.per_vertex_cap <= 0 or self.total_cap <= 0:
            raise InvalidArgumentError("query budget caps must be positive")

    @classmethod
    def default_for(cls, n: int) -> "QueryBudget":
        # ceil(100 ln n) per vertex; 60 n total (O(n) with headroom)
        return cls(per_vertex_cap=math.ceil(100.0 * math.log(n)), total_cap=60 * n)


class NeighborOracle:
    """Stateful new-neighbor query interface over one StoredGraph.

    Single-owner mutable state; never share one oracle across threads.
    Randomness comes from two named sources: the graph's shuffle entropy
    (adjacency-list order, realized lazily) and algo_seed (orientation
    coins and resampling).
    """

    def __init__(self, graph: StoredGraph, algo_seed: int,
                 budget: QueryBudget | None = None, debug: bool = False):
        self.graph = graph
        self.n = graph.n
        self.algo_seed = algo_seed
        self.budget = budget if budget is not None else QueryBudget.default_for(graph.n)
        self.debug = debug

        self._rng = Random(algo_seed)
        self._shuf = Random(f"shuffle:{graph.shuffle_entropy}:{algo_seed}")
        self._adj = graph._adj
        self._overlay: dict[int, int] = {}  # lazy Fisher-Yates swap overlay
        self._cursor = graph._off[:-1].tolist()  # absolute next-unread positions
        self._end = graph._off[1:].tolist()
        self._omem: dict[int, int] = {}  # canonical edge key -> orientation mask
        self._out: dict[int, list[int]] = {}  # revealed out-neighbors per vertex

        self.call_count = [0] * graph.n
        self.total_calls = 0
        self.max_calls_per_vertex = 0

        p = graph.p
        # cumulative thresholds of the four-outcome orientation coin:
        # [0,p/4) both, [p/4,p/2) neither, [p/2,1/2+p/4) lo->hi, rest hi->lo
        self._t_both = p / 4.0
        self._t_neither = p / 2.0
        self._t_lo_hi = 0.5 + p / 4.0

        half = graph.n // 2
        self._a_hi = half  # A = [0, half), B = [half, 2*half)
        self._b_hi = 2 * half

        self.exposure_epoch = 0

    # -- core query ------------------------------------------------------

    def new_neighbor(self, v: int) -> int:
        """One uniform-on-(V - v) neighbor sample, with replacement."""
        c = self.call_count[v]
        if c >= self.budget.per_vertex_cap:
            raise BudgetExceededError(
                f"vertex {v} hit its per-vertex cap of {self.budget.per_vertex_cap}", vertex=v)
        if self.total_calls >= self.budget.total_cap:
            raise BudgetExceededError(f"total cap of {self.budget.total_cap} hit")
        outs = self._out.get(v)
        if outs is None:
            outs = self._out[v] = []
        d = len(outs)
        rng = self._rng
        if d and rng.random() * (self.n - 1) < d:
            w = outs[int(rng.random() * d)]
        else:
            w = self._scan(v, outs)
        c += 1
        self.call_count[v] = c
        self.total_calls += 1
        if c > self.max_calls_per_vertex:
            self.max_calls_per_vertex = c
        if self.debug and not self.graph.has_edge(v, w):
            raise AssertionError(f"oracle returned non-neighbor {w} for {v}")
        return w

    def _scan(self, v: int, outs: list[int]) -> int:
        """Advance the adjacency cursor of v until an edge oriented v->w shows up."""
        cur = self._cursor[v]
        end = self._end[v]
        adj = self._adj
        ov = self._overlay
        omem = self._omem
        rng = self._rng
        shuf = self._shuf
        n = self.n
        t_both = self._t_both
        t_neither = self._t_neither
        t_lo_hi = self._t_lo_hi
        while cur < end:
            # lazy uniform shuffle: draw the next unread entry uniformly
            # from the unread suffix [cur, end)
            j = cur + int(shuf.random() * (end - cur))
            w = ov.pop(j, None)
            if w is None:
                w = adj.item(j)
            if j != cur:
                wc = ov.pop(cur, None)
                if wc is None:
                    wc = adj.item(cur)
                ov[j] = wc
            cur += 1
            key = v * n + w if v < w else w * n + v
            mask = omem.get(key)
            if mask is None:
                r = rng.random()
                if r < t_both:
                    mask = _LO_TO_HI | _HI_TO_LO
                elif r < t_neither:
                    mask = 0
                elif r < t_lo_hi:
                    mask = _LO_TO_HI
                else:
                    mask = _HI_TO_LO
                omem[key] = mask
            if mask & (_LO_TO_HI if v < w else _HI_TO_LO):
                self._cursor[v] = cur
                outs.append(w)
                return w
        self._cursor[v] = cur
        raise OracleExhaustedError(v)

    # -- bipartite view --------------------------------------------------

    def bipartite_new_neighbor(self, v: int, target_side: str) -> int:
        """Repeat new_neighbor(v) until the result lies in the target side."""
        if target_side == "A":
            lo, hi = 0, self._a_hi
        elif target_side == "B":
            lo, hi = self._a_hi, self._b_hi
        else:
            raise InvalidArgumentError(f"target_side must be 'A' or 'B', got {target_side!r}")
        while True:
            w = self.new_neighbor(v)
            if lo <= w < hi:
                return w

    # -- bookkeeping -----------------------------------------------------

    def reset_exposure(self) -> None:
        """Invalidate matching-phase d-neighborhood handles held by callers.

        Orientation memory, cursors, out-neighbors and call counts persist:
        they must, or uniformity and the budgets would no longer be globally
        valid across both matching runs.
        """
        self.exposure_epoch += 1

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Out-neighbors revealed so far (the d of the resampling rule)."""
        return tuple(self._out.get(v, ()))
