"""Seeded G(n,p) generation and the on-disk graph format.

Graphs are materialized as a CSR adjacency structure plus a sorted key
array for O(log m) edge membership.  Generation uses geometric skipping
over the n(n-1)/2 pair sequence, so the cost is O(m) rather than O(n^2).

The uniformly random adjacency-list order required by the query oracle is
not materialized here: each NeighborOracle realizes it lazily through a
sparse Fisher-Yates overlay driven by shuffle entropy derived from
graph_seed (see oracle.py).  This keeps a StoredGraph immutable and
shareable while remaining statistically identical to pre-shuffled lists.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InvalidArgumentError

__all__ = ["StoredGraph", "generate_graph", "bipartition", "side_of"]


def _decode_pair_indices(k: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Map 0-based linear indices of the lexicographic pair sequence to (u, v).

    Pairs are ordered (0,1),(0,2),...,(0,n-1),(1,2),...  Row u starts at
    S(u) = u*n - u(u+1)/2.
    """
    kf = k.astype(np.float64)
    u = np.floor(n - 0.5 - np.sqrt((n - 0.5) ** 2 - 2.0 * kf)).astype(np.int64)
    # float rounding can be off by one either way; fix up exactly
    s = lambda x: x * n - x * (x + 1) // 2
    u = np.where(s(u + 1) <= k, u + 1, u)
    u = np.where(s(u) > k, u - 1, u)
    v = k - s(u) + u + 1
    return u, v


def _sample_edges(n: int, p: float, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Sample the edge set of G(n,p) in lexicographic order, O(m) expected."""
    npairs = n * (n - 1) // 2
    if p >= 1.0:
        uu, vv = np.triu_indices(n, k=1)
        return uu.astype(np.int64), vv.astype(np.int64)
    if p <= 0.0 or npairs == 0:
        z = np.empty(0, dtype=np.int64)
        return z, z
    chunks = []
    cur = 0  # 1-based position of the last included pair
    est = int(npairs * p + 10.0 * math.sqrt(npairs * p) + 16)
    while cur < npairs:
        gaps = rng.geometric(p, size=est)
        pos = np.cumsum(gaps) + cur
        chunks.append(pos)
        cur = int(pos[-1])
        est = max(16, int((npairs - cur) * p * 1.2 + 16))
    k = np.concatenate(chunks) if len(chunks) > 1 else chunks[0]
    k = k[k <= npairs] - 1
    return _decode_pair_indices(k, n)


class StoredGraph:
    """A materialized G(n,p) instance.

    Attributes:
        n: vertex count.
        p: edge probability used at generation time.
        graph_seed: 64-bit seed; identical seeds give bit-identical graphs.
        m: number of undirected edges.
    """

    def __init__(self, n: int, p: float, graph_seed: int,
                 edges_u: np.ndarray, edges_v: np.ndarray):
        self.n = n
        self.p = p
        self.graph_seed = graph_seed
        m = len(edges_u)
        self.m = m
        self._eu = edges_u
        self._ev = edges_v
        # membership keys: u*n + v with u < v, sorted because edges come
        # out of generation in lexicographic order
        self._keys = edges_u * n + edges_v
        # CSR with deterministic per-vertex order: larger neighbors
        # (ascending) first, then smaller neighbors (ascending)
        deg_hi = np.bincount(edges_u, minlength=n)
        deg_lo = np.bincount(edges_v, minlength=n)
        off = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg_hi + deg_lo, out=off[1:])
        adj = np.empty(2 * m, dtype=np.int32)
        if m:
            starts_hi = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(deg_hi, out=starts_hi[1:])
            ar = np.arange(m, dtype=np.int64)
            adj[off[edges_u] + (ar - starts_hi[edges_u])] = edges_v.astype(np.int32)
            packed = (edges_v << 32) | ar
            packed.sort(kind="stable")
            idx = (packed & 0xFFFFFFFF).astype(np.int64)
            vs = (packed >> 32).astype(np.int64)
            starts_lo = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(deg_lo, out=starts_lo[1:])
            adj[off[vs] + deg_hi[vs] + (ar - starts_lo[vs])] = edges_u[idx].astype(np.int32)
        self._adj = adj
        self._off = off
        # entropy for the oracle-side lazy list shuffle, derived from
        # graph_seed so file round trips replay identically
        self.shuffle_entropy = int(
            np.random.SeedSequence([graph_seed & 0xFFFFFFFFFFFFFFFF, 0x5148]).generate_state(1, np.uint64)[0]
        )

    # -- queries ---------------------------------------------------------

    def degree(self, v: int) -> int:
        return int(self._off[v + 1] - self._off[v])

    def neighbors(self, v: int) -> list[int]:
        """All neighbors of v (deterministic storage order)."""
        return self._adj[self._off[v]:self._off[v + 1]].tolist()

    def has_edge(self, u: int, v: int) -> bool:
        """Edge membership via binary search on the sorted key array."""
        if u == v:
            return False
        if u > v:
            u, v = v, u
        key = u * self.n + v
        i = np.searchsorted(self._keys, key)
        return bool(i < self.m and self._keys[i] == key)

    def has_edges(self, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
        """Vectorized has_edge for verification sweeps."""
        lo = np.minimum(us, vs).astype(np.int64)
        hi = np.maximum(us, vs).astype(np.int64)
        keys = lo * self.n + hi
        idx = np.searchsorted(self._keys, keys)
        idx_c = np.minimum(idx, max(self.m - 1, 0))
        if self.m == 0:
            return np.zeros(len(keys), dtype=bool)
        return (self._keys[idx_c] == keys) & (lo != hi)

    def edges(self) -> np.ndarray:
        """The m edges as an (m, 2) array, u < v, lexicographically sorted."""
        return np.stack([self._eu, self._ev], axis=1)

    # -- persistence -----------------------------------------------------

    def save(self, path: str) -> None:
        """Write the graph file: header line ``n p graph_seed`` then edges."""
        with open(path, "w") as fh:
            fh.write(f"{self.n} {self.p!r} {self.graph_seed}\n")
            out = np.empty(2 * self.m, dtype=np.int64)
            out[0::2] = self._eu
            out[1::2] = self._ev
            body = out.reshape(-1, 2)
            fh.write("\n".join(f"{a} {b}" for a, b in body.tolist()))
            if self.m:
                fh.write("\n")

    @classmethod
    def load(cls, path: str) -> "StoredGraph":
        """Load a graph file; adjacency order is re-derived from graph_seed."""
        with open(path) as fh:
            header = fh.readline().split()
            if len(header) != 3:
                raise InvalidArgumentError(f"{path}: malformed header")
            n = int(header[0])
            p = float(header[1])
            graph_seed = int(header[2])
            rest = fh.read().split()
        if len(rest) % 2:
            raise InvalidArgumentError(f"{path}: odd number of edge tokens")
        arr = np.array([int(t) for t in rest], dtype=np.int64)
        eu, ev = arr[0::2], arr[1::2]
        if np.any(eu >= ev) or np.any(eu < 0) or np.any(ev >= n):
            raise InvalidArgumentError(f"{path}: edge list must satisfy 0 <= u < v < n")
        keys = eu * n + ev
        if np.any(np.diff(keys) <= 0):
            raise InvalidArgumentError(f"{path}: edges must be unique and ascending")
        return cls(n, p, graph_seed, eu, ev)


def generate_graph(n: int, p: float, graph_seed: int) -> StoredGraph:
    """Generate a seeded G(n,p) instance.

    Every unordered pair is an edge independently with probability p; the
    whole construction is deterministic in graph_seed.
    """
    if n < 2:
        raise InvalidArgumentError(f"n must be >= 2, got {n}")
    if not (0.0 <= p <= 1.0):
        raise InvalidArgumentError(f"p must lie in [0, 1], got {p}")
    ss = np.random.SeedSequence([graph_seed & 0xFFFFFFFFFFFFFFFF, 0x4744])
    topo = np.random.Generator(np.random.PCG64(ss))
    eu, ev = _sample_edges(n, p, topo)
    return StoredGraph(n, p, graph_seed, eu, ev)


def bipartition(n: int) -> tuple[range, range, int | None]:
    """Fixed balanced partition: A = first half, B = second half.

    For odd n the last vertex is set aside and excluded from both sides.
    """
    half = n // 2
    set_aside = n - 1 if n % 2 else None
    return range(0, half), range(half, 2 * half), set_aside


def side_of(v: int, n: int) -> str | None:
    """'A', 'B', or None for the odd-n set-aside vertex."""
    half = n // 2
    if v < half:
        return "A"
    if v < 2 * half:
        return "B"
    return None
