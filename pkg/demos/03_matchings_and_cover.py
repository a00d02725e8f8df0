"""Look inside phase 1: two random perfect matchings and their cycle cover.

Each matching is built in O(n) expected oracle calls by short augmenting
random walks.  Superimposing two independent matchings on the same
bipartition yields a disjoint union of even cycles — typically only
O(log n) of them, which is what makes the stitching phase cheap.

Run:  python demos/03_matchings_and_cover.py
"""
import math

from fasthamilton import (NeighborOracle, bipartition, cycle_cover,
                          fast_perfect_matching, generate_graph)

n = 2048
p = min(1.0, 200 * math.log(n) / n)
graph = generate_graph(n, p, graph_seed=3)
A, B, set_aside = bipartition(n)

oracle = NeighborOracle(graph, algo_seed=5)

M1 = fast_perfect_matching(oracle, A, B)
calls_m1 = oracle.total_calls
# fresh randomness for the second matching: same graph, exposure reset
oracle.reset_exposure()
M2 = fast_perfect_matching(oracle, A, B)

print(f"matching 1: {calls_m1} oracle calls"
      f"  ({calls_m1 / len(A):.2f} per matched pair)")
print(f"matching 2: {oracle.total_calls - calls_m1} oracle calls")

cover = cycle_cover(M1, M2, set_aside)
lengths = sorted((len(c) for c in cover.cycles), reverse=True)
print(f"cycle cover: {len(lengths)} cycles over {sum(lengths)} vertices")
print(f"  lengths: {lengths}")
print(f"  (O(log n) cycles in expectation; ln(n/2) ≈ {math.log(n / 2):.1f})")
