"""Generate one random graph, find a Hamilton cycle, and verify it.

Run:  python demos/01_solve_and_verify.py
"""
import math

from fasthamilton import (PhaseFailureError, find_hamilton_cycle,
                          generate_graph, verify_hamilton_cycle)

n = 4096
p = min(1.0, 200 * math.log(n) / n)
print(f"generating G(n={n}, p={p:.4f}) ...")
graph = generate_graph(n, p, graph_seed=1)
print(f"  {graph.m} edges stored (the solver will query only a few per vertex)")

for attempt in range(5):
    try:
        cycle, stats = find_hamilton_cycle(graph, algo_seed=100 + attempt)
        break
    except PhaseFailureError as exc:
        print(f"  attempt {attempt}: gave up in phase {exc.phase}, retrying")
else:
    raise SystemExit("no luck in 5 attempts")

ok, reason = verify_hamilton_cycle(graph, cycle.order)
print(f"verified: {ok}" + (f" ({reason})" if not ok else ""))
print(f"oracle calls: {stats.oracle_calls_total}"
      f"  ({stats.oracle_calls_total / n:.2f} per vertex)")
print(f"  phase 1 (two matchings): {stats.phase1_calls}")
print(f"  phase 2 (stitching):     {stats.phase2_calls}"
      f"  with {stats.phase2_rotations} rotations"
      f" over {stats.cycles_in_cover} cover cycles")
