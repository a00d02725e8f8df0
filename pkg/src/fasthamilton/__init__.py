"""Hamilton cycles in Erdos-Renyi random graphs in linear time.

Two-phase randomized algorithm: two fast perfect matchings form a cycle
cover, which is then stitched into a single Hamilton cycle with long
rotations.  Works against a per-call adjacency oracle so the total number
of edge queries stays O(n) even when the graph has ~n log n edges.
"""

from .baseline import baseline_angluin_valiant
from .bench import (BenchConfig, ScalingReport, fit_loglog_slope, p_for,
                    scaling_benchmark)
from .errors import (BudgetExceededError, FastHamiltonError,
                     InvalidArgumentError, OracleExhaustedError,
                     PhaseFailureError)
from .graphgen import StoredGraph, bipartition, generate_graph, side_of
from .matching import Matching, d_schedule, fast_perfect_matching
from .oracle import NeighborOracle, QueryBudget
from .pathseq import PathSeq
from .runstats import RunStats, STATS_SCHEMA
from .stitch import (CycleCover, HamiltonCycle, cycle_cover,
                     find_hamilton_cycle)
from .verify import (ExpansionReport, brute_force_hamilton, check_expansion,
                     nb_tail_threshold, verify_hamilton_cycle)

__version__ = "0.1.0"

__all__ = [
    "BenchConfig",
    "BudgetExceededError",
    "CycleCover",
    "ExpansionReport",
    "FastHamiltonError",
    "HamiltonCycle",
    "InvalidArgumentError",
    "Matching",
    "NeighborOracle",
    "OracleExhaustedError",
    "PathSeq",
    "PhaseFailureError",
    "QueryBudget",
    "RunStats",
    "STATS_SCHEMA",
    "ScalingReport",
    "StoredGraph",
    "baseline_angluin_valiant",
    "bipartition",
    "brute_force_hamilton",
    "check_expansion",
    "cycle_cover",
    "d_schedule",
    "fast_perfect_matching",
    "find_hamilton_cycle",
    "fit_loglog_slope",
    "generate_graph",
    "nb_tail_threshold",
    "p_for",
    "scaling_benchmark",
    "side_of",
    "verify_hamilton_cycle",
    "__version__",
]
