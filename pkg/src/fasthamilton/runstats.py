"""Per-run accounting shared by the solver, the baseline and the benchmarks."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

__all__ = ["RunStats"]

STATS_SCHEMA = 1


@dataclass
class RunStats:
    """Counters and timings for one solver run.

    oracle_calls_total covers both phases; phase1_calls + phase2_calls
    always equals it for completed (or cleanly failed) runs.
    """

    n: int = 0
    p: float = 0.0
    graph_seed: int | None = None
    algo_seed: int | None = None
    outcome: str = "pending"  # "success" | "failure"
    failure_phase: str | None = None
    oracle_calls_total: int = 0
    oracle_calls_max_per_vertex: int = 0
    phase1_calls: int = 0
    phase2_calls: int = 0
    phase2_rotations: int = 0
    cycles_in_cover: int = 0
    matching_walk_steps: int = 0
    exposed_edges_per_matching: list[int] = field(default_factory=list)
    time_phase1: float = 0.0
    time_phase2: float = 0.0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["schema"] = STATS_SCHEMA
        return d
