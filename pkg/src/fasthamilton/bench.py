"""Scaling benchmark harness: query counts vs n, slope fits, exports.

Query count is the primary linearity metric (machine independent); wall
time is reported secondarily.  Graph generation is excluded from the
algorithm timing because generation is Theta(m), not Theta(n).
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .baseline import baseline_angluin_valiant
from .errors import InvalidArgumentError, PhaseFailureError
from .graphgen import generate_graph
from .oracle import QueryBudget
from .runstats import RunStats
from .stitch import find_hamilton_cycle

__all__ = ["BenchConfig", "ScalingReport", "scaling_benchmark",
           "derive_seed_pair", "fit_loglog_slope",
           "write_ndjson", "write_summary", "write_csv"]


@dataclass
class BenchConfig:
    """Deterministic benchmark grid; the seed grid is fixed by master_seed."""

    ns: list[int]
    seeds_per_n: int
    C: float = 200.0  # p = min(1, C ln n / n)
    master_seed: int = 0
    algorithm: str = "main"  # "main" | "baseline"
    workers: int = 1
    budget: QueryBudget | None = None


@dataclass
class ScalingReport:
    records: list[dict] = field(default_factory=list)
    aggregates: list[dict] = field(default_factory=list)  # one row per n
    slope: float = math.nan
    slope_ci: float = math.nan  # half-width, ~95%
    failures: int = 0

    def summary(self) -> dict:
        return {
            "slope": self.slope,
            "slope_ci": self.slope_ci,
            "failures": self.failures,
            "aggregates": self.aggregates,
        }


def derive_seed_pair(master_seed: int, n: int, index: int) -> tuple[int, int]:
    """Stable (graph_seed, algo_seed) for one grid cell."""
    state = np.random.SeedSequence([master_seed, n, index]).generate_state(2, np.uint64)
    return int(state[0]), int(state[1])


def p_for(n: int, C: float) -> float:
    return min(1.0, C * math.log(n) / n)


def _run_one(args) -> dict:
    n, C, graph_seed, algo_seed, algorithm, budget = args
    graph = generate_graph(n, p_for(n, C), graph_seed)
    try:
        if algorithm == "baseline":
            _, stats = baseline_angluin_valiant(graph, algo_seed)
        else:
            _, stats = find_hamilton_cycle(graph, algo_seed, budget=budget)
    except PhaseFailureError as exc:
        stats = exc.stats
    return stats.to_dict()


def fit_loglog_slope(ns, means) -> tuple[float, float]:
    """Least-squares slope of log(mean) vs log(n) with a ~95% half-width."""
    if len(ns) < 2:
        return math.nan, math.nan
    x = np.log(np.asarray(ns, dtype=float))
    y = np.log(np.asarray(means, dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    dof = len(x) - 2
    if dof <= 0:
        return float(slope), 0.0
    se = math.sqrt(float(resid @ resid) / dof / float(((x - x.mean()) ** 2).sum()))
    return float(slope), 2.0 * se


def scaling_benchmark(config: BenchConfig) -> ScalingReport:
    """Run the grid, aggregate per n, and fit the query-count slope.

    Individual run failures are recorded in the report, never fatal.
    Requires >= 4 grid points and >= 20 seeds per point for the slope fit
    to be considered meaningful (the fit is still computed otherwise, with
    a NaN confidence interval below 2 points).
    """
    if not config.ns or config.seeds_per_n < 1:
        raise InvalidArgumentError("benchmark grid must be nonempty")
    jobs = [(n, config.C, *derive_seed_pair(config.master_seed, n, i),
             config.algorithm, config.budget)
            for n in config.ns for i in range(config.seeds_per_n)]
    report = ScalingReport()
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            report.records = list(pool.map(_run_one, jobs, chunksize=1))
    else:
        report.records = [_run_one(j) for j in jobs]

    means = []
    for n in config.ns:
        rows = [r for r in report.records if r["n"] == n]
        succ = [r for r in rows if r["outcome"] == "success"]
        report.failures += len(rows) - len(succ)
        calls = [r["oracle_calls_total"] for r in succ] or [math.nan]
        report.aggregates.append({
            "n": n,
            "runs": len(rows),
            "successes": len(succ),
            "mean_oracle_calls": float(np.mean(calls)),
            "max_oracle_calls": float(np.max(calls)),
            "mean_calls_per_vertex_max": float(np.mean(
                [r["oracle_calls_max_per_vertex"] for r in succ] or [math.nan])),
            "mean_cycles_in_cover": float(np.mean(
                [r["cycles_in_cover"] for r in succ] or [math.nan])),
            "mean_rotations": float(np.mean(
                [r["phase2_rotations"] for r in succ] or [math.nan])),
            "mean_wall_time": float(np.mean(
                [r["time_phase1"] + r["time_phase2"] for r in succ] or [math.nan])),
        })
        means.append(float(np.mean(calls)))
    report.slope, report.slope_ci = fit_loglog_slope(config.ns, means)
    return report


def write_ndjson(report: ScalingReport, path: str) -> None:
    """One JSON record per run; byte-identical across reruns.

    Wall-clock fields are omitted here (they are the one non-deterministic
    part of RunStats); timing aggregates live in the summary/CSV exports.
    """
    with open(path, "w") as fh:
        for rec in report.records:
            row = {k: v for k, v in rec.items()
                   if k not in ("time_phase1", "time_phase2")}
            fh.write(json.dumps(row, sort_keys=True) + "\n")


def write_summary(report: ScalingReport, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(report.summary(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_csv(report: ScalingReport, path: str) -> None:
    if not report.aggregates:
        return
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(report.aggregates[0]))
        writer.writeheader()
        writer.writerows(report.aggregates)
