"""Measure how oracle calls per vertex scale with n for both algorithms.

The main solver's calls-per-vertex stays flat (linear total cost); the
random-walk baseline grows like log n.

Run:  python demos/02_scaling.py          (takes a couple of minutes)
"""
from fasthamilton import BenchConfig, scaling_benchmark

ns = [1024, 2048, 4096, 8192]

for algorithm in ("main", "baseline"):
    cfg = BenchConfig(ns=ns, seeds_per_n=5, C=200.0, master_seed=7,
                      algorithm=algorithm)
    report = scaling_benchmark(cfg)
    print(f"\n{algorithm}: log-log slope of mean calls vs n ="
          f" {report.slope:.3f} ± {report.slope_ci:.3f}"
          f"  ({report.failures} failed runs)")
    for row in report.aggregates:
        print(f"  n={row['n']:>6}  mean calls/n = "
              f"{row['mean_oracle_calls'] / row['n']:.2f}")
