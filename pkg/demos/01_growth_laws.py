"""Exponential versus sub-exponential growth, side by side.

Run:  python demos/01_growth_laws.py
"""

import numpy as np

from scalinglaws import (
    amdahl_speedup,
    anchored_model,
    annual_improvement_ratio,
    doubling_time,
    parallel_speedup_model,
    pollack_performance_ratio,
)

# Two laws that agree in 1965: same value, same growth rate.
# The sub-exponential one uses log2 y = a * u/ln u + b with u = year - 1943.
# A two-year doubling in 1965 for both.
moore = anchored_model("exp", 1965, 64.0, 0.5)
ratio_law = anchored_model("ratio", 1965, 64.0, 0.5, t0=1943)

print("year   doubling time (y)      annual ratio")
print("        exp     ratio          exp     ratio")
for year in (1965, 1975, 1990, 2005, 2020, 2040):
    print(f"{year}  {doubling_time(moore, year):6.2f}  {doubling_time(ratio_law, year):6.2f}"
          f"       {annual_improvement_ratio(moore, year):.4f}  {annual_improvement_ratio(ratio_law, year):.4f}")

# The ratio law's doubling time keeps stretching; the exponential's never moves.
years = np.arange(1965, 2101)
dts = doubling_time(ratio_law, years)
print(f"\nratio-law doubling time: {dts[0]:.2f} y in 1965 -> {dts[-1]:.2f} y in 2100")

# Where the old per-generation doubling came from: ~40% frequency and
# sqrt(2) from twice the transistors.
print(f"\nper-generation speedup, 1.4x clock and 2x transistors: {pollack_performance_ratio(2.0, 1.4):.4f}")
print(f"same transistors, no clock gain:                        {pollack_performance_ratio(2.0, 1.0):.4f}")

# Multicore does not rescue it for free.
print("\nspeedup on 1024 processors")
for p in (0.5, 0.9, 0.99, 1.0):
    print(f"  Amdahl, parallel fraction {p:4}: {amdahl_speedup(p, 1024):8.1f}")
print(f"  prefix sum (n / log2 n):         {parallel_speedup_model('prefix_sum', 1024):8.1f}")
print(f"  merge sort (n / log2^2 n):       {parallel_speedup_model('merge_sort', 1024):8.2f}")
