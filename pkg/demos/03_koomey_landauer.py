"""When does energy efficiency hit the Landauer bound?

Run:  python demos/03_koomey_landauer.py
"""

import numpy as np

from scalinglaws import anchored_model, crossing_year, extrapolate, koomey_model, landauer_limit

limit = landauer_limit(300)
print(f"Landauer bound at 300 K: {limit.energy_per_bit:.4e} J/bit = {limit.ops_per_kwh:.4e} bit-ops/kWh")

baseline_year, baseline = 2010, 1e15  # computations per kWh, order of magnitude

print("\ncrossing year of the bound, by doubling time and 2010 baseline")
print("doubling   " + "  ".join(f"{b:9.0e}" for b in (1e14, 1e15, 1e16)))
for d in (1.52, 1.57, 2.0, 2.6):
    row = [crossing_year(koomey_model(baseline_year, b, d), limit.ops_per_kwh) for b in (1e14, 1e15, 1e16)]
    print(f"{d:5.2f} y    " + "  ".join(f"{y:9.1f}" for y in row))

# If a "computation" erases c bits rather than one, the target drops by c
# and the crossing moves earlier by doubling_time * log2(c).
for c in (1, 64, 1e4):
    y = crossing_year(koomey_model(baseline_year, baseline, 2.6), limit.ops_per_kwh / c)
    print(f"2.6-year law, {c:>7g} bit erasures per computation: {y:.1f}")

# Same value and same momentum in 2010, different curvature afterwards.
exp = koomey_model(baseline_year, baseline, 2.6)
for kind in ("ratio", "li"):
    sub = anchored_model(kind, baseline_year, baseline, 1 / 2.6)
    print(f"{kind:5} law crosses in {crossing_year(sub, limit.ops_per_kwh):.1f} "
          f"(exponential: {crossing_year(exp, limit.ops_per_kwh):.1f})")

sub = anchored_model("ratio", baseline_year, baseline, 1 / 2.6)
print("\nyear   exponential   ratio law")
for pe, ps in zip(extrapolate(exp, 2010, 2110, 20), extrapolate(sub, 2010, 2110, 20)):
    print(f"{pe.t:.0f}   {pe.value:10.3e}   {ps.value:10.3e}   gap x{pe.value / ps.value:,.1f}")
