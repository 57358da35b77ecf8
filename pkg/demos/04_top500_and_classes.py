"""Aggregating supercomputer lists, efficiency ratios and class bands.

Run:  python demos/04_top500_and_classes.py
"""

from pathlib import Path

from scalinglaws import (
    aggregate_sum,
    annual_improvement,
    class_summaries,
    efficiency_series,
    lifecycle_check,
    load_labeled,
    read_table,
)

fixtures = Path(__file__).resolve().parents[1] / "tests" / "fixtures"

with open(fixtures / "top10_like.csv") as fh:
    table = read_table(fh)
perf = aggregate_sum(table, "rmax", unit="TFlop/s")
power = aggregate_sum(table, "power", unit="kW")
eff = efficiency_series(perf, power)
print(f"{len(table.rows)} list rows -> {len(perf)} yearly totals")
for t, p, w, e in zip(perf.t, perf.y, power.y, eff.y):
    print(f"  {t:.0f}: {p:10.1f} TFlop/s  {w:9.1f} kW  {e:.3f} {eff.unit}")
for t_mid, ratio in annual_improvement(eff):
    print(f"  efficiency gain around {t_mid}: x{ratio:.3f} per year")

with open(fixtures / "classes_bands.csv") as fh:
    points = load_labeled(fh)
summaries = class_summaries(points)
flags = {f.label: f.inside for f in lifecycle_check(summaries)}
print("\nclass   years       span  median power (W)   cv     10-15 y life")
for s in summaries:
    print(f"{s.label:6}  {s.t_start:.0f}-{s.t_end:.0f}  {s.span_years:4.0f}  {s.median_value:16.1f}  "
          f"{s.cv:.3f}  {'yes' if flags[s.label] else 'no'}")
