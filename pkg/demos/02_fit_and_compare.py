"""Fitting growth laws to a series and choosing between them.

Run:  python demos/02_fit_and_compare.py
"""

from pathlib import Path

from scalinglaws import Free, compare_models, fit_free_epoch, load_series, residual_report

data = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "ratio_synthetic.csv"
with open(data) as fh:
    series = load_series(fh)
print(f"{len(series)} points, {series.t[0]:.0f}-{series.t[-1]:.0f}")

# All four laws with the epoch fixed at 1943, ranked by AICc.
ranking = compare_models(series, ["exp", "ratio", "li", "log"])
print("\nkind    a          b          rmse(log2)  AICc")
for r in ranking:
    m = r.model
    print(f"{m.kind.value:6}  {m.a:9.5f}  {m.b:9.4f}  {r.rmse_log2:10.4f}  {r.aicc:8.2f}")

# Residual structure tells the same story: long same-sign runs mean the
# curve shape is wrong, not just noisy.
for r in ranking:
    rep = residual_report(r)
    print(f"{r.kind.value:6} max|resid| {rep.max_abs_residual:.3f}  sign runs {rep.sign_runs}")

# Let the epoch float instead of pinning it to 1943.
free = fit_free_epoch(series, "ratio", 1900, 1960)
print(f"\nfree epoch: t0 = {free.model.t0:.3f}, a = {free.model.a:.4f}, AICc = {free.aicc:.2f} (k = 3)")
print("ranking with free epochs:", [r.kind.value for r in compare_models(series, ["exp", "ratio"], Free(1900, 1960))])
