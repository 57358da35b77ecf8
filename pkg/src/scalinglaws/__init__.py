"""Fit, compare and extrapolate technology scaling laws.

The central idea is a sub-exponential alternative to Moore's law: the
logarithm of a technology metric grows like ``t / ln t`` (or the
logarithmic integral) of the years since an epoch, instead of linearly.
"""

__version__ = "0.1.0"

from .basis import (
    BasisKind,
    ScalingModel,
    amdahl_speedup,
    annual_improvement_ratio,
    basis_slope,
    basis_value,
    doubling_time,
    growth_rate,
    li_offset,
    model_log2,
    model_value,
    parallel_speedup_model,
    pollack_performance_ratio,
    u_min,
)
from .classes import ClassSummary, class_summaries, lifecycle_check, load_labeled
from .fitting import (
    FitResult,
    Fixed,
    Free,
    TimeSeries,
    compare_models,
    fit_fixed,
    fit_free_epoch,
    residual_report,
)
from .forecast import (
    PhysicalLimit,
    anchored_model,
    crossing_year,
    doubling_time_curve,
    extrapolate,
    koomey_model,
    landauer_limit,
)
from .ingest import (
    aggregate_sum,
    annual_improvement,
    density_series,
    efficiency_series,
    load_series,
    read_table,
    write_series,
)
