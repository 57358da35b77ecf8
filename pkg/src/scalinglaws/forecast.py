"""Extrapolation, doubling-time curves and physical-limit crossings."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import (
    BasisKind,
    ScalingModel,
    basis_slope,
    basis_value,
    doubling_time,
    model_log2,
    u_min,
)
from .errors import AlreadyExceeded, DomainError, NonIncreasingModel, NonPositiveStep

__all__ = [
    "BOLTZMANN",
    "J_PER_KWH",
    "ForecastPoint",
    "PhysicalLimit",
    "extrapolate",
    "doubling_time_curve",
    "landauer_limit",
    "crossing_year",
    "koomey_model",
    "anchored_model",
]

BOLTZMANN = 1.380649e-23  # J/K, exact in SI since 2019
J_PER_KWH = 3.6e6
DEFAULT_TEMPERATURE = 300.0
CROSSING_TOL_YEARS = 1e-6
_CROSSING_TOL_LOG2 = 1e-10


@dataclass(frozen=True)
class ForecastPoint:
    t: float
    log2_value: float
    value: float


@dataclass(frozen=True)
class PhysicalLimit:
    """Landauer bound at ``temperature`` kelvin, one bit erased per operation."""

    temperature: float
    energy_per_bit: float
    ops_per_joule: float
    ops_per_kwh: float

    def to_dict(self):
        return {
            "temperature": self.temperature,
            "energy_per_bit": self.energy_per_bit,
            "ops_per_joule": self.ops_per_joule,
            "ops_per_kwh": self.ops_per_kwh,
        }


def _grid(t_start, t_end, step):
    if not step > 0:
        raise NonPositiveStep(f"step must be positive, got {step!r}")
    if not t_start < t_end:
        raise DomainError(f"t_start ({t_start!r}) must precede t_end ({t_end!r})")
    # small slack so that e.g. 2001 + 2*1 is not lost to rounding of (t_end - t_start)/step
    count = int(math.floor((t_end - t_start) / step + 1e-9)) + 1
    return t_start + step * np.arange(count, dtype=float)


def extrapolate(model, t_start, t_end, step=1.0):
    """Model values at ``t_start, t_start + step, ...`` up to ``t_end``."""
    ts = _grid(float(t_start), float(t_end), float(step))
    logs = np.asarray(model_log2(model, ts))
    return [ForecastPoint(float(t), float(lv), float(np.exp2(lv))) for t, lv in zip(ts, logs)]


def doubling_time_curve(model, t_start, t_end, step=1.0):
    ts = _grid(float(t_start), float(t_end), float(step))
    dts = np.asarray(doubling_time(model, ts))
    return list(zip(ts.tolist(), dts.tolist()))


def landauer_limit(temperature=DEFAULT_TEMPERATURE):
    """Minimum energy to erase one bit, ``k_B T ln 2``, and the matching
    efficiency ceilings."""
    if not temperature > 0:
        raise DomainError(f"temperature must be positive, got {temperature!r}")
    e = BOLTZMANN * temperature * math.log(2.0)
    per_joule = 1.0 / e
    return PhysicalLimit(float(temperature), e, per_joule, J_PER_KWH * per_joule)


def crossing_year(model, target):
    """Year at which the model value reaches ``target``.

    The root is bracketed by doubling a horizon outward from the model's
    earliest admissible year (EXP models, which have none, start from
    ``t0`` and may search backward) and then bisected until the bracket is
    within 1e-6 year and the log2 mismatch is negligible.

    Raises:
        NonIncreasingModel: slope ``a <= 0``.
        AlreadyExceeded: the model is above ``target`` already at its
            earliest admissible year.
    """
    if not model.a > 0:
        raise NonIncreasingModel(f"slope a={model.a!r}; the model never rises")
    if not target > 0:
        raise DomainError(f"target must be positive, got {target!r}")
    goal = math.log2(target)

    def f(t):
        return model_log2(model, t) - goal

    if model.kind is BasisKind.EXP:
        anchor = model.t0
        f_anchor = f(anchor)
        if f_anchor == 0.0:
            return anchor
        direction = 1.0 if f_anchor < 0 else -1.0
    else:
        anchor = model.t_min
        f_anchor = f(anchor)
        if abs(f_anchor) <= _CROSSING_TOL_LOG2:
            return anchor
        if f_anchor > 0:
            raise AlreadyExceeded(
                f"model value at its earliest admissible year {anchor:g} already exceeds {target:g}"
            )
        direction = 1.0

    horizon = 1.0
    far = anchor + direction * horizon
    while (f(far) < 0) == (direction > 0):
        horizon *= 2.0
        if horizon > 1e12:
            raise NonIncreasingModel("no crossing found within 1e12 years")
        far = anchor + direction * horizon
    lo, hi = (anchor, far) if direction > 0 else (far, anchor)

    for _ in range(400):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if hi - lo <= CROSSING_TOL_YEARS and abs(fm) <= _CROSSING_TOL_LOG2:
            return mid
        if mid in (lo, hi):
            return mid
        if fm < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def koomey_model(baseline_year, baseline_efficiency, doubling_years):
    """Exponential efficiency law doubling every ``doubling_years``."""
    if not doubling_years > 0:
        raise DomainError(f"doubling time must be positive, got {doubling_years!r}")
    if not baseline_efficiency > 0:
        raise DomainError(f"baseline efficiency must be positive, got {baseline_efficiency!r}")
    return ScalingModel(
        BasisKind.EXP, 1.0 / doubling_years, math.log2(baseline_efficiency), baseline_year
    )


def anchored_model(kind, anchor_year, anchor_value, rate, t0=1943.0):
    """Model of ``kind`` through ``(anchor_year, anchor_value)`` whose growth
    rate at the anchor is ``rate`` doublings per year.

    Used to compare laws on equal footing: same value and same momentum
    today, different futures.
    """
    kind = BasisKind.parse(kind)
    if kind is BasisKind.EXP:
        t0 = anchor_year
    u = anchor_year - t0
    if u < u_min(kind):
        raise DomainError(f"anchor year {anchor_year:g} is not admissible with t0 = {t0:g}")
    a = rate / basis_slope(kind, u)
    b = math.log2(anchor_value) - a * basis_value(kind, u)
    return ScalingModel(kind, a, b, t0)
