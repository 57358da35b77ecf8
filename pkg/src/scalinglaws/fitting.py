"""Least-squares fitting of growth laws in log2 space.

The intercept and slope are always found in closed form. A free epoch
``t0`` is handled by variable projection: an outer 1-D search over ``t0``
where each candidate is scored by the closed-form inner fit.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .basis import BasisKind, ScalingModel, basis_value, u_min
from .errors import (
    DegenerateDesign,
    DomainViolation,
    EmptySearchRange,
    FewerThanTwoPoints,
    ScalingLawError,
)

__all__ = [
    "TimeSeries",
    "FitResult",
    "Fixed",
    "Free",
    "ModelComparison",
    "ResidualReport",
    "aicc",
    "ols_line",
    "fit_fixed",
    "fit_free_epoch",
    "fit",
    "compare_models",
    "residual_report",
]

DEFAULT_EPOCH = 1943.0
GOLDEN_WIDTH = 1e-3
AICC_TIE = 1e-9

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Observations ``(t, y)`` with strictly increasing ``t`` and ``y > 0``.

    ``duplicates`` counts the rows that were merged into an existing year at
    load time; it is informational only.
    """

    t: np.ndarray
    y: np.ndarray
    name: str = ""
    unit: str = ""
    duplicates: int = 0

    def __post_init__(self):
        t = np.array(self.t, dtype=float)
        y = np.array(self.y, dtype=float)
        if t.ndim != 1 or t.shape != y.shape:
            raise ValueError("t and y must be 1-D arrays of equal length")
        if t.size < 2:
            raise FewerThanTwoPoints(f"need at least 2 points, got {t.size}")
        if not np.all(np.isfinite(t)) or not np.all(np.isfinite(y)):
            raise ValueError("t and y must be finite")
        if not np.all(np.diff(t) > 0):
            raise ValueError("t must be strictly increasing")
        if not np.all(y > 0):
            raise ValueError("y must be positive")
        t.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_points(cls, points, name="", unit=""):
        points = list(points)
        return cls([p[0] for p in points], [p[1] for p in points], name=name, unit=unit)

    @property
    def points(self):
        return list(zip(self.t.tolist(), self.y.tolist()))

    @property
    def log2y(self):
        return np.log2(self.y)

    def __len__(self):
        return self.t.size

    def scaled(self, c):
        return TimeSeries(self.t, self.y * c, self.name, self.unit)

    def shifted(self, dt):
        return TimeSeries(self.t + dt, self.y, self.name, self.unit)


@dataclass(frozen=True, eq=False)
class FitResult:
    model: ScalingModel
    residuals_log2: np.ndarray
    rmse_log2: float
    sse_log2: float
    aicc: float
    n: int
    k: int

    @property
    def kind(self):
        return self.model.kind


@dataclass(frozen=True)
class Fixed:
    """Epoch policy: use the given ``t0`` as is."""

    t0: float = DEFAULT_EPOCH


@dataclass(frozen=True)
class Free:
    """Epoch policy: search ``t0`` in ``[lo, hi]``."""

    lo: float
    hi: float


@dataclass
class ModelComparison:
    """Fits ranked by AICc, best first; ``failures`` maps kinds that could
    not be fitted to the reason."""

    ranking: list
    failures: dict = field(default_factory=dict)

    @property
    def best(self):
        return self.ranking[0]

    def __iter__(self):
        return iter(self.ranking)

    def __len__(self):
        return len(self.ranking)


@dataclass(frozen=True)
class ResidualReport:
    max_abs_residual: float
    sign_runs: int
    residuals: tuple


def aicc(sse, n, k):
    """Small-sample corrected AIC for a Gaussian least-squares fit.

    Returns NaN when ``n <= k + 1`` (the correction term is undefined) and
    ``-inf`` for an exact fit.
    """
    if n <= k + 1:
        return math.nan
    if sse <= 0:
        return -math.inf
    return n * math.log(sse / n) + 2 * k + 2 * k * (k + 1) / (n - k - 1)


def ols_line(phi, z):
    """Ordinary least squares for ``z ~ a * phi + b``.

    Returns ``(a, b)``. Raises :class:`DegenerateDesign` when every ``phi``
    is equal.
    """
    phi = np.asarray(phi, dtype=float)
    z = np.asarray(z, dtype=float)
    phi_mean = phi.mean()
    dphi = phi - phi_mean
    sxx = float(dphi @ dphi)
    if sxx == 0.0 or np.all(phi == phi[0]):
        raise DegenerateDesign("all basis values are equal; slope is not identifiable")
    a = float(dphi @ (z - z.mean())) / sxx
    b = float(z.mean() - a * phi_mean)
    return a, b


def _basis_for(series, kind, t0):
    u = series.t - t0
    lo = u_min(kind)
    if not np.all(u >= lo):
        first = float(series.t[np.argmax(~(u >= lo))])
        raise DomainViolation(
            f"year {first:g} gives u = {first - t0:g} < {lo:g} for {kind.value} basis with t0 = {t0:g}"
        )
    return np.asarray(basis_value(kind, u))


def _sse_at(series, kind, t0, z):
    phi = _basis_for(series, kind, t0)
    a, b = ols_line(phi, z)
    r = z - (a * phi + b)
    return float(r @ r)


def _fit(series, kind, t0, k):
    z = series.log2y
    phi = _basis_for(series, kind, t0)
    a, b = ols_line(phi, z)
    resid = z - (a * phi + b)
    resid.flags.writeable = False
    n = len(series)
    sse = float(resid @ resid)
    return FitResult(
        model=ScalingModel(kind, a, b, t0),
        residuals_log2=resid,
        rmse_log2=math.sqrt(sse / n),
        sse_log2=sse,
        aicc=aicc(sse, n, k),
        n=n,
        k=k,
    )


def fit_fixed(series, kind, t0=DEFAULT_EPOCH):
    """Fit slope and intercept with the epoch held at ``t0``."""
    return _fit(series, BasisKind.parse(kind), float(t0), k=2)


def _tie_tol(best):
    return 1e-12 * max(1.0, abs(best))


def fit_free_epoch(series, kind, t0_lo, t0_hi):
    """Fit slope, intercept and epoch.

    The epoch is scanned on a 1-year grid from ``t0_lo`` (plus ``t0_hi``
    itself), then refined by golden-section search inside the two grid
    cells around the best grid point until the bracket is narrower than
    1e-3 year. The reported epoch is the best candidate evaluated; near-ties
    go to the smaller ``t0``, so for EXP (where ``t0`` only moves the
    intercept) the answer is ``t0_lo``.
    """
    kind = BasisKind.parse(kind)
    lo, hi = float(t0_lo), float(t0_hi)
    if not lo < hi:
        raise EmptySearchRange(f"epoch search range [{lo:g}, {hi:g}] is empty or inverted")
    cap = float(series.t[0]) - u_min(kind)
    if hi > cap:
        raise EmptySearchRange(
            f"upper epoch bound {hi:g} exceeds {cap:g}, the latest epoch admissible for "
            f"the first observation under the {kind.value} basis"
        )
    z = series.log2y

    grid = [lo + i for i in range(int(math.floor(hi - lo)) + 1)]
    if grid[-1] < hi:
        grid.append(hi)
    sses = [_sse_at(series, kind, g, z) for g in grid]

    best_i = 0
    for i in range(1, len(grid)):
        if sses[i] < sses[best_i] - _tie_tol(sses[best_i]):
            best_i = i
    best_t0, best_sse = grid[best_i], sses[best_i]

    def consider(t, s):
        nonlocal best_t0, best_sse
        if s < best_sse - _tie_tol(best_sse) or (abs(s - best_sse) <= _tie_tol(best_sse) and t < best_t0):
            best_t0, best_sse = t, s

    a = grid[max(best_i - 1, 0)]
    b = grid[min(best_i + 1, len(grid) - 1)]
    if b > a:
        c = b - _INVPHI * (b - a)
        d = a + _INVPHI * (b - a)
        fc = _sse_at(series, kind, c, z)
        fd = _sse_at(series, kind, d, z)
        consider(c, fc)
        consider(d, fd)
        while b - a > GOLDEN_WIDTH:
            if fc <= fd:
                b, d, fd = d, c, fc
                c = b - _INVPHI * (b - a)
                fc = _sse_at(series, kind, c, z)
                consider(c, fc)
            else:
                a, c, fc = c, d, fd
                d = a + _INVPHI * (b - a)
                fd = _sse_at(series, kind, d, z)
                consider(d, fd)

    return _fit(series, kind, best_t0, k=3)


def fit(series, kind, epoch=Fixed()):
    """Dispatch on an epoch policy (:class:`Fixed` or :class:`Free`)."""
    if isinstance(epoch, Free):
        return fit_free_epoch(series, kind, epoch.lo, epoch.hi)
    if isinstance(epoch, Fixed):
        return fit_fixed(series, kind, epoch.t0)
    return fit_fixed(series, kind, float(epoch))


def _rank_cmp(x, y):
    (fx, ix), (fy, iy) = x, y
    ax = math.inf if math.isnan(fx.aicc) else fx.aicc
    ay = math.inf if math.isnan(fy.aicc) else fy.aicc
    if not (ax == ay or abs(ax - ay) < AICC_TIE):
        return -1 if ax < ay else 1
    if fx.k != fy.k:
        return -1 if fx.k < fy.k else 1
    return -1 if ix < iy else (1 if ix > iy else 0)


def compare_models(series, kinds, epoch=Fixed()):
    """Fit every kind under ``epoch`` and rank by AICc.

    Kinds that fail to fit are left out of the ranking and reported in
    ``failures``; if all of them fail, the first failure is raised.
    """
    kinds = [BasisKind.parse(k) for k in kinds]
    if not kinds:
        raise ValueError("no basis kinds given")
    fitted, failures, first_error = [], {}, None
    for i, kind in enumerate(kinds):
        try:
            fitted.append((fit(series, kind, epoch), i))
        except ScalingLawError as exc:
            failures[kind] = str(exc)
            first_error = first_error or exc
    if not fitted:
        raise first_error
    fitted.sort(key=functools.cmp_to_key(_rank_cmp))
    return ModelComparison([f for f, _ in fitted], failures)


def residual_report(result):
    r = np.asarray(result.residuals_log2, dtype=float)
    signs = np.sign(r[r != 0])
    runs = 0 if signs.size == 0 else 1 + int(np.count_nonzero(signs[1:] != signs[:-1]))
    max_abs = float(np.max(np.abs(r))) if r.size else 0.0
    return ResidualReport(max_abs, runs, tuple(r.tolist()))
