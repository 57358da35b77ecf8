"""Growth-law basis functions and model evaluation.

Every law is expressed in log2 space as

    log2 y(t) = a * phi(t - t0) + b

where ``phi`` depends on the :class:`BasisKind`:

======  ==============  =============================
kind    phi(u)          minimum admissible u
======  ==============  =============================
EXP     u               none
RATIO   u / ln u        3.0 (u/ln u falls on (1, e))
LI      Li(u)           2.0
LOG     ln u            2.0
======  ==============  =============================

``Li`` is the offset logarithmic integral, ``Li(x) = int_2^x dt / ln t``.
Using it instead of ``li`` only moves a constant (li(2) ~ 1.0452) into the
intercept ``b``.
"""

from __future__ import annotations

import bisect
import enum
import math
import threading
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NonPositiveGrowth

__all__ = [
    "BasisKind",
    "ScalingModel",
    "u_min",
    "li_offset",
    "li_offset_array",
    "basis_value",
    "basis_slope",
    "model_log2",
    "model_value",
    "growth_rate",
    "doubling_time",
    "annual_improvement_ratio",
    "amdahl_speedup",
    "pollack_performance_ratio",
    "parallel_speedup_model",
]

_SIMPSON_MAX_DEPTH = 60


class BasisKind(enum.Enum):
    EXP = "exp"
    RATIO = "ratio"
    LI = "li"
    LOG = "log"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            known = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown basis kind {name!r} (expected one of {known})") from None


_U_MIN = {
    BasisKind.EXP: -math.inf,
    BasisKind.RATIO: 3.0,
    BasisKind.LI: 2.0,
    BasisKind.LOG: 2.0,
}


def u_min(kind):
    """Smallest admissible basis argument; ``-inf`` for EXP."""
    return _U_MIN[BasisKind.parse(kind)]


@dataclass(frozen=True)
class ScalingModel:
    """A fitted or hand-built growth law.

    Attributes:
        kind: basis family.
        a: slope in doublings per basis unit.
        b: intercept in log2 units.
        t0: epoch year subtracted from calendar time before applying the basis.
    """

    kind: BasisKind
    a: float
    b: float
    t0: float

    def __post_init__(self):
        object.__setattr__(self, "kind", BasisKind.parse(self.kind))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "t0", float(self.t0))

    @property
    def t_min(self):
        """Earliest calendar year at which the model can be evaluated."""
        return self.t0 + u_min(self.kind)

    def to_dict(self):
        return {"kind": self.kind.value, "a": self.a, "b": self.b, "t0": self.t0}

    @classmethod
    def from_dict(cls, d):
        return cls(BasisKind.parse(d["kind"]), d["a"], d["b"], d["t0"])


# -- logarithmic integral ----------------------------------------------------

def _inv_log(t):
    return 1.0 / math.log(t)


def _simpson(f, a, fa, b, fb):
    m = 0.5 * (a + b)
    fm = f(m)
    return m, fm, (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive_simpson(f, a, b, tol):
    """Integrate ``f`` over [a, b] to absolute tolerance ``tol``.

    Iterative adaptive Simpson with Richardson correction; intervals that hit
    the depth cap are accepted as they are.
    """
    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m, fm, whole = _simpson(f, a, fa, b, fb)
    total = 0.0
    stack = [(a, fa, m, fm, b, fb, whole, tol, 0)]
    while stack:
        a, fa, m, fm, b, fb, whole, tol, depth = stack.pop()
        lm, flm, left = _simpson(f, a, fa, m, fm)
        rm, frm, right = _simpson(f, m, fm, b, fb)
        delta = left + right - whole
        if depth >= _SIMPSON_MAX_DEPTH or abs(delta) <= 15.0 * tol:
            total += left + right + delta / 15.0
        else:
            stack.append((m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1))
            stack.append((a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1))
    return total


class _LiPanels:
    """Cumulative integrals of 1/ln t between fixed knots, grown on demand.

    Knots are the integers 2..32, then integers spaced about k/16 apart, so
    reaching u = 1e6 takes ~200 panels. Because the knots never depend on
    the query, Li(x) is a pure function of x.
    """

    panel_tol = 1e-13

    def __init__(self):
        self.knots = [2.0]
        self.cum = [0.0]
        self._lock = threading.Lock()

    def extend_to(self, x):
        if self.knots[-1] > x:
            return
        with self._lock:
            while self.knots[-1] <= x:
                k = self.knots[-1]
                nxt = k + max(1.0, math.floor(k / 16.0))
                self.cum.append(self.cum[-1] + _adaptive_simpson(_inv_log, k, nxt, self.panel_tol))
                self.knots.append(nxt)

    def __call__(self, x):
        self.extend_to(x)
        i = bisect.bisect_right(self.knots, x) - 1
        return self.cum[i] + _adaptive_simpson(_inv_log, self.knots[i], x, _REMAINDER_TOL)


_REMAINDER_TOL = 1e-12
_li_panels = _LiPanels()


def li_offset(x):
    """Offset logarithmic integral ``Li(x) = int_2^x dt / ln t``.

    Absolute error stays below 1e-10 for x up to ~1e6.

    Raises:
        DomainError: if ``x < 2``.
    """
    x = float(x)
    if not x >= 2.0:
        raise DomainError(f"li_offset requires x >= 2, got {x!r}")
    if not math.isfinite(x):
        raise DomainError("li_offset requires a finite argument")
    return _li_panels(x)


def li_offset_array(x):
    """Elementwise :func:`li_offset`."""
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        return x.copy()
    if not np.all(x >= 2.0):
        raise DomainError(f"li_offset requires x >= 2, got min {np.nanmin(x)!r}")
    knots, inverse = np.unique(x, return_inverse=True)
    values = np.array([li_offset(k) for k in knots])
    return values[inverse].reshape(x.shape)


# -- basis table -------------------------------------------------------------

def _check_domain(kind, u):
    lo = _U_MIN[kind]
    if not np.all(u >= lo):
        bad = float(np.min(u))
        raise DomainError(f"{kind.value} basis requires u >= {lo}, got {bad!r}")


def _finish(u_in, out):
    return float(out) if np.ndim(u_in) == 0 else out


def basis_value(kind, u):
    """phi(u) for the given basis kind; accepts scalars or arrays."""
    kind = BasisKind.parse(kind)
    arr = np.asarray(u, dtype=float)
    _check_domain(kind, arr)
    if kind is BasisKind.EXP:
        out = arr.copy()
    elif kind is BasisKind.RATIO:
        out = arr / np.log(arr)
    elif kind is BasisKind.LI:
        out = li_offset_array(arr)
    else:
        out = np.log(arr)
    return _finish(u, out)


def basis_slope(kind, u):
    """d phi / du; strictly positive on the admissible domain."""
    kind = BasisKind.parse(kind)
    arr = np.asarray(u, dtype=float)
    _check_domain(kind, arr)
    if kind is BasisKind.EXP:
        out = np.ones_like(arr)
    elif kind is BasisKind.RATIO:
        ln = np.log(arr)
        out = (ln - 1.0) / ln**2
    elif kind is BasisKind.LI:
        out = 1.0 / np.log(arr)
    else:
        out = 1.0 / arr
    return _finish(u, out)


# -- model evaluation --------------------------------------------------------

def model_log2(model, t):
    """Predicted log2 value at calendar time ``t``."""
    u = np.asarray(t, dtype=float) - model.t0
    out = model.a * np.asarray(basis_value(model.kind, u)) + model.b
    return _finish(t, out)


def model_value(model, t):
    return _finish(t, np.exp2(np.asarray(model_log2(model, t))))


def growth_rate(model, t):
    """Instantaneous growth in doublings per year."""
    u = np.asarray(t, dtype=float) - model.t0
    out = model.a * np.asarray(basis_slope(model.kind, u))
    return _finish(t, out)


def doubling_time(model, t):
    """Years needed to double at the instantaneous rate in effect at ``t``."""
    if model.a <= 0:
        raise NonPositiveGrowth(f"slope a={model.a!r} gives no growth")
    rate = np.asarray(growth_rate(model, t))
    if not np.all(rate > 0):
        raise NonPositiveGrowth("growth rate is not positive on the requested range")
    return _finish(t, 1.0 / rate)


def annual_improvement_ratio(model, t):
    """value(t + 1) / value(t)."""
    t_arr = np.asarray(t, dtype=float)
    out = np.exp2(np.asarray(model_log2(model, t_arr + 1.0)) - np.asarray(model_log2(model, t_arr)))
    return _finish(t, out)


# -- classical closed-form rules ---------------------------------------------

def amdahl_speedup(p, n):
    """Amdahl's law for parallel fraction ``p`` on ``n`` processors."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"parallel fraction must lie in [0, 1], got {p!r}")
    if not n >= 1:
        raise DomainError(f"processor count must be >= 1, got {n!r}")
    # n / ((1-p) n + p) is algebraically 1/((1-p) + p/n) but returns n exactly at p = 1
    return n / ((1.0 - p) * n + p)


def pollack_performance_ratio(transistor_ratio, frequency_ratio):
    """Per-generation speedup: frequency gain times sqrt of transistor gain."""
    if not (transistor_ratio > 0 and frequency_ratio > 0):
        raise DomainError("transistor and frequency ratios must be positive")
    return frequency_ratio * math.sqrt(transistor_ratio)


def parallel_speedup_model(kind, n):
    """Best-case speedup of textbook parallel algorithms on ``n`` elements.

    ``prefix_sum`` reaches n / log2 n; ``merge_sort`` only n / log2(n)^2.
    """
    if not n >= 2:
        raise DomainError(f"n must be >= 2, got {n!r}")
    lg = math.log2(n)
    if kind == "prefix_sum":
        return n / lg
    if kind == "merge_sort":
        return n / (lg * lg)
    raise DomainError(f"unknown algorithm {kind!r}; expected 'prefix_sum' or 'merge_sort'")
