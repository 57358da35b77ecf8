"""Descriptive summaries of computer classes on a power axis.

Each class is a labelled cloud of (year, power) points. A summary records
when the class was observed, its typical level (median) and how flat that
level was (coefficient of variation). Nothing here forecasts.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveValue, TooFewPointsForLabel
from .ingest import YEAR, read_table

__all__ = [
    "LabeledPoint",
    "ClassSummary",
    "LifecycleFlag",
    "load_labeled",
    "class_summaries",
    "lifecycle_check",
]

DEFAULT_LIFECYCLE = (10.0, 15.0)


@dataclass(frozen=True)
class LabeledPoint:
    t: float
    value: float
    label: str


@dataclass(frozen=True)
class ClassSummary:
    label: str
    t_start: float
    t_end: float
    span_years: float
    median_value: float
    cv: float

    def to_dict(self):
        return {
            "label": self.label,
            "t_start": self.t_start,
            "t_end": self.t_end,
            "span_years": self.span_years,
            "median_value": self.median_value,
            "cv": self.cv,
        }


@dataclass(frozen=True)
class LifecycleFlag:
    label: str
    span_years: float
    inside: bool


def load_labeled(stream, value_column="value", label_column="label"):
    """Read the ingest CSV dialect with an extra label column."""
    table = read_table(stream)
    table.require(value_column, label_column)
    points = []
    for i, row in enumerate(table.rows):
        v = table.number(i, value_column)
        if not v > 0:
            raise NonPositiveValue(table.lines[i], v)
        points.append(LabeledPoint(table.number(i, YEAR), v, row[label_column]))
    return points


def class_summaries(points):
    """One :class:`ClassSummary` per label, ordered by first year then by
    descending median (label name breaks any remaining tie)."""
    groups = defaultdict(list)
    for p in points:
        if isinstance(p, LabeledPoint):
            groups[p.label].append((p.t, p.value))
        else:
            t, v, label = p
            groups[label].append((float(t), float(v)))

    out = []
    for label, pts in groups.items():
        if len(pts) < 2:
            raise TooFewPointsForLabel(label, len(pts))
        # sort so the floating-point reductions do not depend on input order
        pts.sort()
        t = np.array([p[0] for p in pts])
        v = np.sort(np.array([p[1] for p in pts]))
        mean = v.mean()
        out.append(ClassSummary(
            label=label,
            t_start=float(t.min()),
            t_end=float(t.max()),
            span_years=float(t.max() - t.min()),
            median_value=float(np.median(v)),
            cv=float(v.std() / mean),
        ))
    out.sort(key=lambda s: (s.t_start, -s.median_value, s.label))
    return out


def lifecycle_check(summaries, lo=DEFAULT_LIFECYCLE[0], hi=DEFAULT_LIFECYCLE[1]):
    """Flag each class whose observed span lies in the closed interval [lo, hi]."""
    if not summaries:
        raise ValueError("no class summaries given")
    return [LifecycleFlag(s.label, s.span_years, lo <= s.span_years <= hi) for s in summaries]
