"""Reading (year, value) tables and the series transforms built on them.

CSV dialect: UTF-8, comma separated, a header row that includes ``year``,
``.`` as decimal separator, and lines starting with ``#`` ignored. Blank
lines are skipped. Line numbers in errors count every physical line.
"""

from __future__ import annotations

import csv
import io
import logging
import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .errors import (
    FewerThanTwoPoints,
    MissingColumn,
    NonPositiveArea,
    NonPositiveValue,
    ParseError,
    YearMismatch,
)
from .fitting import TimeSeries

log = logging.getLogger(__name__)

__all__ = [
    "RawTable",
    "read_table",
    "load_series",
    "series_from_table",
    "density_series",
    "aggregate_sum",
    "efficiency_series",
    "annual_improvement",
    "write_series",
    "format_float",
]

YEAR = "year"


def format_float(x):
    """17 significant digits: lossless for binary64."""
    return format(float(x), ".17g")


@dataclass(frozen=True)
class RawTable:
    header: tuple
    rows: tuple  # one dict per data row, keyed by column name
    lines: tuple  # physical line number of each row
    source: str = "<stream>"

    def require(self, *columns):
        for c in columns:
            if c not in self.header:
                raise MissingColumn(c, self.header)

    def number(self, i, column):
        """Parse ``rows[i][column]`` as a finite float."""
        raw = self.rows[i].get(column)
        try:
            v = float(raw)
        except (TypeError, ValueError):
            raise ParseError(self.lines[i], f"column {column!r}: cannot parse {raw!r} as a number") from None
        if not math.isfinite(v):
            raise ParseError(self.lines[i], f"column {column!r}: {raw!r} is not finite")
        return v

    def years(self):
        return [self.number(i, YEAR) for i in range(len(self.rows))]


def read_table(stream, source=None):
    """Parse a CSV stream (text, or bytes decoded as UTF-8) into a :class:`RawTable`."""
    if isinstance(stream, (bytes, bytearray)):
        stream = io.StringIO(stream.decode("utf-8"))
    elif isinstance(stream, str):
        stream = io.StringIO(stream)
    if source is None:
        source = getattr(stream, "name", "<stream>")

    header = None
    rows, lines = [], []
    for lineno, line in enumerate(stream, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = [f.strip() for f in next(csv.reader([line.rstrip("\r\n")]))]
        if header is None:
            header = tuple(fields)
            if len(set(header)) != len(header):
                raise ParseError(lineno, "duplicate column names in header")
            continue
        if len(fields) != len(header):
            raise ParseError(lineno, f"expected {len(header)} fields, found {len(fields)}")
        rows.append(dict(zip(header, fields)))
        lines.append(lineno)
    if header is None:
        raise ParseError(1, "no header row")
    table = RawTable(header, tuple(rows), tuple(lines), str(source))
    table.require(YEAR)
    return table


def _build_series(years, values, lines, name="", unit=""):
    by_year = defaultdict(list)
    for t, v, line in zip(years, values, lines):
        if not v > 0:
            raise NonPositiveValue(line, v)
        by_year[t].append(v)
    if len(by_year) < 2:
        raise FewerThanTwoPoints(f"need at least 2 distinct years, got {len(by_year)}")
    ts = sorted(by_year)
    ys = [math.fsum(by_year[t]) / len(by_year[t]) for t in ts]
    duplicates = len(years) - len(ts)
    if duplicates:
        log.warning("%s: averaged %d duplicate-year row(s)", name or "series", duplicates)
    return TimeSeries(ts, ys, name=name, unit=unit, duplicates=duplicates)


def series_from_table(table, value_column, name=None, unit=""):
    table.require(value_column)
    years = table.years()
    values = [table.number(i, value_column) for i in range(len(table.rows))]
    return _build_series(years, values, table.lines, name or value_column, unit)


def load_series(stream, value_column="value", name=None, unit=""):
    """Read one value column against ``year``.

    Rows are sorted by year; rows sharing a year are averaged and counted in
    ``TimeSeries.duplicates``.
    """
    return series_from_table(read_table(stream), value_column, name=name, unit=unit)


def density_series(table, count_column, area_column, name="density", unit=""):
    """count / area per row, then the usual sort and duplicate averaging."""
    table.require(count_column, area_column)
    years = table.years()
    values = []
    for i in range(len(table.rows)):
        area = table.number(i, area_column)
        if not area > 0:
            raise NonPositiveArea(table.lines[i], area)
        values.append(table.number(i, count_column) / area)
    return _build_series(years, values, table.lines, name, unit)


def aggregate_sum(table, value_column, name=None, unit=""):
    """Sum ``value_column`` over all rows of each year (e.g. a whole Top500 list)."""
    table.require(value_column)
    years = table.years()
    sums = defaultdict(list)
    first_line = {}
    for i, t in enumerate(years):
        v = table.number(i, value_column)
        if not v > 0:
            raise NonPositiveValue(table.lines[i], v)
        sums[t].append(v)
        first_line.setdefault(t, table.lines[i])
    ts = sorted(sums)
    # fsum is correctly rounded, so the total does not depend on row order
    totals = [math.fsum(sums[t]) for t in ts]
    return _build_series(ts, totals, [first_line[t] for t in ts], name or value_column, unit)


def efficiency_series(perf, power, name="efficiency"):
    """Pointwise perf / power; both series must cover the same years."""
    if perf.t.shape != power.t.shape or not np.array_equal(perf.t, power.t):
        left, right = set(perf.t.tolist()), set(power.t.tolist())
        raise YearMismatch(sorted(left - right), sorted(right - left))
    unit = f"{perf.unit or '1'}/{power.unit or '1'}"
    return TimeSeries(perf.t, perf.y / power.y, name=name, unit=unit)


def annual_improvement(series):
    """Annualised ratio between consecutive observations, at the interval midpoint."""
    if len(series) < 2:
        raise FewerThanTwoPoints("need at least 2 points")
    t, y = series.t, series.y
    mid = 0.5 * (t[:-1] + t[1:])
    ratio = (y[1:] / y[:-1]) ** (1.0 / np.diff(t))
    return list(zip(mid.tolist(), ratio.tolist()))


def write_series(series, stream, value_column="value"):
    """Write a series in the same dialect :func:`load_series` reads."""
    stream.write(f"{YEAR},{value_column}\n")
    for t, y in zip(series.t, series.y):
        stream.write(f"{format_float(t)},{format_float(y)}\n")
