import numpy as np
import pytest

from scalinglaws import class_summaries, lifecycle_check, load_labeled
from scalinglaws.classes import LabeledPoint
from scalinglaws.errors import TooFewPointsForLabel


def test_constant_class():
    pts = [(t, 10.0, "arm") for t in range(2000, 2013)]
    (s,) = class_summaries(pts)
    assert (s.label, s.span_years, s.median_value, s.cv) == ("arm", 12.0, 10.0, 0.0)


def test_disjoint_spans_in_start_order():
    pts = [(2010, 1.0, "late"), (2015, 1.0, "late"), (1990, 5.0, "early"), (1995, 5.0, "early")]
    assert [s.label for s in class_summaries(pts)] == ["early", "late"]


def test_same_start_orders_by_median_descending():
    pts = [(2000, 1.0, "low"), (2005, 1.0, "low"), (2000, 9.0, "high"), (2004, 9.0, "high")]
    assert [s.label for s in class_summaries(pts)] == ["high", "low"]


def test_fixture_bands(fixtures):
    with open(fixtures / "classes_bands.csv") as fh:
        points = load_labeled(fh)
    summaries = class_summaries(points)
    assert [s.label for s in summaries] == ["pc", "super", "arm"]
    for s in summaries:
        vals = sorted(p.value for p in points if p.label == s.label)
        n = len(vals)
        median = vals[n // 2] if n % 2 else (vals[n // 2 - 1] + vals[n // 2]) / 2
        mean = sum(vals) / n
        sd = (sum((v - mean) ** 2 for v in vals) / n) ** 0.5
        assert s.median_value == pytest.approx(median, rel=1e-15)
        assert s.cv == pytest.approx(sd / mean, rel=1e-12)
    flags = {f.label: f.inside for f in lifecycle_check(summaries)}
    assert flags == {"pc": True, "super": False, "arm": True}


def test_too_few_points():
    with pytest.raises(TooFewPointsForLabel):
        class_summaries([(2000, 1.0, "a"), (2001, 1.0, "a"), (2000, 3.0, "b")])


def test_order_invariance_and_scaling():
    rng = np.random.default_rng(0)
    pts = [LabeledPoint(float(t), float(v), lab)
           for lab, lvl in (("x", 3.0), ("y", 40.0))
           for t, v in zip(range(2000, 2015), rng.uniform(0.5, 1.5, 15) * lvl)]
    base = class_summaries(pts)
    shuffled = [pts[i] for i in rng.permutation(len(pts))]
    assert class_summaries(shuffled) == base
    scaled = class_summaries([LabeledPoint(p.t, p.value * 7.0, p.label) for p in pts])
    for a, b in zip(base, scaled):
        assert b.median_value == pytest.approx(7.0 * a.median_value, rel=1e-12)
        assert abs(b.cv - a.cv) <= 1e-12


@pytest.mark.parametrize("span, inside", [(12.0, True), (30.0, False), (10.0, True), (15.0, True), (9.99, False)])
def test_lifecycle_defaults(span, inside):
    pts = [(2000.0, 1.0, "c"), (2000.0 + span, 1.0, "c")]
    (flag,) = lifecycle_check(class_summaries(pts))
    assert flag.inside is inside


def test_lifecycle_empty():
    with pytest.raises(ValueError):
        lifecycle_check([])
