import math

import numpy as np
import pytest

from scalinglaws import (
    ScalingModel,
    anchored_model,
    crossing_year,
    doubling_time_curve,
    extrapolate,
    fit_fixed,
    koomey_model,
    landauer_limit,
    model_value,
)
from scalinglaws.basis import growth_rate, model_log2
from scalinglaws.errors import (
    AlreadyExceeded,
    DomainError,
    NonIncreasingModel,
    NonPositiveGrowth,
    NonPositiveStep,
)

from conftest import synthetic, RATIO_TRUTH


class TestExtrapolate:
    def test_doublings(self):
        pts = extrapolate(ScalingModel("exp", 1, 0, 2000), 2001, 2003, 1)
        assert [p.t for p in pts] == [2001.0, 2002.0, 2003.0]
        assert [p.value for p in pts] == [2.0, 4.0, 8.0]

    def test_single_step(self):
        pts = extrapolate(ScalingModel("exp", 1, 0, 2000), 2001, 2002, 5)
        assert len(pts) == 1 and pts[0].t == 2001.0

    def test_fractional_step_keeps_endpoint(self):
        pts = extrapolate(ScalingModel("exp", 1, 0, 2000), 2000, 2001, 0.1)
        assert len(pts) == 11

    def test_consistent_with_model_value(self):
        m = fit_fixed(synthetic(RATIO_TRUTH, sigma=0.05, seed=1), "ratio").model
        pts = extrapolate(m, 2020, 2040, 2.5)
        for p in pts:
            assert p.value == model_value(m, p.t)
            assert abs(p.value / 2**p.log2_value - 1) <= 1e-12
        assert [p for p in pts if p.t == 2030][0].value == model_value(m, 2030)

    def test_bad_step(self):
        with pytest.raises(NonPositiveStep):
            extrapolate(ScalingModel("exp", 1, 0, 2000), 2001, 2003, 0)

    def test_bad_range(self):
        with pytest.raises(DomainError):
            extrapolate(ScalingModel("exp", 1, 0, 2000), 2003, 2001, 1)
        with pytest.raises(DomainError):
            extrapolate(ScalingModel("ratio", 1, 0, 1943), 1944, 1950, 1)


class TestDoublingTimeCurve:
    def test_exp_constant(self):
        curve = doubling_time_curve(ScalingModel("exp", 0.5, 0, 1943), 1965, 2020, 1)
        assert all(dt == 2.0 for _, dt in curve)

    def test_ratio_increasing(self):
        m = fit_fixed(synthetic(RATIO_TRUTH, sigma=0.05, seed=1), "ratio").model
        curve = dict(doubling_time_curve(m, 1965, 2100, 1))
        assert curve[2020.0] > curve[1975.0]

    def test_flat_model(self):
        with pytest.raises(NonPositiveGrowth):
            doubling_time_curve(ScalingModel("ratio", 0.0, 3, 1943), 1965, 2020, 1)


class TestLandauer:
    def test_300k(self):
        lim = landauer_limit(300)
        assert abs(lim.energy_per_bit - 2.8711e-21) <= 1e-24
        assert lim.energy_per_bit == pytest.approx(1.380649e-23 * 300 * math.log(2), rel=1e-15)
        assert lim.ops_per_joule == pytest.approx(3.4830e20, rel=1e-4)
        assert lim.ops_per_kwh == pytest.approx(3.6e6 * lim.ops_per_joule, rel=1e-15)

    def test_linear_in_temperature(self):
        assert landauer_limit(600).energy_per_bit == pytest.approx(2 * landauer_limit(300).energy_per_bit, rel=1e-15)

    @pytest.mark.parametrize("temp", [0.0, -4.0])
    def test_domain(self, temp):
        with pytest.raises(DomainError):
            landauer_limit(temp)


class TestCrossingYear:
    def test_ten_doublings(self):
        m = ScalingModel("exp", 0.5, 0, 2000)
        assert abs(crossing_year(m, 1024) - 2020.0) <= 1e-6

    def test_backward_search_for_exp(self):
        m = ScalingModel("exp", 0.5, 10, 2000)
        assert abs(crossing_year(m, 2.0) - 1982.0) <= 1e-6

    @pytest.mark.parametrize("kind", ["ratio", "li", "log"])
    def test_bisection_precision(self, kind):
        m = ScalingModel(kind, 0.7, 1.0, 1943)
        target = 2.0**12.345
        t = crossing_year(m, target)
        assert abs(model_log2(m, t) - math.log2(target)) <= 1e-9

    def test_larger_target_is_later(self):
        m = ScalingModel("li", 0.3, 2.0, 1943)
        years = [crossing_year(m, 2.0**k) for k in (5, 10, 20, 40)]
        assert years == sorted(years) and len(set(years)) == 4

    def test_non_increasing(self):
        with pytest.raises(NonIncreasingModel):
            crossing_year(ScalingModel("exp", 0.0, 0, 2000), 10)
        with pytest.raises(NonIncreasingModel):
            crossing_year(ScalingModel("ratio", -1.0, 0, 1943), 10)

    def test_already_exceeded(self):
        with pytest.raises(AlreadyExceeded):
            crossing_year(ScalingModel("log", 1.0, 50, 1943), 8)

    def test_target_at_boundary(self):
        m = ScalingModel("li", 1.0, 3.0, 1943)  # value 8 at t0 + 2
        assert crossing_year(m, 8.0) == 1945.0


class TestKoomeyModel:
    def test_one_doubling(self):
        m = koomey_model(2010, 1.0, 2.6)
        assert model_value(m, 2012.6) == pytest.approx(2.0, rel=1e-12)

    @pytest.mark.parametrize("d", [1.52, 1.57])
    def test_pre_revision_range(self, d):
        m = koomey_model(2010, 1.0, d)
        assert model_value(m, 2010 + d) == pytest.approx(2.0, rel=1e-12)
        # a decade gives 2^(10/d): roughly 80x to 95x
        assert 80 < model_value(m, 2020) < 100

    def test_closed_form(self):
        e0, target = 3.3e14, landauer_limit(300).ops_per_kwh
        m = koomey_model(2010, e0, 2.6)
        assert abs(crossing_year(m, target) - (2010 + 2.6 * math.log2(target / e0))) <= 1e-6

    def test_domain(self):
        with pytest.raises(DomainError):
            koomey_model(2010, 1.0, 0.0)


class TestAnchoredModel:
    @pytest.mark.parametrize("kind", ["exp", "ratio", "li", "log"])
    def test_anchor_and_rate(self, kind):
        m = anchored_model(kind, 2010, 1e15, 1 / 2.6)
        assert model_value(m, 2010) == pytest.approx(1e15, rel=1e-12)
        assert growth_rate(m, 2010) == pytest.approx(1 / 2.6, rel=1e-12)

    @pytest.mark.parametrize("kind", ["ratio", "li", "log"])
    def test_slower_than_exponential_afterwards(self, kind):
        exp = anchored_model("exp", 2010, 1e15, 1 / 2.6)
        sub = anchored_model(kind, 2010, 1e15, 1 / 2.6)
        ts = np.arange(2010.0, 2200.0, 0.5)
        assert np.all(np.asarray(model_log2(sub, ts)) <= np.asarray(model_log2(exp, ts)) + 1e-9)
