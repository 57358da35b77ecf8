from pathlib import Path

import numpy as np
import pytest

from scalinglaws import ScalingModel, TimeSeries, model_value
from scalinglaws.basis import model_log2

FIXTURES = Path(__file__).parent / "fixtures"
YEARS = np.arange(1965, 2021, dtype=float)
RATIO_TRUTH = ScalingModel("ratio", 0.5, 3.0, 1943.0)


def synthetic(model, years=YEARS, sigma=0.0, seed=None):
    """Series whose log2 values follow ``model`` plus optional Gaussian noise."""
    z = np.asarray(model_log2(model, years))
    if sigma:
        z = z + np.random.default_rng(seed).normal(0.0, sigma, z.size)
    return TimeSeries(years, np.exp2(z), name="synthetic")


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def ratio_series():
    return TimeSeries(YEARS, model_value(RATIO_TRUTH, YEARS))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
