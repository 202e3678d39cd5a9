from pathlib import Path

import hypothesis
import numpy as np
import pytest

np.seterr(all="warn")

hypothesis.settings.register_profile("dev", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False)
hypothesis.settings.load_profile("dev")

EXPERIMENTS = Path(__file__).resolve().parent.parent / "experiments"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run full-budget benchmark tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def experiments_dir():
    return EXPERIMENTS


@pytest.fixture
def data_dir():
    return Path(__file__).resolve().parent / "data"
