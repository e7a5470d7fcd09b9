import numpy as np
import pytest
from termcolor import cprint


def pytest_configure(config):
    cprint("bridgekit: exact arithmetic, fixed seeds", "green")


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
