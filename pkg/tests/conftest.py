import numpy as np
import pytest

from hardybench import make_grid


@pytest.fixture(scope="session")
def grid64():
    return make_grid(64)


@pytest.fixture(scope="session")
def grid256():
    return make_grid(256)


@pytest.fixture(scope="session")
def grid1024():
    return make_grid(1024)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
