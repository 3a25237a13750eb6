import numpy as np
import pytest

from mahavier import relation_catalog
from maps import catalog


@pytest.fixture
def definicija():
    return catalog("definicija")


@pytest.fixture
def h_family():
    return catalog("H")


@pytest.fixture
def relation_h():
    return relation_catalog("H")


@pytest.fixture
def exx3():
    return relation_catalog("exx3")


@pytest.fixture
def rng():
    return np.random.default_rng(42)
