import numpy as np
import pytest

from core.qmat import IDENTITY4, H, V, projector, tensor
from core.states import singlet
from utils.logging import configure_logging

WERNER_GRID = np.linspace(0.0, 1.0, 1001)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture
def werner_grid():
    return WERNER_GRID


@pytest.fixture
def computational_projectors():
    """P_HH, P_HV, P_VH, P_VV"""
    return [projector(tensor(a, b)) for a in (H, V) for b in (H, V)]


@pytest.fixture
def singlet_projector():
    return projector(singlet())


@pytest.fixture
def identity4():
    return IDENTITY4


@pytest.fixture(autouse=True)
def log_to_current_stderr():
    configure_logging()
