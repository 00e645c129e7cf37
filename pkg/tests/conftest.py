import numpy as np
import pytest

from centrotensor import DenseTensor


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


@pytest.fixture
def sym_matrix():
    return DenseTensor(np.array([[2.0, 1.0], [1.0, 2.0]]))


@pytest.fixture
def skew_matrix():
    return DenseTensor(np.array([[1.0, 0.0], [0.0, -1.0]]))
