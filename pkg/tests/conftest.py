import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def rand_complex(rng, m, n):
    """Standard complex Gaussian matrix."""
    return rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))


def rand_unit(rng, n):
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return v / np.linalg.norm(v)
