import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_hermitian(rng, n=1, scale=1.0):
    """Random Hermitian 3x3 octonionic matrices, coefficients uniform in [-scale, scale]."""
    from octe6.octonion import conj

    x = np.zeros((n, 3, 3, 8))
    d = rng.uniform(-scale, scale, (n, 3))
    x[:, 0, 0, 0], x[:, 1, 1, 0], x[:, 2, 2, 0] = d[:, 0], d[:, 1], d[:, 2]
    for a, b in ((0, 1), (0, 2), (1, 2)):
        v = rng.uniform(-scale, scale, (n, 8))
        x[:, a, b] = v
        x[:, b, a] = conj(v)
    return x
