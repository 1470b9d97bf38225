import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "scripts"))

from poly_core import poly_ring  # noqa: E402


@pytest.fixture
def xy():
    return poly_ring(("x", "y"))


@pytest.fixture
def xyz():
    return poly_ring(("x", "y", "z"))


@pytest.fixture
def t1t2():
    return poly_ring(("t1", "t2"))


@pytest.fixture
def t():
    return poly_ring(("t",))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_poly(ring, rng, max_degree=3, max_terms=3, coefficient_range=5):
    """Random polynomial with small integer coefficients and total degree <= max_degree."""
    d = ring.dimension
    f = ring.zero
    for _ in range(int(rng.integers(1, max_terms + 1))):
        degree = int(rng.integers(0, max_degree + 1))
        monom = [0] * d
        for _ in range(degree):
            monom[int(rng.integers(0, d))] += 1
        coeff = int(rng.integers(-coefficient_range, coefficient_range + 1))
        f += ring.base.from_dict({tuple(monom): coeff}) if coeff else ring.zero
    return f
