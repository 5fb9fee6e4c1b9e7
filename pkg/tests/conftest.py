import random

import pytest
from hypothesis import settings, strategies as st

from quadchar2.fields import FiniteField, RationalFunctionField

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def F():
    """GF(2)(t)."""
    return RationalFunctionField(FiniteField(1))


@pytest.fixture
def t(F):
    return F.gen


def rff():
    return RationalFunctionField(FiniteField(1))


def elements(K=None, degree: int = 3, nonzero: bool = False):
    """Random elements of K (default GF(2)(t)) drawn through a seeded RNG."""
    K = K or rff()

    def draw(seed):
        rng = random.Random(seed)
        while True:
            x = K.random(rng, degree)
            if not (nonzero and x.is_zero()):
                return x

    return st.integers(0, 2**32).map(draw)
