import numpy as np
import pytest
from hypothesis import strategies as st

from mnat import SetFamily, SetFunction
from mnat.core import NEG_INF

CAPPED_VALUES = {(): 0, (1,): 0, (2,): 1, (3,): 1, (1, 2): 1, (1, 3): 1, (2, 3): 1}
CROSS_FAMILY = [[1, 2], [1, 4], [1, 5], [4, 5], [3, 4, 5]]


def capped() -> SetFunction:
    return SetFunction.from_dict(3, CAPPED_VALUES)


def two_triples() -> SetFunction:
    return SetFunction.from_dict(6, {(1, 2, 3): 0, (4, 5, 6): 0})


def zero(n: int) -> SetFunction:
    return SetFunction(n, np.zeros(1 << n))


@pytest.fixture
def fcap():
    return capped()


@pytest.fixture
def ftt():
    return two_triples()


@pytest.fixture
def cross_family():
    return SetFamily.from_sets(5, CROSS_FAMILY)


def grid_tables(n: int, grid=(NEG_INF, 0.0, 1.0, 2.0)):
    """Hypothesis strategy: grid-valued tables on 2^n with nonempty domain."""
    return st.lists(st.sampled_from(grid), min_size=1 << n, max_size=1 << n).filter(
        lambda t: any(v != NEG_INF for v in t)).map(lambda t: np.array(t, dtype=float))


def real_tables(n: int):
    """Tables mixing -inf with arbitrary moderate reals."""
    value = st.one_of(st.just(NEG_INF), st.floats(-5, 5, allow_nan=False).map(lambda x: round(x, 3)))
    return st.lists(value, min_size=1 << n, max_size=1 << n).filter(
        lambda t: any(v != NEG_INF for v in t)).map(lambda t: np.array(t, dtype=float))
