import os
import sys
from math import gcd
from functools import reduce

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from wilfcheck.core import FULL  # noqa: E402
from wilfcheck.enumeration import walk  # noqa: E402


def _coprime(xs):
    return reduce(gcd, xs) == 1


generator_lists = st.lists(st.integers(2, 23), min_size=1, max_size=5).filter(_coprime)


@pytest.fixture(scope="session")
def small_semigroups():
    """Every semigroup of genus <= 10, ℕ included."""
    return list(walk(FULL, 10))
