import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from ringlab.catalog import builtin_ring  # noqa: E402

settings.register_profile("ringlab", max_examples=60, deadline=None)
settings.load_profile("ringlab")

SMALL_RINGS = ["Z2", "Z4", "Z6", "Z8", "Z9", "Z2xZ2", "Z2xZ4", "U2Z2", "M2Z2"]


@pytest.fixture(scope="session")
def m2z2():
    return builtin_ring("M2Z2")


@pytest.fixture(scope="session")
def u2z2():
    return builtin_ring("U2Z2")


def ring_strategy(names=SMALL_RINGS):
    return st.sampled_from(names).map(builtin_ring)


def coeffs_strategy(order, max_len=3):
    return st.lists(st.integers(0, order - 1), min_size=0, max_size=max_len)
