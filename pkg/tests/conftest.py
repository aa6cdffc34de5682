import os
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pdcrystal.perm import Permutation

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def permutations(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    window = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(tuple(window))


@st.composite
def compositions(draw, min_n=1, max_n=6, max_part=4):
    n = draw(st.integers(min_n, max_n))
    return tuple(draw(st.lists(st.integers(0, max_part), min_size=n, max_size=n)))


@pytest.fixture
def w21543():
    return Permutation.parse("21543")


@pytest.fixture
def rng():
    return random.Random(20240611)
