import os
import random
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from tinysquares import StaircaseIdeal  # noqa: E402

# Sweep caps for the property suites.
TINY_M_MAX = 60
POWER_M_MAX = 20
POWER_K_MAX = 8


@st.composite
def staircases(draw, max_m=8, max_exp=100):
    m = draw(st.integers(1, max_m))
    xs = draw(st.lists(st.integers(0, max_exp), min_size=m, max_size=m, unique=True))
    ys = draw(st.lists(st.integers(0, max_exp), min_size=m, max_size=m, unique=True))
    return StaircaseIdeal(zip(sorted(xs, reverse=True), sorted(ys)))


def random_staircase(rng: random.Random, max_m=8, max_exp=100, min_m=1) -> StaircaseIdeal:
    m = rng.randint(min_m, max_m)
    xs = sorted(rng.sample(range(max_exp + 1), m), reverse=True)
    ys = sorted(rng.sample(range(max_exp + 1), m))
    return StaircaseIdeal(zip(xs, ys))


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
