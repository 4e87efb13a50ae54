import sys
import numpy as np
import pytest
from hypothesis import assume, settings, strategies as st

from lcrkn import PointSet

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

coord = st.integers(min_value=-10**6, max_value=10**6)


@st.composite
def point_sets(draw, min_n=3, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pts = draw(st.lists(st.tuples(coord, coord), min_size=n, max_size=n, unique=True))
    P = PointSet.from_coords(pts, validate=False)
    assume(P.is_general_position())
    return P


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def convex_polygon(n):
    """n points on the parabola y = x^2, which are in convex position."""
    return PointSet.from_coords([(i, i * i) for i in range(n)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
