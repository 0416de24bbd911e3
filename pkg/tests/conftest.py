import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from gqam import MonotonePWL, OpenInterval, Segment
from gqam.generators import j_function, random_pwl

_ACCEPTANCE = []


@pytest.fixture
def J():
    return j_function()


@pytest.fixture
def ident():
    return MonotonePWL.identity(0, 2)


@pytest.fixture
def kinked():
    """x on (0, 1], 2x - 1 on [1, 2)."""
    return MonotonePWL(OpenInterval(0, 2), (Segment(0, 1, 1, 0), Segment(1, 2, 2, -1)), (None,))


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)


rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
positive = st.builds(Fraction, st.integers(1, 30), st.integers(1, 8))


@st.composite
def generators(draw, max_segments=5):
    """Strictly increasing PWL generators built from drawn breakpoints, slopes and gaps."""
    k = draw(st.integers(1, max_segments))
    bps = sorted(draw(st.sets(rationals, min_size=k - 1, max_size=k - 1)))
    left = draw(st.one_of(st.just(None), rationals.filter(lambda v: not bps or v < bps[0])))
    right = draw(st.one_of(st.just(None), rationals.filter(lambda v: not bps or v > bps[-1])))
    if left is not None and right is not None and left >= right:
        right = left + 1
    lo = Fraction(left) if left is not None else float("-inf")
    hi = Fraction(right) if right is not None else float("inf")
    edges = [lo, *bps, hi]
    slopes = [draw(positive) for _ in range(k)]
    c = draw(rationals)
    segs = [Segment(edges[0], edges[1], slopes[0], c)]
    vals = []
    for i in range(1, k):
        b = edges[i]
        lim = segs[-1](b)
        gap = draw(st.one_of(st.just(Fraction(0)), positive))
        pos = draw(st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(1)]))
        segs.append(Segment(b, edges[i + 1], slopes[i], lim + gap - slopes[i] * b))
        vals.append(lim + pos * gap)
    return MonotonePWL(OpenInterval(lo, hi), tuple(segs), tuple(vals))


seeded_generators = st.integers(0, 2 ** 32).map(lambda s: random_pwl(random.Random(s)))
