from fractions import Fraction

import pytest

from gqam import INF, NEG_INF, OpenInterval, as_extended, as_rational, fmt
from gqam.errors import InvariantViolation
from gqam.rational import floor_div


def test_parse_forms():
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational("-7") == -7
    assert as_rational(5) == 5
    assert as_rational(" 2/6 ") == Fraction(1, 3)


@pytest.mark.parametrize("bad", ["0.5", "1e3", 0.5, True, "x", "1/0", "1_000"])
def test_parse_rejects(bad):
    with pytest.raises((ValueError, TypeError, ZeroDivisionError)):
        as_rational(bad)


def test_extended():
    assert as_extended("inf") == INF
    assert as_extended("-inf") == NEG_INF
    with pytest.raises(ValueError):
        as_rational("inf")


def test_fmt_is_canonical():
    assert fmt(Fraction(6, 4)) == "3/2"
    assert fmt(Fraction(4, 2)) == "2"
    assert fmt(INF) == "inf" and fmt(NEG_INF) == "-inf"


def test_floor_div_negative():
    assert floor_div(Fraction(-1, 2)) == -1
    assert floor_div(Fraction(7, 2)) == 3


def test_interval():
    I = OpenInterval(0, 2)
    assert 1 in I and 0 not in I and 2 not in I
    assert OpenInterval("-inf", 3).interior_point() == 2
    with pytest.raises(InvariantViolation):
        OpenInterval(1, 1)
    assert str(OpenInterval(NEG_INF, INF)) == "(-inf, inf)"
