from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gqam import OpenInterval, quasi_mean
from gqam.errors import BadParameters, EmptyVector
from gqam.frak import escape_witness, frak_generator, frak_inverse, frak_m, prop_m_experiment

F = Fraction


def test_frak_m():
    assert frak_m((F(-1, 2), F(1, 2))) == 0
    assert frak_m((1, 2, 3)) == 2
    assert frak_m((-3, -1)) == -2
    assert frak_m((0,)) == 0
    with pytest.raises(EmptyVector):
        frak_m(())


def test_generator_values():
    f = frak_generator(-1, 1, 2)
    assert f(F(-1, 2)) == F(-5, 4) and f(F(1, 2)) == F(5, 4)
    (j,) = f.jumps
    assert (j.left_limit, j.value, j.right_limit) == (-1, 0, 1)
    assert f.conv_range() == OpenInterval(F(-3, 2), F(3, 2))


def test_inverse_plateau_and_branches():
    f = frak_generator(-1, 1, 2)
    for u in (-1, F(-1, 3), 0, F(2, 3), 1):
        assert f.inverse(u) == 0
    # branches -a n (u + 1) and b n (u - 1)
    assert f.inverse(F(-5, 4)) == 2 * (F(-5, 4) + 1)
    assert f.inverse(F(5, 4)) == 2 * (F(5, 4) - 1)


def test_escape_datum():
    m, xs, gm, fm = escape_witness(-1, 1, 2)
    assert m == 11 and len(xs) == 11
    assert xs[0] == F(-1, 2) and set(xs[1:]) == {F(1, 2)}
    assert gm == F(1, 22) and fm == 0
    # hand check: average of f-values is 45/44, the right branch gives 2 (45/44 - 1)
    assert (F(-5, 4) + 10 * F(5, 4)) / 11 == F(45, 44)


def test_escape_is_minimal():
    f = frak_generator(-1, 1, 2)
    for m in range(2, 11):
        xs = (F(-1, 2),) + (F(1, 2),) * (m - 1)
        assert quasi_mean(f, xs) == frak_m(xs)


def test_bad_parameters():
    for a, b, n in ((1, 2, 2), (-1, 0, 2), (-1, 1, 1)):
        with pytest.raises(BadParameters):
            frak_generator(a, b, n)


def test_experiment():
    rep = prop_m_experiment(-1, 1, 2, 1000, 7)
    assert rep.passed and rep.equality_passed == 1000 + rep.grid_checked
    assert rep.plateau_upper == F(3, 4) and rep.plateau_lower == F(-3, 4)
    assert rep.escape_m == 11


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 20), st.integers(1, 6), st.integers(1, 20), st.integers(1, 6), st.integers(2, 4))
def test_generator_matches_frak(an, ad, bn, bd, n):
    a, b = F(-an, ad), F(bn, bd)
    rep = prop_m_experiment(a, b, n, trials=40, seed=an * 1000 + bn)
    assert rep.passed
    f = frak_generator(a, b, n)
    for k in range(1, 12):
        u = f.conv_range().left + (f.conv_range().right - f.conv_range().left) * F(k, 12)
        assert f.inverse(u) == frak_inverse(a, b, n, u)
