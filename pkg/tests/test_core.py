from fractions import Fraction

import pytest
from hypothesis import given, settings

from gqam import (INF, NEG_INF, MonotonePWL, OpenInterval, Position, Segment, classify_position,
                  compose, conv_range, evaluate, generalized_inverse, left_limit, lower_envelope,
                  position_holds, right_limit, upper_envelope)
from gqam.continuous import ContinuousPWL
from gqam.errors import InvariantViolation, OutOfDomain
from gqam.generators import random_points, window

from conftest import generators

half = Fraction(1, 2)


def test_j_values(J):
    assert evaluate(J, Fraction(3, 2)) == Fraction(5, 2)
    assert J(1) == 1
    assert J(half) == half
    assert left_limit(J, 1) == 1 and right_limit(J, 1) == 2
    assert left_limit(J, half) == right_limit(J, half) == half


def test_identity(ident):
    q = Fraction(7, 5)
    assert ident(q) == q and right_limit(ident, q) == q
    assert not ident.jumps and ident.breakpoints == ()


def test_jump_structure(J):
    (j,) = J.jumps
    assert (j.x, j.left_limit, j.value, j.right_limit) == (1, 1, 1, 2)
    assert J.jump_points == {1} and J.knots == ()
    assert not J.is_continuous_at(1) and J.is_continuous_at(half)


def test_sandwich_violation():
    with pytest.raises(InvariantViolation):
        MonotonePWL(OpenInterval(0, 2), (Segment(0, 1, 1, 0), Segment(1, 2, 1, 1)), (Fraction(5),))


def test_decreasing_across_boundary_rejected():
    with pytest.raises(InvariantViolation):
        MonotonePWL(OpenInterval(0, 2), (Segment(0, 1, 1, 0), Segment(1, 2, 1, -1)), (None,))


def test_jump_needs_value():
    with pytest.raises(InvariantViolation):
        MonotonePWL(OpenInterval(0, 2), (Segment(0, 1, 1, 0), Segment(1, 2, 1, 1)), (None,))


def test_nonpositive_slope_rejected():
    with pytest.raises(InvariantViolation):
        Segment(0, 1, 0, 0)


def test_out_of_domain(J):
    for x in (0, 2, -1):
        with pytest.raises(OutOfDomain):
            J(x)


def test_envelopes(J):
    assert lower_envelope(J) == J
    up = upper_envelope(J)
    assert up(1) == 2 and up(half) == half


def test_envelopes_of_continuous(kinked):
    assert lower_envelope(kinked) == kinked == upper_envelope(kinked)


def test_conv_range(J, ident):
    assert conv_range(J) == OpenInterval(0, 3)
    assert conv_range(ident) == OpenInterval(0, 2)


def test_inverse_of_j(J):
    inv = generalized_inverse(J)
    assert inv(Fraction(3, 2)) == 1
    assert inv(Fraction(5, 2)) == Fraction(3, 2)
    assert inv(1) == inv(2) == 1
    assert inv.points == ((0, 0), (1, 1), (2, 1), (3, 2))


def test_inverse_unbounded():
    f = MonotonePWL(OpenInterval(NEG_INF, INF), (Segment(NEG_INF, 0, 2, 0), Segment(0, INF, 1, 3)), (Fraction(1),))
    inv = f.inverse
    assert inv(-4) == -2 and inv(Fraction(3, 2)) == 0 and inv(5) == 2
    assert inv.left_slope == half and inv.right_slope == 1


def test_positions(J, ident):
    assert classify_position(J, 1, Fraction(3, 2)) is Position.INVERSE_EQ
    assert classify_position(J, 1, half) is Position.INVERSE_LT
    assert classify_position(J, 1, Fraction(5, 2)) is Position.INVERSE_GT
    q = Fraction(4, 3)
    assert classify_position(ident, q, q) is Position.INVERSE_EQ
    assert position_holds(J, 1, 2, Position.INVERSE_LE)
    assert position_holds(J, 1, 1, Position.INVERSE_GE)
    assert not position_holds(J, 1, 1, Position.INVERSE_LT)


def test_affine_image(J):
    g = J.affine_image(2, 3)
    assert g(1) == 5 and g.jumps[0].right_limit == 7


def test_compose_adds_knots(ident):
    phi = ContinuousPWL(OpenInterval(0, 2), ((0, 0), (1, 1), (2, 3)))
    g = compose(phi, ident)
    assert g.breakpoints == (1,) and g.knots == (1,)
    assert g(Fraction(3, 2)) == 2


@settings(max_examples=150, deadline=None)
@given(generators())
def test_inverse_laws(f):
    inv = f.inverse
    assert lower_envelope(f).inverse == inv == upper_envelope(f).inverse
    lo, hi = window(f.interval, f.breakpoints)
    xs = list(f.breakpoints) + [lo + (hi - lo) * Fraction(k, 7) for k in range(1, 7)]
    for x in xs:
        fl, fx, fr = f.limits(x)
        assert fl <= fx <= fr
        assert inv(fl) == inv(fx) == inv(fr) == x
        assert f(inv(fx)) == fx


@settings(max_examples=100, deadline=None)
@given(generators())
def test_sandwich(f):
    cr = f.conv_range()
    lo, hi = window(cr, [s.value_from for s in f.segments[1:]])
    for k in range(1, 20):
        u = lo + (hi - lo) * Fraction(k, 20)
        x = f.inverse(u)
        assert f.left_limit(x) <= u <= f.right_limit(x)


def test_random_points_stay_inside(J):
    import random
    pts = random_points(random.Random(1), J, 200)
    assert all(p in J.interval for p in pts) and 1 in pts
