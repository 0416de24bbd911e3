from fractions import Fraction

import pytest

from gqam import INF, NEG_INF, OpenInterval
from gqam.continuous import ContinuousPWL, upper_envelope_of_lines
from gqam.errors import InvariantViolation


def test_canonical_drops_collinear():
    a = ContinuousPWL(OpenInterval(0, 2), ((0, 0), (1, 1), (2, 2)))
    b = ContinuousPWL(OpenInterval(0, 2), ((0, 0), (2, 2)))
    assert a == b and a.points == ((0, 0), (2, 2))


def test_evaluate_and_shape():
    phi = ContinuousPWL(OpenInterval(0, 2), ((0, 0), (1, 1), (2, 3)))
    assert phi(Fraction(3, 2)) == 2
    assert phi.is_convex() and not phi.is_concave() and phi.is_strictly_increasing()
    assert phi.image() == OpenInterval(0, 3)
    psi = phi.inverse()
    assert psi.is_concave() and psi(2) == Fraction(3, 2)


def test_flat_piece_not_strict():
    inv = ContinuousPWL(OpenInterval(0, 3), ((0, 0), (1, 1), (2, 1), (3, 2)))
    assert not inv.is_strictly_increasing()


def test_unbounded_ends():
    phi = ContinuousPWL(OpenInterval(NEG_INF, INF), ((0, 1),), Fraction(1, 2), Fraction(3))
    assert phi(-4) == -1 and phi(2) == 7
    assert phi.is_convex()


def test_invalid():
    with pytest.raises(InvariantViolation):
        ContinuousPWL(OpenInterval(0, 2), ((0, 1), (2, 0)))
    with pytest.raises(InvariantViolation):
        ContinuousPWL(OpenInterval(NEG_INF, 2), ((2, 0),))


def test_upper_envelope_of_lines():
    env = upper_envelope_of_lines([(1, 0), (2, -1), (Fraction(1, 2), Fraction(1, 2))], OpenInterval(0, 2))
    assert env.points == ((0, Fraction(1, 2)), (1, 1), (2, 3))
    assert env.is_convex()
