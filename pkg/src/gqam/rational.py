"""Exact scalars: ``Fraction`` for rationals, ``math.inf`` for the two infinities.

``Fraction`` compares correctly against ``float('inf')``, so the extended line
needs no wrapper type. Floats other than the infinities are rejected everywhere
so nothing inexact can leak into a computation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

INF = math.inf
NEG_INF = -math.inf

Extended = Union[Fraction, float]
RationalLike = Union[Fraction, int, str]


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a ``Fraction``; accepts ints, Fractions and "p/q" strings."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE_ "):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def as_extended(value) -> Extended:
    """Like :func:`as_rational` but also accepts "inf", "-inf" and the float infinities."""
    if isinstance(value, float):
        if math.isinf(value):
            return value
        raise TypeError("finite floats are not exact; pass a Fraction or 'p/q'")
    if isinstance(value, str):
        text = value.strip().lower()
        if text in ("inf", "+inf", "infinity"):
            return INF
        if text in ("-inf", "-infinity"):
            return NEG_INF
    return as_rational(value)


def is_finite(value: Extended) -> bool:
    return not (isinstance(value, float) and math.isinf(value))


def fmt(value: Extended) -> str:
    """Canonical text form: "p/q", "n", "inf" or "-inf"."""
    if isinstance(value, float):
        if value == INF:
            return "inf"
        if value == NEG_INF:
            return "-inf"
        raise TypeError("finite float in exact context")
    return str(Fraction(value))


def floor_div(value: Fraction) -> int:
    """Exact floor of a rational."""
    return value.numerator // value.denominator
