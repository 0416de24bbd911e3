"""Generalized quasiarithmetic means and their envelope variants.

All results are exact: the f-space argument is a rational and the generalized
inverse is piecewise affine with rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .core import MonotonePWL
from .errors import BadArity, EmptyVector, LengthMismatch, OutOfDomain, WeightViolation
from .rational import as_rational, fmt, is_finite


def _points(f: MonotonePWL, xs) -> tuple:
    xs = tuple(as_rational(x) for x in xs)
    if not xs:
        raise EmptyVector("mean of an empty vector")
    for x in xs:
        if x not in f.interval:
            raise OutOfDomain(f"{fmt(x)} is outside {f.interval}")
    return xs


def check_weights(weights, n: int) -> tuple:
    """Validate a weight vector: ``n`` nonnegative rationals with positive sum."""
    ws = tuple(as_rational(w) for w in weights)
    if len(ws) != n:
        raise LengthMismatch(f"{n} points but {len(ws)} weights")
    if any(w < 0 for w in ws):
        raise WeightViolation("weights must be nonnegative")
    if sum(ws) <= 0:
        raise WeightViolation("weights must have a positive sum")
    return ws


def f_average(f: MonotonePWL, xs, weights=None) -> Fraction:
    """The f-space argument ``sum(w_i f(x_i)) / sum(w_i)`` fed to the inverse."""
    xs = _points(f, xs)
    if weights is None:
        return sum(f(x) for x in xs) / len(xs)
    ws = check_weights(weights, len(xs))
    return sum(w * f(x) for w, x in zip(ws, xs)) / sum(ws)


def quasi_mean(f: MonotonePWL, xs: Sequence) -> Fraction:
    """``f^(-1)((f(x_1) + ... + f(x_n)) / n)``."""
    return f.inverse(f_average(f, xs))


def weighted_quasi_mean(f: MonotonePWL, xs: Sequence, weights: Sequence) -> Fraction:
    """Weighted mean ``f^(-1)(sum(w_i f(x_i)) / sum(w_i))``.

    Zero-weight coordinates must still lie in the interval.
    """
    return f.inverse(f_average(f, xs, weights))


def envelope_means(f: MonotonePWL, xs: Sequence, weights: Optional[Sequence] = None) -> tuple:
    """Means generated by the lower and upper semicontinuous envelopes of ``f``.

    These are the limits of the mean as all arguments approach ``xs`` from
    the left, respectively the right.
    """
    lo, hi = f.lower_envelope(), f.upper_envelope()
    if weights is None:
        return quasi_mean(lo, xs), quasi_mean(hi, xs)
    return weighted_quasi_mean(lo, xs, weights), weighted_quasi_mean(hi, xs, weights)


def reduce_from_n(f: MonotonePWL, xs: Sequence, n: int) -> tuple:
    """Recover the ``m``-variable mean from ``n``-variable evaluations (``m < n``).

    Returns ``(inf L, sup G)`` where ``L`` is the set of ``z`` with
    ``A_n(xs, z, ..., z) < z`` and ``G`` the set with ``A_n(xs, z, ..., z) > z``.
    Both sets are solved exactly on every open segment and at every node, so
    the two numbers come out exactly, without bisection. Each equals the mean
    of ``xs``.
    """
    xs = _points(f, xs)
    m = len(xs)
    if not isinstance(n, int) or n <= m:
        raise BadArity(f"need n > m, got n={n}, m={m}")
    total = sum(f(x) for x in xs)
    k = n - m
    below, above = [], []
    # z inside an open segment: f_-(z) = f(z) = s*z + c, and the mean condition
    # (total + k f(z)) / n < f_-(z) reduces to total < m f(z)
    for seg in f.segments:
        root = (total / m - seg.intercept) / seg.slope
        if max(seg.lo, root) < seg.hi:
            below.append(max(seg.lo, root))
        if seg.lo < min(seg.hi, root):
            above.append(min(seg.hi, root))
    for x, v in zip(f.breakpoints, f.node_values):
        lo, _, hi = f.limits(x)
        if total + k * v < n * lo:
            below.append(x)
        if total + k * v > n * hi:
            above.append(x)
    inf_below, sup_above = min(below), max(above)
    # both bounds lie in the interval: the mean does, and segment roots are clipped
    assert is_finite(inf_below) and is_finite(sup_above)
    return inf_below, sup_above
