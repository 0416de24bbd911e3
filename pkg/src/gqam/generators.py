"""Seeded random generators and constructed generator pairs.

Everything takes an explicit ``random.Random`` so a trial can be replayed from
its seed alone.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional

from .continuous import ContinuousPWL
from .core import MonotonePWL, Segment, compose
from .interval import OpenInterval
from .rational import INF, NEG_INF, is_finite


def trial_rng(seed, suite: str, index: int) -> random.Random:
    """Independent stream for one trial, derived from the run seed."""
    return random.Random(f"{seed}/{suite}/{index}")


def small_rational(rng: random.Random, lo: int = -3, hi: int = 3, max_den: int = 4) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def positive_rational(rng: random.Random, max_num: int = 9, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def rational_between(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int = 48) -> Fraction:
    den = rng.randint(2, max_den)
    return lo + (hi - lo) * Fraction(rng.randint(1, den - 1), den)


def random_interval(rng: random.Random, bounded_only: bool = False) -> OpenInterval:
    r = rng.random()
    lo = small_rational(rng, -4, 2, 3)
    width = Fraction(rng.randint(2, 12), rng.randint(1, 2))
    if bounded_only or r < 0.7:
        return OpenInterval(lo, lo + width)
    if r < 0.8:
        return OpenInterval(NEG_INF, lo + width)
    if r < 0.9:
        return OpenInterval(lo, INF)
    return OpenInterval(NEG_INF, INF)


def window(I: OpenInterval, breakpoints=()) -> tuple:
    """A bounded rational window ``(lo, hi)`` inside ``I`` that covers all breakpoints."""
    pts = list(breakpoints)
    lo = I.left if is_finite(I.left) else min(pts + ([I.right] if is_finite(I.right) else [Fraction(0)])) - 4
    hi = I.right if is_finite(I.right) else max(pts + ([I.left] if is_finite(I.left) else [Fraction(0)])) + 4
    return Fraction(lo), Fraction(hi)


def random_pwl(rng: random.Random, max_segments: int = 6, max_jumps: int = 3,
               interval: Optional[OpenInterval] = None, min_jumps: int = 0) -> MonotonePWL:
    """Random strictly increasing PWL generator.

    Jump nodes take the left limit, the right limit, or an interior gap value
    with equal probability, so all three semicontinuity cases occur.
    """
    I = interval or random_interval(rng)
    k = rng.randint(max(1, min_jumps + 1), max_segments)
    lo, hi = window(I)
    den = rng.randint(4 * k, 12 * k)
    grid = sorted(rng.sample(range(1, den), k - 1))
    bps = [lo + (hi - lo) * Fraction(j, den) for j in grid]
    n_jumps = rng.randint(min_jumps, min(max_jumps, k - 1)) if k > 1 else 0
    jump_at = set(rng.sample(range(k - 1), n_jumps))
    slopes = [positive_rational(rng) for _ in range(k)]
    edges = [I.left, *bps, I.right]
    s0 = slopes[0]
    if is_finite(edges[0]):
        c = small_rational(rng) - s0 * edges[0]
    elif is_finite(edges[1]):
        c = small_rational(rng) - s0 * edges[1]
    else:
        c = small_rational(rng)
    segs = [Segment(edges[0], edges[1], s0, c)]
    vals = []
    for i in range(1, k):
        b = edges[i]
        left = segs[-1](b)
        if i - 1 in jump_at:
            right = left + positive_rational(rng, 6, 3)
            r = rng.random()
            v = left if r < 1 / 3 else right if r < 2 / 3 else rational_between(rng, left, right, 8)
        else:
            right = v = left
        segs.append(Segment(b, edges[i + 1], slopes[i], right - slopes[i] * b))
        vals.append(v)
    return MonotonePWL(I, tuple(segs), tuple(vals))


def random_points(rng: random.Random, f: MonotonePWL, n: int, node_bias: float = 0.2) -> list:
    lo, hi = window(f.interval, f.breakpoints)
    out = []
    for _ in range(n):
        if f.breakpoints and rng.random() < node_bias:
            out.append(rng.choice(f.breakpoints))
        else:
            out.append(rational_between(rng, lo, hi, 97))
    return out


def random_weights(rng: random.Random, n: int, zero_prob: float = 0.2) -> list:
    ws = [Fraction(0) if rng.random() < zero_prob else positive_rational(rng, 9, 5) for _ in range(n)]
    if not any(ws):
        ws[rng.randrange(n)] = positive_rational(rng)
    return ws


def _image_points(rng: random.Random, f: MonotonePWL, count: int) -> list:
    """Values strictly inside the images of open segments (continuity points)."""
    lo, hi = window(f.interval, f.breakpoints)
    edges = [lo, *f.breakpoints, hi]
    out = []
    for _ in range(count):
        i = rng.randrange(len(edges) - 1)
        x = rational_between(rng, edges[i], edges[i + 1], 12)
        out.append(f(x))
    return sorted(set(out))


def kinked_map(domain: OpenInterval, kinks, slopes, anchor_value=Fraction(0)) -> ContinuousPWL:
    """Continuous PWL map with the given kink abscissas and the ``len(kinks)+1`` slopes."""
    kinks = sorted(kinks)
    pts = [(kinks[0], Fraction(anchor_value))] if kinks else []
    for i in range(1, len(kinks)):
        u0, v0 = pts[-1]
        pts.append((kinks[i], v0 + slopes[i] * (kinks[i] - u0)))
    if not pts:
        u = domain.interior_point()
        pts = [(u, Fraction(anchor_value))]
        first_slope = last_slope = slopes[0]
    else:
        first_slope, last_slope = slopes[0], slopes[-1]
    if is_finite(domain.left):
        u0, v0 = pts[0]
        pts.insert(0, (domain.left, v0 - first_slope * (u0 - domain.left)))
    if is_finite(domain.right):
        u0, v0 = pts[-1]
        pts.append((domain.right, v0 + last_slope * (domain.right - u0)))
    return ContinuousPWL(domain, tuple(pts),
                         None if is_finite(domain.left) else first_slope,
                         None if is_finite(domain.right) else last_slope)


def comparable_pair(rng: random.Random) -> tuple:
    """``(f, g)`` with ``A_f <= A_g`` strictly: ``g = phi o f`` for a convex ``phi``
    kinked inside a segment image, with some jump node values of ``g`` raised."""
    f = random_pwl(rng, max_segments=5)
    kinks = _image_points(rng, f, rng.randint(1, 3))
    slopes = sorted(positive_rational(rng, 8, 3) for _ in range(len(kinks) + 1))
    while len(set(slopes)) < 2:
        slopes[-1] += 1
    phi = kinked_map(f.conv_range(), kinks, slopes, small_rational(rng))
    g = compose(phi, f)
    for j in g.jumps:
        if rng.random() < 0.5:
            g = g.with_node_value(j.x, rational_between(rng, j.value, j.right_limit, 6)
                                  if j.value < j.right_limit else j.value)
    return f, g


def incomparable_pair(rng: random.Random) -> tuple:
    """``(f, g)`` comparable in neither direction.

    Either ``g = phi o f`` with ``phi`` having a convex and a concave kink inside
    segment images, or ``g`` is ``f`` with an extra jump at a continuity point.
    """
    f = random_pwl(rng, max_segments=5)
    if rng.random() < 0.6:
        pts = []
        while len(pts) < 2:
            pts = _image_points(rng, f, 4)
        u1, u2 = sorted(rng.sample(pts, 2))
        s = positive_rational(rng, 4, 2)
        up = s + positive_rational(rng, 4, 2)
        slopes = [s, up, s] if rng.random() < 0.5 else [up, s, up]
        phi = kinked_map(f.conv_range(), [u1, u2], slopes, small_rational(rng))
        return f, compose(phi, f)
    # extra jump inside one segment of f
    lo, hi = window(f.interval, f.breakpoints)
    edges = [lo, *f.breakpoints, hi]
    i = rng.randrange(len(edges) - 1)
    c = rational_between(rng, edges[i], edges[i + 1], 12)
    delta = positive_rational(rng, 4, 3)
    segs, vals = [], []
    seg_i = f.segments[i]
    for k, s in enumerate(f.segments):
        if k < i:
            segs.append(s)
        elif k == i:
            segs.append(Segment(s.lo, c, s.slope, s.intercept))
            segs.append(Segment(c, s.hi, s.slope, s.intercept + delta))
        else:
            segs.append(Segment(s.lo, s.hi, s.slope, s.intercept + delta))
    for k, v in enumerate(f.node_values):
        if k == i:
            vals.append(rational_between(rng, seg_i(c), seg_i(c) + delta, 4) if rng.random() < 0.5
                        else seg_i(c))
        vals.append(v if k < i else v + delta)
    if i == len(f.node_values):
        vals.append(seg_i(c) + delta)
    return f, MonotonePWL(f.interval, tuple(segs), tuple(vals))


def affine_pair(rng: random.Random, min_jumps: int = 1) -> tuple:
    """``(f, g, alpha, beta)`` with ``g = alpha*f + beta``."""
    f = random_pwl(rng, max_segments=5, min_jumps=min_jumps)
    alpha = positive_rational(rng, 8, 4)
    beta = small_rational(rng)
    return f, f.affine_image(alpha, beta), alpha, beta


def j_function() -> MonotonePWL:
    """``x`` on ``(0, 1)``, ``x + 1`` on ``(1, 2)``, ``f(1) = 1``."""
    I = OpenInterval(0, 2)
    return MonotonePWL(I, (Segment(0, 1, 1, 0), Segment(1, 2, 1, 1)), (Fraction(1),))
