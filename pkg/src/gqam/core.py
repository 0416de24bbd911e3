"""Strictly increasing piecewise-linear functions with jumps.

A :class:`MonotonePWL` is a list of affine segments with positive slope that
partition an open interval, plus a value at every interior boundary. Where the
two neighbouring segments meet continuously the boundary is a *knot*; where
the right limit exceeds the left limit it is a *jump* and the node value may
sit anywhere in the closed gap.
"""

from __future__ import annotations

import enum
from bisect import bisect_left
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property

from .continuous import ContinuousPWL
from .errors import InvariantViolation, OutOfDomain
from .interval import OpenInterval
from .rational import Extended, as_extended, as_rational, fmt, is_finite


@dataclass(frozen=True)
class Segment:
    """Affine piece ``x -> slope*x + intercept`` on the open interval ``(lo, hi)``."""

    lo: Extended
    hi: Extended
    slope: Fraction
    intercept: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_extended(self.lo))
        object.__setattr__(self, "hi", as_extended(self.hi))
        object.__setattr__(self, "slope", as_rational(self.slope))
        object.__setattr__(self, "intercept", as_rational(self.intercept))
        if not self.lo < self.hi:
            raise InvariantViolation(f"segment: from < to required, got ({fmt(self.lo)}, {fmt(self.hi)})")
        if self.slope <= 0:
            raise InvariantViolation(f"segment ({fmt(self.lo)}, {fmt(self.hi)}): slope must be positive")

    @classmethod
    def through(cls, lo, hi, value_from, value_to) -> "Segment":
        """Bounded segment from its two endpoint limits."""
        lo, hi = as_rational(lo), as_rational(hi)
        vf, vt = as_rational(value_from), as_rational(value_to)
        if not lo < hi:
            raise InvariantViolation(f"segment: from < to required, got ({fmt(lo)}, {fmt(hi)})")
        if not vf < vt:
            raise InvariantViolation(f"segment ({fmt(lo)}, {fmt(hi)}): value_from < value_to required")
        s = (vt - vf) / (hi - lo)
        return cls(lo, hi, s, vf - s * lo)

    def __call__(self, x) -> Extended:
        if is_finite(x):
            return self.slope * x + self.intercept
        return x  # slope > 0: the limit at an infinite end has the same sign

    @property
    def value_from(self) -> Extended:
        """Limit of the segment at ``lo`` from the right."""
        return self(self.lo)

    @property
    def value_to(self) -> Extended:
        """Limit of the segment at ``hi`` from the left."""
        return self(self.hi)

    @property
    def bounded(self) -> bool:
        return is_finite(self.lo) and is_finite(self.hi)


@dataclass(frozen=True)
class JumpNode:
    x: Fraction
    left_limit: Fraction
    value: Fraction
    right_limit: Fraction


class Position(enum.Enum):
    """Relation of ``f^(-1)(u)`` to ``x``."""

    INVERSE_EQ = "="
    INVERSE_LT = "<"
    INVERSE_LE = "<="
    INVERSE_GT = ">"
    INVERSE_GE = ">="


@dataclass(frozen=True)
class MonotonePWL:
    """Strictly increasing piecewise-linear ``f: I -> R``, possibly discontinuous.

    ``node_values[i]`` is ``f`` at the boundary between ``segments[i]`` and
    ``segments[i+1]``. Pass ``None`` for a knot to take the common limit.
    """

    interval: OpenInterval
    segments: tuple
    node_values: tuple = ()
    _bps: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        segs = tuple(self.segments)
        if not segs:
            raise InvariantViolation("function: at least one segment required")
        I = self.interval
        if segs[0].lo != I.left:
            raise InvariantViolation(f"function: first segment must start at {fmt(I.left)}")
        if segs[-1].hi != I.right:
            raise InvariantViolation(f"function: last segment must end at {fmt(I.right)}")
        for a, b in zip(segs, segs[1:]):
            if a.hi != b.lo:
                raise InvariantViolation(f"function: segments must share boundaries, gap/overlap at {fmt(a.hi)}")
        vals = list(self.node_values)
        if len(vals) != len(segs) - 1:
            raise InvariantViolation(
                f"function: {len(segs) - 1} node values expected, got {len(vals)}")
        for i, (a, b) in enumerate(zip(segs, segs[1:])):
            x, lim_l, lim_r = a.hi, a.value_to, b.value_from
            if lim_r < lim_l:
                raise InvariantViolation(
                    f"strict increase: right limit {fmt(lim_r)} < left limit {fmt(lim_l)} at x={fmt(x)}")
            if vals[i] is None:
                if lim_l != lim_r:
                    raise InvariantViolation(f"node: value required at jump x={fmt(x)}")
                vals[i] = lim_l
            v = as_rational(vals[i])
            if not lim_l <= v <= lim_r:
                raise InvariantViolation(
                    f"node sandwich: value {fmt(v)} outside [{fmt(lim_l)}, {fmt(lim_r)}] at x={fmt(x)}")
            vals[i] = v
        object.__setattr__(self, "segments", segs)
        object.__setattr__(self, "node_values", tuple(vals))
        object.__setattr__(self, "_bps", tuple(s.hi for s in segs[:-1]))

    # -- construction helpers -------------------------------------------------

    @classmethod
    def identity(cls, lo=0, hi=2) -> "MonotonePWL":
        I = OpenInterval(lo, hi)
        return cls(I, (Segment(I.left, I.right, 1, 0),), ())

    @classmethod
    def from_breakpoints(cls, interval: OpenInterval, breakpoints, slopes, intercepts, node_values=None):
        """Build from interior breakpoints and per-segment affine coefficients."""
        edges = [interval.left, *breakpoints, interval.right]
        segs = tuple(Segment(edges[i], edges[i + 1], slopes[i], intercepts[i]) for i in range(len(slopes)))
        if node_values is None:
            node_values = (None,) * (len(segs) - 1)
        return cls(interval, segs, tuple(node_values))

    def affine_image(self, alpha, beta=0) -> "MonotonePWL":
        """``alpha*f + beta`` for ``alpha > 0``."""
        alpha, beta = as_rational(alpha), as_rational(beta)
        if alpha <= 0:
            raise InvariantViolation("affine image: alpha must be positive")
        segs = tuple(Segment(s.lo, s.hi, alpha * s.slope, alpha * s.intercept + beta) for s in self.segments)
        return MonotonePWL(self.interval, segs, tuple(alpha * v + beta for v in self.node_values))

    def with_node_value(self, x, value) -> "MonotonePWL":
        i = self._bps.index(as_rational(x))
        vals = list(self.node_values)
        vals[i] = value
        return replace(self, node_values=tuple(vals))

    # -- structure --------------------------------------------------------------

    @property
    def breakpoints(self) -> tuple:
        """Interior segment boundaries (jumps and knots)."""
        return self._bps

    @property
    def jumps(self) -> tuple:
        out = []
        for i, x in enumerate(self._bps):
            l, r = self.segments[i].value_to, self.segments[i + 1].value_from
            if l < r:
                out.append(JumpNode(x, l, self.node_values[i], r))
        return tuple(out)

    @property
    def jump_points(self) -> frozenset:
        return frozenset(j.x for j in self.jumps)

    @property
    def knots(self) -> tuple:
        """Interior boundaries at which ``f`` is continuous."""
        js = self.jump_points
        return tuple(x for x in self._bps if x not in js)

    def is_continuous(self) -> bool:
        return not self.jumps

    def is_continuous_at(self, x) -> bool:
        """Membership in the continuity set ``C_f``."""
        return self.left_limit(x) == self.right_limit(x)

    # -- evaluation -------------------------------------------------------------

    def _locate(self, x):
        """``(segment index, node index or None)`` for ``x`` in the interval."""
        if x not in self.interval or not is_finite(x):
            raise OutOfDomain(f"{fmt(x)} is outside {self.interval}")
        i = bisect_left(self._bps, x)
        if i < len(self._bps) and self._bps[i] == x:
            return i, i
        return i, None

    def __call__(self, x) -> Fraction:
        x = as_rational(x)
        i, node = self._locate(x)
        if node is not None:
            return self.node_values[node]
        return self.segments[i](x)

    def left_limit(self, x) -> Fraction:
        x = as_rational(x)
        i, node = self._locate(x)
        return self.segments[i](x)

    def right_limit(self, x) -> Fraction:
        x = as_rational(x)
        i, node = self._locate(x)
        return self.segments[i + 1](x) if node is not None else self.segments[i](x)

    def limits(self, x) -> tuple:
        """``(f_-(x), f(x), f_+(x))``."""
        x = as_rational(x)
        i, node = self._locate(x)
        if node is None:
            v = self.segments[i](x)
            return v, v, v
        return self.segments[i](x), self.node_values[node], self.segments[i + 1](x)

    # -- derived objects --------------------------------------------------------

    def lower_envelope(self) -> "MonotonePWL":
        return replace(self, node_values=tuple(s.value_to for s in self.segments[:-1]))

    def upper_envelope(self) -> "MonotonePWL":
        return replace(self, node_values=tuple(s.value_from for s in self.segments[1:]))

    def conv_range(self) -> OpenInterval:
        return OpenInterval(self.segments[0].value_from, self.segments[-1].value_to)

    @cached_property
    def inverse(self) -> ContinuousPWL:
        """The generalized inverse; see :func:`generalized_inverse`."""
        segs = self.segments
        pts = []
        for s in segs:
            # images of segment ends; jump gaps become flat stretches between them
            if is_finite(s.lo):
                pts.append((s.value_from, s.lo))
            if is_finite(s.hi):
                pts.append((s.value_to, s.hi))
        dedup = []
        for p in pts:
            if not dedup or dedup[-1][0] != p[0]:
                dedup.append(p)
        ls = 1 / segs[0].slope if not is_finite(segs[0].lo) else None
        rs = 1 / segs[-1].slope if not is_finite(segs[-1].hi) else None
        if not dedup:
            s = segs[0]
            dedup.append((Fraction(0), -s.intercept / s.slope))
        return ContinuousPWL(self.conv_range(), tuple(dedup), ls, rs)

    def __str__(self) -> str:
        parts = []
        for i, s in enumerate(self.segments):
            parts.append(f"{fmt(s.slope)}*x{'+' if s.intercept >= 0 else ''}{fmt(s.intercept)} on ({fmt(s.lo)}, {fmt(s.hi)})")
            if i < len(self._bps):
                parts.append(f"f({fmt(self._bps[i])})={fmt(self.node_values[i])}")
        return "; ".join(parts)


def evaluate(f: MonotonePWL, x) -> Fraction:
    return f(x)


def left_limit(f: MonotonePWL, x) -> Fraction:
    return f.left_limit(x)


def right_limit(f: MonotonePWL, x) -> Fraction:
    return f.right_limit(x)


def lower_envelope(f: MonotonePWL) -> MonotonePWL:
    """Largest lower semicontinuous minorant: every node value set to its left limit."""
    return f.lower_envelope()


def upper_envelope(f: MonotonePWL) -> MonotonePWL:
    """Smallest upper semicontinuous majorant: every node value set to its right limit."""
    return f.upper_envelope()


def conv_range(f: MonotonePWL) -> OpenInterval:
    return f.conv_range()


def generalized_inverse(f: MonotonePWL) -> ContinuousPWL:
    """Continuous increasing left inverse of ``f`` on ``conv(f(I))``.

    Affine inverse over the image of each segment and constant ``x`` over each
    jump gap ``[f_-(x), f_+(x)]``. Node values play no role, so ``f`` and both
    of its envelopes share the same inverse.
    """
    return f.inverse


def classify_position(f: MonotonePWL, x, u) -> Position:
    """Where ``f^(-1)(u)`` lies relative to ``x``, from ``f_-(x)`` and ``f_+(x)`` only.

    Returns the sharpest of EQ / LT / GT; use :func:`position_holds` to test
    the non-strict relations.
    """
    u = as_rational(u)
    if u not in f.conv_range():
        raise OutOfDomain(f"{u} is outside {f.conv_range()}")
    lo, _, hi = f.limits(x)
    if u < lo:
        return Position.INVERSE_LT
    if u > hi:
        return Position.INVERSE_GT
    return Position.INVERSE_EQ


def position_holds(f: MonotonePWL, x, u, relation: Position) -> bool:
    """Decide ``f^(-1)(u) <rel> x`` via the one-sided limits of ``f`` at ``x``."""
    u = as_rational(u)
    if u not in f.conv_range():
        raise OutOfDomain(f"{u} is outside {f.conv_range()}")
    lo, _, hi = f.limits(x)
    return {
        Position.INVERSE_EQ: lo <= u <= hi,
        Position.INVERSE_LT: u < lo,
        Position.INVERSE_LE: u <= hi,
        Position.INVERSE_GT: hi < u,
        Position.INVERSE_GE: lo <= u,
    }[relation]


def compose(phi: ContinuousPWL, f: MonotonePWL) -> MonotonePWL:
    """``phi o f`` for a strictly increasing continuous ``phi`` defined on ``conv(f(I))``.

    Kinks of ``phi`` inside the image of a segment become knots of the result.
    """
    if not phi.is_strictly_increasing():
        raise InvariantViolation("compose: outer map must be strictly increasing")
    cr = f.conv_range()
    if not (phi.domain.left <= cr.left and cr.right <= phi.domain.right):
        raise OutOfDomain(f"compose: {cr} not inside {phi.domain}")
    phi_pieces = phi.pieces()
    segs, vals = [], []
    for k, s in enumerate(f.segments):
        cuts = [s.lo]
        for u in phi.breakpoints:
            if s.value_from < u < s.value_to:
                cuts.append((u - s.intercept) / s.slope)
        cuts.append(s.hi)
        for j, (a, b) in enumerate(zip(cuts, cuts[1:])):
            mid_u = s(_midpoint(a, b))
            p = next(p for p in phi_pieces if p.lo <= mid_u <= p.hi)
            segs.append(Segment(a, b, p.slope * s.slope, p.slope * s.intercept + p.intercept))
            if j < len(cuts) - 2:
                vals.append(None)
        if k < len(f.node_values):
            vals.append(phi(f.node_values[k]))
    return MonotonePWL(f.interval, tuple(segs), tuple(vals))


def _midpoint(a, b) -> Fraction:
    if is_finite(a) and is_finite(b):
        return (a + b) / 2
    if is_finite(a):
        return a + 1
    if is_finite(b):
        return b - 1
    return Fraction(0)
