"""Continuous increasing piecewise-linear functions.

These carry generalized inverses (flat over jump gaps) and the convex bridges
certifying mean comparability.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import InvariantViolation, OutOfDomain
from .interval import OpenInterval
from .rational import INF, NEG_INF, Extended, as_rational, fmt, is_finite


@dataclass(frozen=True)
class Piece:
    lo: Extended
    hi: Extended
    slope: Fraction
    intercept: Fraction

    def __call__(self, u):
        return self.slope * u + self.intercept


@dataclass(frozen=True)
class ContinuousPWL:
    """Continuous, increasing, piecewise-linear map on an open interval.

    ``points`` lists the graph vertices ``(u, v)`` in increasing ``u``; a finite
    domain end is always a vertex (holding the limit value there). At an
    unbounded end the graph continues from the outermost vertex with
    ``left_slope`` / ``right_slope``.

    Instances are canonical: vertices where the slope does not change are
    dropped on construction, so ``==`` compares functions, not encodings.
    """

    domain: OpenInterval
    points: tuple
    left_slope: Optional[Fraction] = None
    right_slope: Optional[Fraction] = None
    _us: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = tuple((as_rational(u), as_rational(v)) for u, v in self.points)
        if not pts:
            raise InvariantViolation("continuous pwl: at least one vertex required")
        lo, hi = self.domain.left, self.domain.right
        ls = None if self.left_slope is None else as_rational(self.left_slope)
        rs = None if self.right_slope is None else as_rational(self.right_slope)
        if is_finite(lo):
            if pts[0][0] != lo or ls is not None:
                raise InvariantViolation("continuous pwl: finite left end must be the first vertex")
        elif ls is None:
            raise InvariantViolation("continuous pwl: unbounded left end needs left_slope")
        if is_finite(hi):
            if pts[-1][0] != hi or rs is not None:
                raise InvariantViolation("continuous pwl: finite right end must be the last vertex")
        elif rs is None:
            raise InvariantViolation("continuous pwl: unbounded right end needs right_slope")
        for (u0, v0), (u1, v1) in zip(pts, pts[1:]):
            if not u0 < u1:
                raise InvariantViolation(f"continuous pwl: vertices not strictly ordered at u={fmt(u1)}")
            if v1 < v0:
                raise InvariantViolation(f"continuous pwl: decreasing on [{fmt(u0)}, {fmt(u1)}]")
        for u, _ in pts:
            if not lo <= u <= hi:
                raise InvariantViolation(f"continuous pwl: vertex u={fmt(u)} outside domain")
        if (ls is not None and ls < 0) or (rs is not None and rs < 0):
            raise InvariantViolation("continuous pwl: negative end slope")
        pts, ls, rs = _canonical(pts, ls, rs, lo, hi)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "left_slope", ls)
        object.__setattr__(self, "right_slope", rs)
        object.__setattr__(self, "_us", tuple(u for u, _ in pts))

    def __call__(self, u) -> Fraction:
        # Finite ends are accepted: the value there is the one-sided limit.
        if not self.domain.left <= u <= self.domain.right or not is_finite(u):
            raise OutOfDomain(f"{fmt(u)} is outside {self.domain}")
        pts = self.points
        i = bisect_right(self._us, u)
        if i == 0:
            u0, v0 = pts[0]
            return v0 + self.left_slope * (u - u0)
        if i == len(pts):
            u0, v0 = pts[-1]
            if u == u0:
                return v0
            return v0 + self.right_slope * (u - u0)
        (u0, v0), (u1, v1) = pts[i - 1], pts[i]
        if u == u0:
            return v0
        return v0 + (v1 - v0) * (u - u0) / (u1 - u0)

    @property
    def breakpoints(self) -> tuple:
        """Abscissas of the interior vertices (the kinks)."""
        return tuple(u for u in self._us if self.domain.left < u < self.domain.right)

    def pieces(self) -> list[Piece]:
        """Affine pieces from left to right, unbounded ones included."""
        out = []
        pts = self.points
        if not is_finite(self.domain.left):
            u0, v0 = pts[0]
            out.append(Piece(NEG_INF, u0, self.left_slope, v0 - self.left_slope * u0))
        for (u0, v0), (u1, v1) in zip(pts, pts[1:]):
            s = (v1 - v0) / (u1 - u0)
            out.append(Piece(u0, u1, s, v0 - s * u0))
        if not is_finite(self.domain.right):
            u0, v0 = pts[-1]
            out.append(Piece(u0, INF, self.right_slope, v0 - self.right_slope * u0))
        return out

    def slopes(self) -> list[Fraction]:
        return [p.slope for p in self.pieces()]

    def is_convex(self) -> bool:
        s = self.slopes()
        return all(a <= b for a, b in zip(s, s[1:]))

    def is_concave(self) -> bool:
        s = self.slopes()
        return all(a >= b for a, b in zip(s, s[1:]))

    def is_strictly_increasing(self) -> bool:
        return all(s > 0 for s in self.slopes())

    def image(self) -> OpenInterval:
        """Open interval of values (for a strictly increasing map)."""
        left = self.points[0][1] if is_finite(self.domain.left) else (
            NEG_INF if self.left_slope > 0 else self.points[0][1])
        right = self.points[-1][1] if is_finite(self.domain.right) else (
            INF if self.right_slope > 0 else self.points[-1][1])
        return OpenInterval(left, right)

    def inverse(self) -> "ContinuousPWL":
        """Inverse map; only defined when every slope is positive."""
        if not self.is_strictly_increasing():
            raise InvariantViolation("continuous pwl: inverse needs a strictly increasing map")
        return ContinuousPWL(
            domain=self.image(),
            points=tuple((v, u) for u, v in self.points),
            left_slope=None if self.left_slope is None else 1 / self.left_slope,
            right_slope=None if self.right_slope is None else 1 / self.right_slope,
        )

    def __str__(self) -> str:
        verts = ", ".join(f"({fmt(u)}, {fmt(v)})" for u, v in self.points)
        return f"ContinuousPWL on {self.domain}: [{verts}]"


def _canonical(pts, ls, rs, lo, hi):
    pts = list(pts)

    def slope(a, b):
        return (b[1] - a[1]) / (b[0] - a[0])

    # drop interior vertices without a kink
    out = [pts[0]]
    for k in range(1, len(pts) - 1):
        if slope(out[-1], pts[k]) != slope(pts[k], pts[k + 1]):
            out.append(pts[k])
    if len(pts) > 1:
        out.append(pts[-1])
    pts = out
    # drop outer vertices of unbounded ends that continue with the end slope
    while not is_finite(lo) and len(pts) > 1 and slope(pts[0], pts[1]) == ls:
        pts.pop(0)
    while not is_finite(hi) and len(pts) > 1 and slope(pts[-2], pts[-1]) == rs:
        pts.pop()
    if not is_finite(lo) and not is_finite(hi) and len(pts) == 1 and ls == rs:
        u0, v0 = pts[0]
        pts = [(Fraction(0), v0 - ls * u0)]
    return tuple(pts), ls, rs


def upper_envelope_of_lines(lines: Iterable[tuple], domain: OpenInterval) -> ContinuousPWL:
    """Pointwise maximum of affine maps ``u -> s*u + c`` restricted to ``domain``.

    Every kink of the maximum sits at some pairwise intersection, so evaluating
    the maximum at the finite domain ends and at all intersections inside the
    domain and then canonicalizing yields the exact envelope.
    """
    lines = [(as_rational(s), as_rational(c)) for s, c in lines]
    if not lines:
        raise ValueError("need at least one line")

    def top(u):
        return max(s * u + c for s, c in lines)

    us = set()
    for (s1, c1), (s2, c2) in combinations(lines, 2):
        if s1 != s2:
            u = (c2 - c1) / (s1 - s2)
            if u in domain:
                us.add(u)
    if is_finite(domain.left):
        us.add(domain.left)
    if is_finite(domain.right):
        us.add(domain.right)
    if not us:
        us.add(domain.interior_point())
    pts = tuple((u, top(u)) for u in sorted(us))
    ls = rs = None
    if not is_finite(domain.left):
        ls = min(lines, key=lambda l: (l[0], -l[1]))[0]
    if not is_finite(domain.right):
        rs = max(lines, key=lambda l: (l[0], l[1]))[0]
    return ContinuousPWL(domain, pts, ls, rs)


def compose_samples(outer: ContinuousPWL, inner: ContinuousPWL, us: Sequence) -> list:
    """``outer(inner(u))`` for each ``u``; a convenience for identity checks."""
    return [outer(inner(u)) for u in us]
