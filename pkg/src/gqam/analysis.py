"""Comparison and equality of generalized quasiarithmetic means.

Two means generated by ``f`` and ``g`` on the same interval satisfy
``A_f <= A_g`` for every arity and weighting exactly when the ratio condition

    (f(y) - f(t)) / (f(y) - f(x))  <=  (g(y) - g(t)) / (g(y) - g(x))

holds for all ``x < t < y`` with ``t`` a continuity point of both. Writing the
condition as a comparison of chord slopes on the curve ``x -> (f(x), g(x))``
shows it says: every curve point at a common continuity point has a
supporting line from below. On a common refinement of the two partitions the
curve is a finite union of straight pieces and isolated node points, so the
condition reduces to "every critical point lies on or above the line through
each piece" plus a slope test for unbounded end pieces. That finite check is
what :func:`compare` runs.
"""

from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .continuous import ContinuousPWL, upper_envelope_of_lines
from .core import MonotonePWL, Segment, _midpoint
from .errors import DomainMismatch, NotAWitness, OutOfDomain
from .means import quasi_mean, weighted_quasi_mean
from .rational import as_rational, floor_div, fmt, is_finite


class Relation(enum.Enum):
    LESS_EQ = "LESS_EQ"
    GREATER_EQ = "GREATER_EQ"
    EQUAL = "EQUAL"
    INCOMPARABLE = "INCOMPARABLE"


@dataclass(frozen=True)
class Witness:
    """A triple ``x < t < y`` violating the ratio condition.

    ``direction`` is LESS_EQ when the triple refutes ``A_f <= A_g``
    (``ratio_f > ratio_g``) and GREATER_EQ when it refutes ``A_g <= A_f``.
    """

    x: Fraction
    t: Fraction
    y: Fraction
    direction: Relation
    ratio_f: Fraction
    ratio_g: Fraction


@dataclass(frozen=True)
class Counterexample:
    """Two-point weighted evaluation that breaks one of the inequalities."""

    points: tuple
    weights: tuple
    lam: Fraction
    t: Fraction
    mean_f: Fraction
    mean_g: Fraction


@dataclass(frozen=True)
class CompareVerdict:
    relation: Relation
    certificate: Union[ContinuousPWL, tuple, None] = None
    witnesses: tuple = ()
    counterexamples: tuple = ()

    def witness(self, direction: Relation) -> Optional[Witness]:
        return next((w for w in self.witnesses if w.direction is direction), None)


@dataclass(frozen=True)
class ContinuityDiagnosis:
    point: Fraction
    n: int
    lower_semicontinuous: bool
    upper_semicontinuous: bool
    lower_witness: Optional[Fraction] = None  # y < point with A_n(point, ..., point, y) >= point
    upper_witness: Optional[Fraction] = None  # y > point with A_n(point, ..., point, y) <= point

    @property
    def continuous(self) -> bool:
        return self.lower_semicontinuous and self.upper_semicontinuous


@dataclass(frozen=True)
class FloorCheck:
    passed: bool
    checked: int
    failure: Optional[tuple] = None  # (x, t, y, m, floor_f, floor_g)

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class KolmogorovReport:
    n: int
    continuous: bool
    envelope_order: bool  # A_{f+} <= A_{f-}
    envelope_witness: Optional[tuple] = None
    strict: bool = True
    strictness_witness: Optional[tuple] = None
    strictly_increasing: bool = True
    increasing_witness: Optional[tuple] = None  # (lower vector, higher vector, common mean)
    grid_checked: int = 0

    @property
    def all_pass(self) -> bool:
        return self.envelope_order and self.strict and self.strictly_increasing


def ratio(h: MonotonePWL, x, t, y) -> Fraction:
    """``(h(y) - h(t)) / (h(y) - h(x))``."""
    hy = h(y)
    return (hy - h(t)) / (hy - h(x))


def _same_interval(f: MonotonePWL, g: MonotonePWL):
    if f.interval != g.interval:
        raise DomainMismatch(f"generators live on {f.interval} and {g.interval}")


# -- common refinement ---------------------------------------------------------


@dataclass(frozen=True)
class _Piece:
    lo: object
    hi: object
    F: Segment
    G: Segment

    @property
    def rho(self) -> Fraction:
        return self.G.slope / self.F.slope

    @property
    def offset(self) -> Fraction:
        # the piece lies on v = rho*u + offset in the (F, G) plane
        return self.G.intercept - self.rho * self.F.intercept

    def inner_pair(self) -> tuple:
        """Two interior points ``p < q`` of the piece."""
        lo, hi = self.lo, self.hi
        if is_finite(lo) and is_finite(hi):
            w = (hi - lo) / 3
            return lo + w, lo + 2 * w
        if is_finite(lo):
            return lo + 1, lo + 2
        if is_finite(hi):
            return hi - 2, hi - 1
        return Fraction(0), Fraction(1)


def _segment_at(h: MonotonePWL, x) -> Segment:
    return h.segments[bisect_right(h.breakpoints, x)]


def _refine(F: MonotonePWL, G: MonotonePWL) -> list:
    bps = sorted(set(F.breakpoints) | set(G.breakpoints))
    edges = [F.interval.left, *bps, F.interval.right]
    out = []
    for a, b in zip(edges, edges[1:]):
        m = _midpoint(a, b)
        out.append(_Piece(a, b, _segment_at(F, m), _segment_at(G, m)))
    return out


def _critical_points(F: MonotonePWL, G: MonotonePWL, pieces: list) -> list:
    """``(x, kind, u, v)`` for every vertex of the closed curve ``x -> (F(x), G(x))``."""
    out = []
    lo, hi = F.interval.left, F.interval.right
    if is_finite(lo):
        out.append((lo, "right", pieces[0].F(lo), pieces[0].G(lo)))
    for b in sorted(set(F.breakpoints) | set(G.breakpoints)):
        fl, fv, fr = F.limits(b)
        gl, gv, gr = G.limits(b)
        out.append((b, "left", fl, gl))
        out.append((b, "value", fv, gv))
        out.append((b, "right", fr, gr))
    if is_finite(hi):
        out.append((hi, "left", pieces[-1].F(hi), pieces[-1].G(hi)))
    return out


def _positive_side(A, B, lo, hi, toward) -> Fraction:
    """A point of ``(lo, hi)`` where ``A*x + B > 0``.

    The caller guarantees positivity in the limit at the ``toward`` end.
    """
    if toward == "hi":
        if A <= 0:
            return _midpoint(lo, hi)
        return _midpoint(max(lo, -B / A), hi)
    if A >= 0:
        return _midpoint(lo, hi)
    return _midpoint(lo, min(hi, -B / A))


def _find_violation(F: MonotonePWL, G: MonotonePWL, pieces=None) -> Optional[tuple]:
    """First triple refuting the ratio condition for ``(F, G)``, or ``None``."""
    if pieces is None:
        pieces = _refine(F, G)
    crit = _critical_points(F, G, pieces)
    ending_at = {P.hi: P for P in pieces}
    starting_at = {P.lo: P for P in pieces}
    first, last = pieces[0], pieces[-1]
    for idx, P in enumerate(pieces):
        rho, off = P.rho, P.offset
        p, q = P.inner_pair()
        for x, kind, u, v in crit:
            if rho * u + off <= v:
                continue
            # strictly below the line of P; a limit point is replaced by a nearby
            # curve point of the neighbouring piece that is still below it
            if kind == "value":
                xw = x
            else:
                nb = ending_at[x] if kind == "left" else starting_at[x]
                A = rho * nb.F.slope - nb.G.slope
                B = rho * nb.F.intercept + off - nb.G.intercept
                xw = _positive_side(A, B, nb.lo, nb.hi, "hi" if kind == "left" else "lo")
            return (xw, p, q) if xw < p else (p, q, xw)
        if not is_finite(first.lo) and idx > 0 and first.rho > rho:
            A = rho * first.F.slope - first.G.slope
            B = rho * first.F.intercept + off - first.G.intercept
            return min(-B / A, first.hi) - 1, p, q
        if not is_finite(last.hi) and idx < len(pieces) - 1 and last.rho < rho:
            A = rho * last.F.slope - last.G.slope
            B = rho * last.F.intercept + off - last.G.intercept
            return p, q, max(-B / A, last.lo) + 1
    return None


def convex_bridge(f: MonotonePWL, g: MonotonePWL) -> ContinuousPWL:
    """Largest convex map below the curve, as the maximum of the piece lines.

    When ``A_f <= A_g`` holds this is an increasing convex homeomorphism
    ``phi: conv(f(I)) -> conv(g(I))`` with ``phi(f(x)) <= g(x)`` everywhere and
    equality at continuity points. Lines are used rather than chords across
    jump gaps: a chord can pass above a node value inside the gap.
    """
    _same_interval(f, g)
    lines = [(P.rho, P.offset) for P in _refine(f, g)]
    return upper_envelope_of_lines(lines, f.conv_range())


# -- public decision procedures -----------------------------------------------


def affine_relation(f: MonotonePWL, g: MonotonePWL) -> Optional[tuple]:
    """``(alpha, beta)`` with ``f = alpha*g + beta`` and ``alpha > 0``, or ``None``."""
    _same_interval(f, g)
    pieces = _refine(f, g)
    P0 = pieces[0]
    alpha = P0.F.slope / P0.G.slope
    beta = P0.F.intercept - alpha * P0.G.intercept
    for P in pieces:
        if P.F.slope != alpha * P.G.slope or P.F.intercept != alpha * P.G.intercept + beta:
            return None
    for b in sorted(set(f.breakpoints) | set(g.breakpoints)):
        if f(b) != alpha * g(b) + beta:
            return None
    return alpha, beta


def _witness(f, g, triple, direction) -> Witness:
    x, t, y = triple
    w = Witness(x, t, y, direction, ratio(f, x, t, y), ratio(g, x, t, y))
    bad = w.ratio_f > w.ratio_g if direction is Relation.LESS_EQ else w.ratio_g > w.ratio_f
    if not (bad and f.is_continuous_at(t) and g.is_continuous_at(t)):
        raise AssertionError(f"soundness: constructed triple {triple} does not violate {direction.name}")
    return w


def compare(f: MonotonePWL, g: MonotonePWL) -> CompareVerdict:
    """Decide all-arity comparability of ``A_f`` and ``A_g``.

    LESS_EQ carries the convex bridge for ``(f, g)``; GREATER_EQ the bridge
    for ``(g, f)``; EQUAL the pair ``(alpha, beta)`` with ``f = alpha*g + beta``;
    INCOMPARABLE one witness per direction together with the verified
    two-point counterexamples.
    """
    _same_interval(f, g)
    pieces = _refine(f, g)
    le_bad = _find_violation(f, g, pieces)
    swapped = [_Piece(P.lo, P.hi, P.G, P.F) for P in pieces]
    ge_bad = _find_violation(g, f, swapped)
    if f.jump_points != g.jump_points and (le_bad is None or ge_bad is None):
        raise AssertionError("soundness: comparable generators with different jump sets")
    if le_bad is None and ge_bad is None:
        ab = affine_relation(f, g)
        if ab is None:
            raise AssertionError("soundness: mutually comparable generators are not affinely related")
        return CompareVerdict(Relation.EQUAL, ab)
    if le_bad is None:
        w = _witness(f, g, ge_bad, Relation.GREATER_EQ)
        return CompareVerdict(Relation.LESS_EQ, convex_bridge(f, g), (w,))
    if ge_bad is None:
        w = _witness(f, g, le_bad, Relation.LESS_EQ)
        return CompareVerdict(Relation.GREATER_EQ, convex_bridge(g, f), (w,))
    ws = (_witness(f, g, le_bad, Relation.LESS_EQ), _witness(f, g, ge_bad, Relation.GREATER_EQ))
    cex = tuple(witness_to_counterexample(f, g, (w.x, w.t, w.y), w.direction) for w in ws)
    return CompareVerdict(Relation.INCOMPARABLE, None, ws, cex)


def witness_to_counterexample(f: MonotonePWL, g: MonotonePWL, triple, direction) -> Counterexample:
    """Turn a violating triple into a verified two-point weighted counterexample.

    For direction LESS_EQ the result satisfies
    ``A_g(x, y; lam, 1-lam) < t < A_f(x, y; lam, 1-lam)``; for GREATER_EQ the
    roles of ``f`` and ``g`` swap. ``lam`` is the midpoint of the open ratio gap.
    """
    _same_interval(f, g)
    direction = Relation(direction) if not isinstance(direction, Relation) else direction
    x, t, y = (as_rational(v) for v in triple)
    if not (x < t < y) or any(v not in f.interval for v in (x, t, y)):
        raise NotAWitness("need x < t < y inside the interval")
    if not (f.is_continuous_at(t) and g.is_continuous_at(t)):
        raise NotAWitness(f"t={fmt(t)} is not a common continuity point")
    rf, rg = ratio(f, x, t, y), ratio(g, x, t, y)
    lam = (rf + rg) / 2
    weights = (lam, 1 - lam)
    mf = weighted_quasi_mean(f, (x, y), weights)
    mg = weighted_quasi_mean(g, (x, y), weights)
    if direction is Relation.LESS_EQ:
        ok = mg < t < mf
    elif direction is Relation.GREATER_EQ:
        ok = mf < t < mg
    else:
        raise ValueError("direction must be LESS_EQ or GREATER_EQ")
    if not ok:
        raise NotAWitness(
            f"({fmt(x)}, {fmt(t)}, {fmt(y)}) does not refute {direction.name}: "
            f"ratios {fmt(rf)} vs {fmt(rg)}")
    return Counterexample((x, y), weights, lam, t, mf, mg)


def critical_triples(f: MonotonePWL, g: MonotonePWL) -> list:
    """Triples ``x < t < y`` over breakpoints and one inner point per refined piece,
    with ``t`` a common continuity point."""
    _same_interval(f, g)
    pieces = _refine(f, g)
    xs = set(f.breakpoints) | set(g.breakpoints)
    inner = [_midpoint(P.lo, P.hi) for P in pieces]
    xs.update(inner)
    xs = sorted(xs)
    ts = [x for x in xs if f.is_continuous_at(x) and g.is_continuous_at(x)]
    out = []
    for t in ts:
        i = xs.index(t)
        for x in xs[:i]:
            for y in xs[i + 1:]:
                out.append((x, t, y))
    return out


def floor_condition(f: MonotonePWL, g: MonotonePWL, n: int, triples: Optional[Sequence] = None) -> FloorCheck:
    """Check ``floor(m*r_f) <= floor(m*r_g)`` for ``m = 1..n`` over ``triples``.

    A necessary condition for ``A_f <= A_g`` at arity ``n``; not sufficient.
    Defaults to :func:`critical_triples`.
    """
    _same_interval(f, g)
    if triples is None:
        triples = critical_triples(f, g)
    count = 0
    for triple in triples:
        x, t, y = (as_rational(v) for v in triple)
        if not (x < t < y):
            raise ValueError(f"triple must satisfy x < t < y, got {triple}")
        if not (f.is_continuous_at(t) and g.is_continuous_at(t)):
            raise OutOfDomain(f"t={fmt(t)} is not a common continuity point")
        rf, rg = ratio(f, x, t, y), ratio(g, x, t, y)
        for m in range(1, n + 1):
            count += 1
            ff, fg = floor_div(m * rf), floor_div(m * rg)
            if ff > fg:
                return FloorCheck(False, count, (x, t, y, m, ff, fg))
    return FloorCheck(True, count)


def _inverse_or_end(f: MonotonePWL, u):
    cr = f.conv_range()
    if u <= cr.left:
        return f.interval.left
    if u >= cr.right:
        return f.interval.right
    return f.inverse(u)


def semicontinuity_probe(f: MonotonePWL, x, n: int = 2) -> ContinuityDiagnosis:
    """Semicontinuity of ``f`` at ``x`` read off the mean ``A_n(x, ..., x, y)``.

    ``f`` is lower semicontinuous at ``x`` iff ``A_n(x, ..., x, y) < x`` for
    every ``y < x``. By the position rules that fails exactly for the ``y < x``
    with ``f(y) >= n*f_-(x) - (n-1)*f(x)``; the set is solved through the
    generalized inverse and a member is reported. The upper case mirrors it.
    """
    x = as_rational(x)
    if n < 2:
        raise ValueError("n must be at least 2")
    lo, v, hi = f.limits(x)
    lower_w = upper_w = None
    theta = n * lo - (n - 1) * v
    # sup of f over y < x is f_-(x), not attained
    if theta < lo:
        lower_w = _midpoint(_inverse_or_end(f, theta), x)
        if quasi_mean(f, [x] * (n - 1) + [lower_w]) < x:
            raise AssertionError("soundness: lower semicontinuity witness failed")
    theta = n * hi - (n - 1) * v
    if theta > hi:
        upper_w = _midpoint(x, _inverse_or_end(f, theta))
        if quasi_mean(f, [x] * (n - 1) + [upper_w]) > x:
            raise AssertionError("soundness: upper semicontinuity witness failed")
    return ContinuityDiagnosis(x, n, lower_w is None, upper_w is None, lower_w, upper_w)


def kolmogorov_probe(f: MonotonePWL, n: int = 2) -> KolmogorovReport:
    """Which of the continuity-equivalent mean properties hold at arity ``n``.

    Checks ``A_{f+} <= A_{f-}``, strictness and strict increase, with exact
    witnesses built at the first jump of ``f``. All three hold iff ``f`` has
    no jump.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    lower, upper = f.lower_envelope(), f.upper_envelope()
    grid = sorted(set(f.breakpoints) | {f.interval.interior_point()}
                  | {_midpoint(s.lo, s.hi) for s in f.segments})
    checked = 0
    env_w = None
    for p in grid:
        for q in grid:
            vec = [p] * (n - 1) + [q]
            checked += 1
            if env_w is None and quasi_mean(upper, vec) > quasi_mean(lower, vec):
                env_w = tuple(vec)
    if not f.jumps:
        return KolmogorovReport(n, True, env_w is None, env_w, grid_checked=checked)
    jump = f.jumps[0]
    b, L, V, R = jump.x, jump.left_limit, jump.value, jump.right_limit
    # (b, ..., b, y) with f_-(y) <= n R - (n-1) L: the upper-envelope mean jumps past b,
    # the lower-envelope one stays at b
    y = _midpoint(b, _inverse_or_end(f, n * R - (n - 1) * L))
    vec = (b,) * (n - 1) + (y,)
    if not quasi_mean(upper, vec) > b >= quasi_mean(lower, vec):
        raise AssertionError("soundness: envelope-order witness failed")
    env_w = env_w or vec
    if V < R:
        # average stays inside [L, R] when f(y) <= n R - (n-1) V, so the mean is b = min
        y = _midpoint(b, _inverse_or_end(f, n * R - (n - 1) * V))
        strict_w = (b,) * (n - 1) + (y,)
        inc_w = ((b,) * n, strict_w, b)
    else:
        y = _midpoint(_inverse_or_end(f, n * L - (n - 1) * V), b)
        strict_w = (b,) * (n - 1) + (y,)
        inc_w = (strict_w, (b,) * n, b)
    if quasi_mean(f, strict_w) != b:
        raise AssertionError("soundness: strictness witness failed")
    return KolmogorovReport(n, False, False, env_w, False, strict_w, False, inc_w, checked)
