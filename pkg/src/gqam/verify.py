"""Seeded property suites over random generators.

Each suite returns a :class:`SuiteResult`. Trials draw from
``trial_rng(seed, suite, i)``, so any failure can be replayed in isolation.
The checks use exact rationals throughout; a single mismatch fails the suite.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Callable, Optional

from .analysis import (Relation, affine_relation, compare, floor_condition, kolmogorov_probe,
                       ratio, semicontinuity_probe, witness_to_counterexample)
from .core import MonotonePWL, Position, classify_position
from .frak import escape_witness, frak_generator, frak_inverse, frak_m, prop_m_experiment
from .generators import (affine_pair, comparable_pair, incomparable_pair, j_function, random_points,
                         random_pwl, random_weights, rational_between, trial_rng, window)
from .means import envelope_means, quasi_mean, reduce_from_n, weighted_quasi_mean
from .rational import fmt, is_finite
from .specio import (continuous_from_dict, continuous_to_dict, function_from_dict, function_to_dict,
                     parse_function, dump_function)

MAX_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    failed: int = 0
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failed == 0 and self.checks > 0

    def check(self, ok: bool, what: Callable[[], str]):
        self.checks += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append(what())

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.name:<16} {status}  {self.checks:>8} checks  {self.failed:>4} failed  {self.seconds:6.2f}s"


def _vec(xs) -> str:
    return "(" + ", ".join(fmt(x) for x in xs) + ")"


def _generators(seed, count: int) -> list:
    return [random_pwl(trial_rng(seed, "generator", i)) for i in range(count)]


# -- generalized inverse ------------------------------------------------------


def suite_inverse(seed=0, trials: int = 200, points: int = 100) -> SuiteResult:
    """Left inverse, right inverse on the range, sandwich and envelope identities."""
    res = SuiteResult("inverse")
    for gi, f in enumerate(_generators(seed, trials)):
        rng = trial_rng(seed, "inverse", gi)
        inv = f.inverse
        lower, upper = f.lower_envelope(), f.upper_envelope()
        res.check(lower.inverse == inv and upper.inverse == inv,
                  lambda: f"generator {gi}: envelope inverses differ")
        xs = random_points(rng, f, points)
        cr = f.conv_range()
        lo, hi = window(cr, [s.value_from for s in f.segments[1:]])
        us = [rational_between(rng, lo, hi, 97) for _ in range(points)]
        us += [v for v in f.node_values] + [s.value_from for s in f.segments[1:]]
        for x in xs:
            fl, fx, fr = f.limits(x)
            res.check(inv(fx) == x, lambda: f"generator {gi}: inverse(f({fmt(x)})) != x")
            res.check(inv(fl) == x and inv(fr) == x,
                      lambda: f"generator {gi}: envelope inverse fails at {fmt(x)}")
            res.check(f(inv(fx)) == fx, lambda: f"generator {gi}: f(inverse(u)) != u at u=f({fmt(x)})")
            res.check(lower(x) == fl <= fx <= fr == upper(x),
                      lambda: f"generator {gi}: envelope order at {fmt(x)}")
        for u in us:
            x = inv(u)
            fl, fx, fr = f.limits(x)
            res.check(fl <= u <= fr, lambda: f"generator {gi}: sandwich fails at u={fmt(u)}")
            z = rng.choice(xs)
            pos = classify_position(f, z, u)
            direct = (Position.INVERSE_EQ if x == z else Position.INVERSE_LT if x < z
                      else Position.INVERSE_GT)
            res.check(pos == direct, lambda: f"generator {gi}: classify_position at u={fmt(u)}")
        sx = sorted(set(xs))
        for a, b in zip(sx, sx[1:]):
            res.check(f.right_limit(a) <= f.left_limit(b) and f(a) < f(b),
                      lambda: f"generator {gi}: order fails between {fmt(a)} and {fmt(b)}")
    return res


# -- mean-value property ------------------------------------------------------


def suite_mean_value(seed=0, trials: int = 10_000, paired: int = 1_000) -> SuiteResult:
    """Bounds by min and max (weighted and unweighted), symmetry, monotonicity."""
    res = SuiteResult("mean-value")
    pool = _generators(seed, 250)
    for i in range(trials):
        rng = trial_rng(seed, "mean-value", i)
        f = rng.choice(pool)
        n = rng.randint(1, 8)
        xs = random_points(rng, f, n)
        ws = random_weights(rng, n)
        a = quasi_mean(f, xs)
        res.check(min(xs) <= a <= max(xs), lambda: f"A_f{_vec(xs)} = {fmt(a)} outside [min, max]")
        pos = [x for x, w in zip(xs, ws) if w > 0]
        aw = weighted_quasi_mean(f, xs, ws)
        res.check(min(pos) <= aw <= max(pos),
                  lambda: f"weighted mean {_vec(xs)} / {_vec(ws)} = {fmt(aw)} outside positive-weight range")
    for i in range(paired):
        rng = trial_rng(seed, "mean-value-paired", i)
        f = rng.choice(pool)
        n = rng.randint(1, 8)
        xs = random_points(rng, f, n)
        ws = random_weights(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        px, pw = [xs[k] for k in perm], [ws[k] for k in perm]
        res.check(quasi_mean(f, px) == quasi_mean(f, xs) and
                  weighted_quasi_mean(f, px, pw) == weighted_quasi_mean(f, xs, ws),
                  lambda: f"symmetry fails for {_vec(xs)}")
        _, top = window(f.interval, f.breakpoints)
        ys = [rational_between(rng, x, top, 9) if rng.random() < 0.5 else x for x in xs]
        res.check(quasi_mean(f, xs) <= quasi_mean(f, ys) and
                  weighted_quasi_mean(f, xs, ws) <= weighted_quasi_mean(f, ys, ws),
                  lambda: f"monotonicity fails: {_vec(xs)} <= {_vec(ys)}")
    return res


# -- envelope means and associativity -----------------------------------------


def _approach(f: MonotonePWL, xs, ws, side: str):
    """Check that ``A_f(x -+ eps)`` converges to the envelope mean, exactly.

    ``x - eps`` stays on the segments left of each ``x_i`` for ``eps < delta``,
    so the f-average is affine in ``eps``; the inverse is piecewise affine, so
    for small enough ``eps`` three halvings lie on one affine piece and linear
    extrapolation to ``eps = 0`` must return the envelope mean exactly.
    Returns ``(bound_ok, extrapolation_hit)``.
    """
    lo, hi = window(f.interval, f.breakpoints)
    edges = [f.interval.left, *f.breakpoints, f.interval.right]
    if side == "left":
        gaps = [x - max([e for e in edges if e < x and is_finite(e)] + [lo - 1]) for x in xs]
    else:
        gaps = [min([e for e in edges if e > x and is_finite(e)] + [hi + 1]) - x for x in xs]
    delta = min(gaps)
    sign = -1 if side == "left" else 1
    target = envelope_means(f, xs, ws)[0 if side == "left" else 1]
    min_slope = min(s.slope for s in f.segments)
    n = len(xs)
    wts = ws if ws is not None else [Fraction(1)] * n
    slope_avg = sum(w * _slope_towards(f, x, side) for w, x in zip(wts, xs)) / sum(wts)
    vals = []
    bound_ok = True
    for k in range(1, 40):
        eps = delta / 2 ** k
        moved = [x + sign * eps for x in xs]
        a = quasi_mean(f, moved) if ws is None else weighted_quasi_mean(f, moved, ws)
        # monotone approach, within the Lipschitz bound of the inverse
        if side == "left":
            bound_ok &= a <= target and target - a <= eps * slope_avg / min_slope
        else:
            bound_ok &= a >= target and a - target <= eps * slope_avg / min_slope
        vals.append(a)
        if len(vals) >= 3:
            a1, a2, a3 = vals[-3:]
            if a1 - a2 == 2 * (a2 - a3) and 2 * a3 - a2 == target:
                return bound_ok, True
    return bound_ok, False


def _slope_towards(f: MonotonePWL, x, side: str) -> Fraction:
    i = sum(1 for b in f.breakpoints if b < x) if side == "left" else sum(1 for b in f.breakpoints if b <= x)
    return f.segments[i].slope


def suite_envelopes(seed=0, trials: int = 1_000) -> SuiteResult:
    """Envelope means are directional limits; sub- and superassociativity."""
    res = SuiteResult("envelopes")
    pool = _generators(seed, 250)
    for i in range(trials):
        rng = trial_rng(seed, "envelopes", i)
        f = rng.choice(pool)
        n = rng.randint(1, 6)
        xs = random_points(rng, f, n, node_bias=0.4)
        ws = random_weights(rng, n) if rng.random() < 0.5 else None
        lo_m, hi_m = envelope_means(f, xs, ws)
        mid = quasi_mean(f, xs) if ws is None else weighted_quasi_mean(f, xs, ws)
        res.check(lo_m <= mid <= hi_m, lambda: f"envelope order fails at {_vec(xs)}")
        for side in ("left", "right"):
            bound_ok, hit = _approach(f, xs, ws, side)
            res.check(bound_ok and hit,
                      lambda: f"{side} limit of A_f at {_vec(xs)} does not reach the envelope mean")

    for i in range(trials):
        rng = trial_rng(seed, "associativity", i)
        f = rng.choice(pool)
        n = rng.randint(2, 7)
        k = rng.randint(1, n - 1)
        xs = random_points(rng, f, n, node_bias=0.4)
        ws = random_weights(rng, n)
        if not any(ws[:k]):
            ws[rng.randrange(k)] = Fraction(1)
        lower, upper = f.lower_envelope(), f.upper_envelope()
        for h, name in ((lower, "lower"), (upper, "upper")):
            y = quasi_mean(h, xs[:k])
            lhs, rhs = quasi_mean(h, xs), quasi_mean(h, [y] * k + xs[k:])
            z = weighted_quasi_mean(h, xs[:k], ws[:k])
            wl, wr = weighted_quasi_mean(h, xs, ws), weighted_quasi_mean(h, [z] * k + xs[k:], ws)
            ok = (lhs >= rhs and wl >= wr) if name == "lower" else (lhs <= rhs and wl <= wr)
            res.check(ok, lambda: f"{name} associativity fails for {_vec(xs)}, k={k}, weights {_vec(ws)}")
    return res


# -- recovering the m-variable mean ---------------------------------------------


def suite_reduction(seed=0, trials: int = 100) -> SuiteResult:
    res = SuiteResult("reduction")
    for i in range(trials):
        rng = trial_rng(seed, "reduction", i)
        f = random_pwl(rng)
        n = rng.randint(2, 5)
        m = rng.randint(1, n - 1)
        xs = random_points(rng, f, m, node_bias=0.3)
        a = quasi_mean(f, xs)
        res.check(reduce_from_n(f, xs, n) == (a, a),
                  lambda: f"reduce_from_n({_vec(xs)}, n={n}) != ({fmt(a)}, {fmt(a)})")
    return res


# -- comparison -----------------------------------------------------------------


def _pool(rng, f: MonotonePWL, g: MonotonePWL, size: int = 80) -> list:
    """Sample abscissas: random points, all breakpoints, and points just beside them."""
    bps = sorted(set(f.breakpoints) | set(g.breakpoints))
    lo, hi = window(f.interval, bps)
    pts = {rational_between(rng, lo, hi, 997) for _ in range(size)}
    edges = [lo, *bps, hi]
    for a, b in zip(edges, edges[1:]):
        step = (b - a) / 1000
        pts.update((a + step, b - step))
    pts.update(bps)
    return sorted(p for p in pts if p in f.interval)


def sampling_oracle(rng, f: MonotonePWL, g: MonotonePWL, triples: int = 10_000) -> tuple:
    """Look for ratio-condition violations on random triples ``x < t < y``.

    Independent of the critical-set reduction: it only evaluates ``f`` and ``g``.
    Values are scaled to integers, which leaves every ratio unchanged.
    Returns ``(le_violated, ge_violated)``.
    """
    pts = _pool(rng, f, g)
    fv, gv = [f(p) for p in pts], [g(p) for p in pts]
    lf = lcm(*(v.denominator for v in fv))
    lg = lcm(*(v.denominator for v in gv))
    F = [int(v * lf) for v in fv]
    G = [int(v * lg) for v in gv]
    cont = [i for i, p in enumerate(pts) if f.is_continuous_at(p) and g.is_continuous_at(p)]
    cont = [i for i in cont if 0 < i < len(pts) - 1]
    N = len(pts)
    le = ge = False
    randrange = rng.randrange
    for _ in range(triples):
        j = cont[randrange(len(cont))]
        i = randrange(j)
        k = randrange(j + 1, N)
        a = (F[k] - F[j]) * (G[k] - G[i])
        b = (G[k] - G[j]) * (F[k] - F[i])
        if a > b:
            le = True
        elif a < b:
            ge = True
        if le and ge:
            break
    return le, ge


def _check_certificate(res: SuiteResult, tag: str, f, g, phi, rng):
    slopes = phi.slopes()
    res.check(phi.is_convex() and phi.is_strictly_increasing(), lambda: f"{tag}: bridge not convex increasing")
    res.check(phi.domain == f.conv_range() and phi.image() == g.conv_range(),
              lambda: f"{tag}: bridge domain {phi.domain} / image {phi.image()} mismatch")
    xs = set(random_points(rng, f, 60, node_bias=0.0))
    bps = sorted(set(f.breakpoints) | set(g.breakpoints))
    xs.update(bps)
    ok_le = all(phi(f(x)) <= g(x) for x in xs)
    lim_ok = all(phi(f.left_limit(b)) == g.left_limit(b) and phi(f.right_limit(b)) == g.right_limit(b)
                 for b in bps)
    eq_ok = all(phi(f(x)) == g(x) for x in xs if f.is_continuous_at(x) and g.is_continuous_at(x))
    res.check(ok_le and lim_ok and eq_ok and len(slopes) >= 1,
              lambda: f"{tag}: bridge fails phi(f) <= g, or equality on the continuity set")
    psi = phi.inverse()
    res.check(psi.is_concave(), lambda: f"{tag}: inverse bridge not concave")
    lo, hi = window(phi.domain, [u for u, _ in phi.points])
    grid = [lo + (hi - lo) * Fraction(k, 64) for k in range(1, 64)]
    res.check(all(psi(phi(u)) == u for u in grid if u in phi.domain),
              lambda: f"{tag}: inverse bridge does not undo the bridge")


def _sampled_means(res: SuiteResult, tag: str, f, g, rng, evaluations: int):
    for _ in range(evaluations):
        n = rng.randint(1, 6)
        xs = random_points(rng, f, n, node_bias=0.3)
        ws = random_weights(rng, n)
        res.check(weighted_quasi_mean(f, xs, ws) <= weighted_quasi_mean(g, xs, ws),
                  lambda: f"{tag}: weighted inequality fails at {_vec(xs)} / {_vec(ws)}")
        # every prefix: arity m <= n
        res.check(all(quasi_mean(f, xs[:m]) <= quasi_mean(g, xs[:m]) for m in range(1, n + 1)),
                  lambda: f"{tag}: unweighted inequality fails at a prefix of {_vec(xs)}")


def _check_counterexamples(res: SuiteResult, tag: str, f, g, verdict):
    for d in (Relation.LESS_EQ, Relation.GREATER_EQ):
        w = verdict.witness(d)
        if w is None:
            res.check(False, lambda: f"{tag}: no {d.name} witness")
            continue
        cx = witness_to_counterexample(f, g, (w.x, w.t, w.y), d)
        lam = cx.lam
        mf = weighted_quasi_mean(f, (w.x, w.y), (lam, 1 - lam))
        mg = weighted_quasi_mean(g, (w.x, w.y), (lam, 1 - lam))
        ok = (mg < w.t < mf) if d is Relation.LESS_EQ else (mf < w.t < mg)
        res.check(ok and 0 < lam < 1, lambda: f"{tag}: {d.name} counterexample does not verify")


def _oracle_agrees(res: SuiteResult, tag: str, f, g, relation, rng, triples):
    le_bad, ge_bad = sampling_oracle(rng, f, g, triples)
    le_holds = relation in (Relation.LESS_EQ, Relation.EQUAL)
    ge_holds = relation in (Relation.GREATER_EQ, Relation.EQUAL)
    res.check(le_holds != le_bad and ge_holds != ge_bad,
              lambda: f"{tag}: sampling oracle (le violated={le_bad}, ge violated={ge_bad}) "
                      f"disagrees with {relation.name}")


def comparable_pairs(seed, count: int) -> list:
    return [comparable_pair(trial_rng(seed, "comparable", i)) for i in range(count)]


def suite_compare(seed=0, trials: int = 50, evaluations: int = 10_000, triples: int = 10_000) -> SuiteResult:
    """Comparable pairs certified, incomparable pairs refuted both ways, oracle agreement."""
    res = SuiteResult("compare")
    per_pair = max(1, evaluations // max(trials, 1))
    for i, (f, g) in enumerate(comparable_pairs(seed, trials)):
        tag = f"comparable pair {i}"
        rng = trial_rng(seed, "compare-comparable", i)
        v = compare(f, g)
        res.check(v.relation is Relation.LESS_EQ, lambda: f"{tag}: got {v.relation.name}")
        if v.relation is not Relation.LESS_EQ:
            continue
        _check_certificate(res, tag, f, g, v.certificate, rng)
        res.check(compare(g, f).relation is Relation.GREATER_EQ, lambda: f"{tag}: duality fails")
        res.check(f.jump_points == g.jump_points, lambda: f"{tag}: jump sets differ")
        _sampled_means(res, tag, f, g, rng, per_pair)
        _oracle_agrees(res, tag, f, g, v.relation, rng, triples)

    pairs = [(j_function(), MonotonePWL.identity(0, 2))]
    pairs += [incomparable_pair(trial_rng(seed, "incomparable", i)) for i in range(trials - 1)]
    for i, (f, g) in enumerate(pairs):
        tag = f"incomparable pair {i}"
        rng = trial_rng(seed, "compare-incomparable", i)
        v = compare(f, g)
        res.check(v.relation is Relation.INCOMPARABLE, lambda: f"{tag}: got {v.relation.name}")
        if v.relation is not Relation.INCOMPARABLE:
            continue
        _check_counterexamples(res, tag, f, g, v)
        _oracle_agrees(res, tag, f, g, v.relation, rng, triples)

    # the J vs identity witnesses with their exact ratios
    J, ident = pairs[0]
    for triple, d, rj, ri in (((Fraction(1, 2), Fraction(3, 4), Fraction(3, 2)), Relation.LESS_EQ,
                               Fraction(7, 8), Fraction(3, 4)),
                              ((Fraction(1, 2), Fraction(5, 4), Fraction(3, 2)), Relation.GREATER_EQ,
                               Fraction(1, 8), Fraction(1, 4))):
        cx = witness_to_counterexample(J, ident, triple, d)
        res.check(ratio(J, *triple) == rj and ratio(ident, *triple) == ri and cx.lam == (rj + ri) / 2,
                  lambda: f"J vs identity witness {_vec(triple)} gives wrong ratios")
    return res


def suite_equal(seed=0, trials: int = 50, evaluations: int = 20) -> SuiteResult:
    res = SuiteResult("equal")
    for i in range(trials):
        rng = trial_rng(seed, "equal", i)
        f, g, alpha, beta = affine_pair(rng)
        tag = f"affine pair {i}"
        v = compare(f, g)
        res.check(v.relation is Relation.EQUAL and v.certificate == (1 / alpha, -beta / alpha),
                  lambda: f"{tag}: got {v.relation.name} {v.certificate}")
        res.check(affine_relation(f, g) == (1 / alpha, -beta / alpha), lambda: f"{tag}: affine_relation")
        for _ in range(evaluations):
            n = rng.randint(1, 6)
            xs = random_points(rng, f, n, node_bias=0.3)
            ws = random_weights(rng, n)
            res.check(quasi_mean(f, xs) == quasi_mean(g, xs) and
                      weighted_quasi_mean(f, xs, ws) == weighted_quasi_mean(g, xs, ws),
                      lambda: f"{tag}: means differ at {_vec(xs)}")
        # nudge one node value of g inside its gap (or move a knot into a jump)
        j = rng.choice(g.jumps)
        delta = Fraction(1, 1000)
        nv = j.value - delta if j.value - delta >= j.left_limit else j.value + delta
        if not j.left_limit <= nv <= j.right_limit:
            res.notes.append(f"{tag}: gap narrower than 1/1000, skipped perturbation")
            continue
        h = g.with_node_value(j.x, nv)
        vh = compare(f, h)
        res.check(vh.relation is not Relation.EQUAL and affine_relation(f, h) is None,
                  lambda: f"{tag}: perturbed pair still EQUAL")
    return res


def suite_floor(seed=0, trials: int = 50, n: int = 8) -> SuiteResult:
    res = SuiteResult("floor")
    for i, (f, g) in enumerate(comparable_pairs(seed, trials)):
        if compare(f, g).relation is not Relation.LESS_EQ:
            continue
        fc = floor_condition(f, g, n)
        res.check(fc.passed, lambda: f"comparable pair {i}: floor condition fails at {fc.failure}")
    return res


# -- semicontinuity and continuity ------------------------------------------------


def suite_semicontinuity(seed=0, trials: int = 200, continuity_points: int = 100) -> SuiteResult:
    res = SuiteResult("semicontinuity")
    gens = _generators(seed, trials)
    rng = trial_rng(seed, "semicontinuity", 0)
    for gi, f in enumerate(gens):
        for b in f.breakpoints:
            fl, fx, fr = f.limits(b)
            for n in (2, 3, 5):
                d = semicontinuity_probe(f, b, n)
                res.check(d.lower_semicontinuous == (fl == fx) and d.upper_semicontinuous == (fx == fr),
                          lambda: f"generator {gi}: probe disagrees at node {fmt(b)}, n={n}")
        k = kolmogorov_probe(f, 2)
        if f.jumps:
            w = k.strictness_witness
            ok = (not k.strict and w is not None and len(set(w)) > 1
                  and quasi_mean(f, w) in (min(w), max(w)) and not k.all_pass)
            res.check(ok, lambda: f"generator {gi}: no verified strictness witness")
        else:
            res.check(k.all_pass, lambda: f"generator {gi}: continuous generator fails a probe")
    for c in range(continuity_points):
        f = gens[c % len(gens)]
        x = random_points(rng, f, 1, node_bias=0.0)[0]
        for n in (2, 3, 5):
            d = semicontinuity_probe(f, x, n)
            res.check(d.continuous, lambda: f"continuity point {fmt(x)} reported discontinuous, n={n}")
    return res


# -- the zero-spanning mean -------------------------------------------------------


def suite_frak(seed=0, trials: int = 10_000) -> SuiteResult:
    res = SuiteResult("zero-spanning")
    rep = prop_m_experiment(-1, 1, 2, trials, seed)
    res.check(rep.passed and not rep.equality_failures,
              lambda: f"experiment on (-1, 1), n=2 fails: {rep.equality_failures[:3]}")
    res.checks += rep.equality_passed - 1
    m, xs, gm, fm = escape_witness(-1, 1, 2)
    res.check(m == 11 and gm == Fraction(1, 22) and fm == 0, lambda: f"escape datum m={m}, {fmt(gm)}")
    f = frak_generator(-1, 1, 2)
    res.check(quasi_mean(f, (0, Fraction(1, 2))) == 0, lambda: "non-strictness witness (0, 1/2)")
    for a, b in ((Fraction(-2), Fraction(3)), (Fraction(-1, 2), Fraction(5)), (Fraction(-7, 3), Fraction(1, 4))):
        for n in (2, 3, 4):
            r = prop_m_experiment(a, b, n, max(1, trials // 50), seed)
            res.check(r.passed, lambda: f"experiment on ({fmt(a)}, {fmt(b)}), n={n} fails")
            g = frak_generator(a, b, n)
            rng = trial_rng(seed, "frak-inverse", n)
            for _ in range(50):
                u = rational_between(rng, g.conv_range().left, g.conv_range().right, 97)
                res.check(g.inverse(u) == frak_inverse(a, b, n, u), lambda: f"inverse formula at {fmt(u)}")
    rng = trial_rng(seed, "frak-positive", 0)
    for _ in range(100):
        xs = [rational_between(rng, Fraction(1, 10), Fraction(5), 31) for _ in range(rng.randint(1, 6))]
        res.check(frak_m(xs) == sum(xs) / len(xs), lambda: f"frak_m{_vec(xs)} is not the arithmetic mean")
    return res


# -- serialization ------------------------------------------------------------------


def suite_roundtrip(seed=0, trials: int = 100) -> SuiteResult:
    res = SuiteResult("roundtrip")
    for i, f in enumerate(_generators(seed, trials)):
        res.check(parse_function(dump_function(f)) == f, lambda: f"generator {i}: text round trip")
        for h in (f.lower_envelope(), f.upper_envelope()):
            res.check(function_from_dict(function_to_dict(h)) == h, lambda: f"generator {i}: envelope round trip")
        res.check(continuous_from_dict(continuous_to_dict(f.inverse)) == f.inverse,
                  lambda: f"generator {i}: inverse round trip")
    return res


SUITES = {
    "inverse": suite_inverse,
    "mean-value": suite_mean_value,
    "envelopes": suite_envelopes,
    "reduction": suite_reduction,
    "compare": suite_compare,
    "equal": suite_equal,
    "floor": suite_floor,
    "semicontinuity": suite_semicontinuity,
    "zero-spanning": suite_frak,
    "roundtrip": suite_roundtrip,
}


def run_suite(name: str, seed=0, trials: Optional[int] = None) -> SuiteResult:
    """Run one suite; ``trials`` overrides its primary trial count."""
    fn = SUITES[name]
    start = time.perf_counter()
    res = fn(seed) if trials is None else fn(seed, trials)
    res.seconds = time.perf_counter() - start
    return res


def run_all(seed=0, trials: Optional[int] = None, names=None) -> list:
    return [run_suite(n, seed, trials) for n in (names or SUITES)]
