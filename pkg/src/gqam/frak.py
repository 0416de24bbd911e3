"""The zero-spanning mean and its discontinuous generator.

``frak_m(x)`` is 0 when the arguments straddle zero and their arithmetic mean
otherwise. On a bounded interval ``(a, b)`` around 0 and for one fixed arity
``n`` it is the generalized quasiarithmetic mean of :func:`frak_generator`;
no continuous generator reproduces it, and no single generator does so for
every arity at once. :func:`prop_m_experiment` checks all three facts.
"""

from __future__ import annotations

import random
from itertools import product
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .analysis import KolmogorovReport, kolmogorov_probe
from .core import MonotonePWL, Segment
from .errors import BadParameters, EmptyVector
from .interval import OpenInterval
from .means import quasi_mean
from .rational import as_rational, fmt


def frak_m(xs: Sequence) -> Fraction:
    xs = [as_rational(x) for x in xs]
    if not xs:
        raise EmptyVector("mean of an empty vector")
    if min(xs) <= 0 <= max(xs):
        return Fraction(0)
    return sum(xs) / len(xs)


def _check(a, b, n):
    a, b = as_rational(a), as_rational(b)
    if not a < 0 < b:
        raise BadParameters(f"need a < 0 < b, got a={fmt(a)}, b={fmt(b)}")
    if not isinstance(n, int) or n < 2:
        raise BadParameters(f"need an integer n >= 2, got {n!r}")
    return a, b


def frak_generator(a, b, n: int) -> MonotonePWL:
    """``-x/(a n) - 1`` on ``(a, 0)``, ``0`` at ``0``, ``x/(b n) + 1`` on ``(0, b)``."""
    a, b = _check(a, b, n)
    I = OpenInterval(a, b)
    left = Segment(a, 0, -1 / (a * n), -1)
    right = Segment(0, b, 1 / (b * n), 1)
    return MonotonePWL(I, (left, right), (Fraction(0),))


def frak_inverse(a, b, n: int, u) -> Fraction:
    """Closed-form generalized inverse of :func:`frak_generator`, used as a cross-check."""
    a, b = _check(a, b, n)
    u = as_rational(u)
    if not -Fraction(n + 1, n) < u < Fraction(n + 1, n):
        raise BadParameters(f"u={fmt(u)} outside the range of the generator")
    if u < -1:
        return -a * n * (u + 1)
    if u <= 1:
        return Fraction(0)
    return b * n * (u - 1)


def escape_witness(a, b, n: int) -> tuple:
    """Smallest ``m`` for which ``(a/2, b/2, ..., b/2)`` of length ``m`` separates
    the arity-``m`` generator mean from ``frak_m``.

    The f-average leaves the plateau ``[-1, 1]`` once
    ``f(a/2) + (m-1) f(b/2) > m``, i.e. ``m - 1 > (1 - f(a/2)) / (f(b/2) - 1)``.
    """
    a, b = _check(a, b, n)
    f = frak_generator(a, b, n)
    p, q = a / 2, b / 2
    bound = (1 - f(p)) / (f(q) - 1)
    m = bound.numerator // bound.denominator + 2
    xs = (p,) + (q,) * (m - 1)
    return m, xs, quasi_mean(f, xs), frak_m(xs)


def random_rational(rng: random.Random, lo: Fraction, hi: Fraction, max_den: int = 64) -> Fraction:
    """Random rational strictly inside ``(lo, hi)`` on a grid of step ``(hi-lo)/den``."""
    den = rng.randint(2, max_den)
    return lo + (hi - lo) * Fraction(rng.randint(1, den - 1), den)


@dataclass
class ExperimentReport:
    a: Fraction
    b: Fraction
    n: int
    trials: int
    seed: int
    equality_passed: int = 0
    equality_failures: list = field(default_factory=list)
    grid_checked: int = 0
    plateau_upper: Fraction = Fraction(0)  # (f(0) + (n-1) f(b-)) / n
    plateau_lower: Fraction = Fraction(0)
    plateau_ok: bool = False
    nonstrict_witness: tuple = ()
    nonstrict_mean: Fraction = Fraction(0)
    kolmogorov: KolmogorovReport = None
    escape_m: int = 0
    escape_vector: tuple = ()
    escape_generator_mean: Fraction = Fraction(0)
    escape_frak_mean: Fraction = Fraction(0)

    @property
    def passed(self) -> bool:
        return (not self.equality_failures and self.plateau_ok
                and self.nonstrict_mean == min(self.nonstrict_witness)
                and self.escape_generator_mean != self.escape_frak_mean)

    def to_dict(self) -> dict:
        k = self.kolmogorov
        return {
            "a": fmt(self.a), "b": fmt(self.b), "n": self.n, "trials": self.trials, "seed": self.seed,
            "equality": {"passed": self.equality_passed, "grid_checked": self.grid_checked,
                         "failures": [[fmt(v) for v in xs] for xs in self.equality_failures]},
            "plateau": {"upper": fmt(self.plateau_upper), "lower": fmt(self.plateau_lower),
                        "inside": self.plateau_ok},
            "nonstrict": {"vector": [fmt(v) for v in self.nonstrict_witness],
                          "mean": fmt(self.nonstrict_mean),
                          "kolmogorov_all_pass": k.all_pass if k else None},
            "escape": {"m": self.escape_m, "vector": [fmt(v) for v in self.escape_vector],
                       "generator_mean": fmt(self.escape_generator_mean),
                       "frak_mean": fmt(self.escape_frak_mean)},
            "passed": self.passed,
        }

    def lines(self) -> list:
        ok = "pass" if self.passed else "FAIL"
        xs = ", ".join(fmt(v) for v in self.escape_vector[:2]) + (", ..." if len(self.escape_vector) > 2 else "")
        return [
            f"zero-spanning mean on ({fmt(self.a)}, {fmt(self.b)}), arity {self.n}: {ok}",
            f"  equality trials: {self.equality_passed}/{self.trials + self.grid_checked} "
            f"({self.trials} random, {self.grid_checked} grid)",
            f"  plateau bounds: {fmt(self.plateau_lower)} <= average <= {fmt(self.plateau_upper)}, "
            f"inside [-1, 1]: {self.plateau_ok}",
            f"  non-strict: mean({', '.join(fmt(v) for v in self.nonstrict_witness)}) = {fmt(self.nonstrict_mean)}",
            f"  arity {self.escape_m}: generator mean({xs}) = {fmt(self.escape_generator_mean)}, "
            f"zero-spanning mean = {fmt(self.escape_frak_mean)}",
        ]


def prop_m_experiment(a, b, n: int, trials: int = 1000, seed: int = 0) -> ExperimentReport:
    """Run the representability experiment for the zero-spanning mean.

    * equality: generator mean equals ``frak_m`` on a small exhaustive grid
      and on ``trials`` seeded random vectors in ``(a, b)^n``;
    * plateau bounds: the extreme f-averages of sign-spanning vectors,
      ``+-(n^2 - 1)/n^2``, stay inside ``[-1, 1]``;
    * non-strictness: a non-diagonal vector whose mean is its minimum;
    * arity escape: a longer vector where the two means differ.
    """
    a, b = _check(a, b, n)
    f = frak_generator(a, b, n)
    rep = ExperimentReport(a, b, n, trials, seed)

    def check(xs):
        if quasi_mean(f, xs) == frak_m(xs):
            rep.equality_passed += 1
        else:
            rep.equality_failures.append(tuple(xs))

    grid = [a + (b - a) * Fraction(k, 8) for k in range(1, 8)] + [Fraction(0)]
    grid = sorted(set(grid))
    if n <= 3:
        for xs in product(grid, repeat=n):
            check(xs)
            rep.grid_checked += 1
    rng = random.Random(seed)
    for _ in range(trials):
        xs = []
        for _ in range(n):
            r = rng.random()
            xs.append(Fraction(0) if r < 0.05 else random_rational(rng, a, b, 1000))
        check(xs)

    sup_b = f.segments[-1].value_to
    inf_a = f.segments[0].value_from
    rep.plateau_upper = (f(0) + (n - 1) * sup_b) / n
    rep.plateau_lower = (f(0) + (n - 1) * inf_a) / n
    rep.plateau_ok = (rep.plateau_upper == Fraction(n * n - 1, n * n) < 1
                      and rep.plateau_lower == Fraction(1 - n * n, n * n) > -1)

    rep.kolmogorov = kolmogorov_probe(f, n)
    rep.nonstrict_witness = rep.kolmogorov.strictness_witness
    rep.nonstrict_mean = quasi_mean(f, rep.nonstrict_witness)

    m, xs, gm, fm = escape_witness(a, b, n)
    rep.escape_m, rep.escape_vector, rep.escape_generator_mean, rep.escape_frak_mean = m, xs, gm, fm
    return rep
