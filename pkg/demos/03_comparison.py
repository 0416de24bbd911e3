# Comparing two means for every arity at once.
# Run: python demos/03_comparison.py

import random
from fractions import Fraction as F
from pathlib import Path

from gqam import (MonotonePWL, OpenInterval, Relation, Segment, compare, floor_condition,
                  load_function, quasi_mean, weighted_quasi_mean)

here = Path(__file__).parent
J = load_function(here / "data" / "j.json")
ident = load_function(here / "data" / "id.json")
g = MonotonePWL(OpenInterval(0, 2), (Segment(0, 1, 1, 0), Segment(1, 2, 2, -1)), (None,))

# %% identity against a convex kink: comparable, with a convex bridge
v = compare(ident, g)
print(v.relation.name, "bridge:", v.certificate)
rng = random.Random(1)
worst = max(quasi_mean(ident, xs) - quasi_mean(g, xs)
            for xs in ([F(rng.randint(1, 99), 50) for _ in range(rng.randint(1, 6))] for _ in range(2000)))
print("largest A_id - A_g over 2000 random vectors:", worst)

# %% J against the identity: incomparable, refuted in both directions
v = compare(J, ident)
print(v.relation.name)
for w, cx in zip(v.witnesses, v.counterexamples):
    print(f"  against {w.direction.name}: triple ({w.x}, {w.t}, {w.y}), ratios {w.ratio_f} vs {w.ratio_g}")
    print(f"    weights ({cx.weights[0]}, {cx.weights[1]}): A_J = {cx.mean_f}, A_id = {cx.mean_g}, t = {cx.t}")
    assert weighted_quasi_mean(J, cx.points, cx.weights) == cx.mean_f

# %% affinely related generators give the same mean
v = compare(J, J.affine_image(2, 3))
print(v.relation.name, "f = alpha g + beta with (alpha, beta) =", *v.certificate)
print(v.relation is Relation.EQUAL)

# %% the floor condition is necessary for comparability at a fixed arity, not sufficient
print("floor n=2 on (1/2, 5/4, 3/2):", floor_condition(ident, J, 2, [(F(1, 2), F(5, 4), F(3, 2))]).passed)
fc = floor_condition(J, ident, 8, [(F(1, 2), F(3, 4), F(3, 2))])
print("floor n=8 on (1/2, 3/4, 3/2):", fc.passed, "first failing m =", fc.failure[3])
