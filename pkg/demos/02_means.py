# Means of a discontinuous generator: plain, weighted, envelope, and the
# recovery of a short mean from a longer one.
# Run: python demos/02_means.py

from fractions import Fraction as F
from pathlib import Path

from gqam import (envelope_means, f_average, kolmogorov_probe, load_function, quasi_mean,
                  reduce_from_n, semicontinuity_probe, weighted_quasi_mean)

J = load_function(Path(__file__).parent / "data" / "j.json")
xs = (F(1, 2), F(3, 2))

# %% the f-average 3/2 falls into the gap, so the mean is the jump point
print("f-average:", f_average(J, xs))
print("mean:", quasi_mean(J, xs))
print("weighted (3, 1):", weighted_quasi_mean(J, xs, (3, 1)))
print("weighted (1, 0):", weighted_quasi_mean(J, xs, (1, 0)))  # zero weight drops a point

# %% envelope means are the limits from the left and from the right
ys = (1, F(5, 4))
print("mean at (1, 5/4):", quasi_mean(J, ys))
print("envelope means (left, right):", *envelope_means(J, ys))
for eps in (F(1, 10), F(1, 100), F(1, 1000)):
    print(f"  eps={eps}: from left {quasi_mean(J, [y - eps for y in ys])}, "
          f"from right {quasi_mean(J, [y + eps for y in ys])}")

# %% recover A_2(1/2, 3/2) from 4-variable means, exactly
print("reduce_from_n(n=4):", *reduce_from_n(J, xs, 4))

# %% the jump shows up in the means: not upper semicontinuous, not strict
d = semicontinuity_probe(J, 1, 2)
print("lsc:", d.lower_semicontinuous, " usc:", d.upper_semicontinuous, " witness y =", d.upper_witness)
k = kolmogorov_probe(J, 2)
print("strict:", k.strict, " witness", *k.strictness_witness, "-> mean", quasi_mean(J, k.strictness_witness))
