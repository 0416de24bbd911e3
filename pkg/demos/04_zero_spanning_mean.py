# The mean that is 0 whenever the arguments straddle 0, and the arithmetic
# mean otherwise. On (-1, 1) and for two arguments it has a discontinuous
# generator; with eleven arguments the same generator gives a different mean.
# Run: python demos/04_zero_spanning_mean.py

from fractions import Fraction as F

from gqam import frak_generator, frak_m, prop_m_experiment, quasi_mean
from gqam.frak import escape_witness

f = frak_generator(-1, 1, 2)
print("generator:", f)
print("inverse:", f.inverse)  # flat at 0 over [-1, 1]

# %% a few values, both ways
for xs in ((F(-1, 2), F(1, 2)), (F(1, 4), F(3, 4)), (F(-9, 10), F(-1, 10)), (0, F(1, 2))):
    print(", ".join(map(str, xs)), "->", quasi_mean(f, xs), frak_m(xs))

# %% the full experiment: random pairs, plateau bounds, non-strictness, arity escape
rep = prop_m_experiment(-1, 1, 2, trials=2000, seed=7)
print("\n".join(rep.lines()))

# %% the escape, by hand: average of f-values is (-5/4 + 10 * 5/4) / 11 = 45/44 > 1
m, xs, gm, fm = escape_witness(-1, 1, 2)
print(f"m = {m}: generator mean {gm}, zero-spanning mean {fm}")

# %% other intervals and arities behave the same way
for a, b, n in ((F(-2), F(3), 3), (F(-1, 2), F(5), 4)):
    r = prop_m_experiment(a, b, n, trials=300, seed=1)
    print(f"({a}, {b}), n={n}: passed={r.passed}, escape at m={r.escape_m}")
