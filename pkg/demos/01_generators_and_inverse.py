# Generators with a jump, their envelopes and the generalized inverse.
# Run: python demos/01_generators_and_inverse.py

from fractions import Fraction as F
from pathlib import Path

from gqam import Position, classify_position, load_function

here = Path(__file__).parent
J = load_function(here / "data" / "j.json")  # x on (0,1), x+1 on (1,2), J(1) = 1
print("J:", J)

# %% values and one-sided limits
for x in (F(1, 2), 1, F(3, 2)):
    lo, v, hi = J.limits(x)
    print(f"J_-({x}) = {lo}   J({x}) = {v}   J_+({x}) = {hi}")
print("jumps:", [(str(j.x), str(j.left_limit), str(j.right_limit)) for j in J.jumps])

# %% envelopes: J is already lower semicontinuous at 1
print("lower envelope == J:", J.lower_envelope() == J)
print("upper envelope:", J.upper_envelope())

# %% the generalized inverse is flat over the gap [1, 2]
inv = J.inverse
print("inverse:", inv)
for u in (F(1, 2), 1, F(3, 2), 2, F(5, 2)):
    print(f"  inverse({u}) = {inv(u)}")

# %% left inverse, everywhere (node values included)
print("inverse(J(x)) == x:", all(inv(J(x)) == x for x in (F(1, 3), 1, F(7, 4))))

# %% where the inverse sits, read off the limits alone
for u in (F(1, 2), F(3, 2), F(5, 2)):
    print(f"  u = {u}: inverse(u) vs 1 ->", classify_position(J, 1, u).value)
print(Position.INVERSE_EQ.value, "means u lies in [J_-(1), J_+(1)]")
