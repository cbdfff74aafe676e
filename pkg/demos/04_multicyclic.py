"""Codes as ideals of A = F_q[X_1..X_r] / (X_i^(q-1) - 1).

Run with ``python3 demos/04_multicyclic.py``.
"""

from gtcodes import CodeSpec, convolve, encode, ev_monomial, ideal_to_U, is_codeword, shift

spec = CodeSpec.build(5, 2, "0,0;1,0;2,0;0,1;1,1;2,1")
c = encode(spec, [1, 2, 3, 4, 0, 1])
print("codeword:", c.tolist())

# %%
# Multiplying by a monomial X^a is a cyclic shift in each coordinate.
# The code is closed under it.
for a in [(1, 0), (0, 1), (3, 2)]:
    print("shift by", a, "stays in the code:", is_codeword(spec, shift(c, a)))

# %%
# The vectors ev(Y^u) are orthogonal idempotents up to the sign (-1)^r.
e = ev_monomial(5, 2, (1, 0))
f = ev_monomial(5, 2, (0, 1))
print("e * e == e:", convolve(e, e) == e)
print("e * f == 0:", convolve(e, f).is_zero())

# %%
# From any single generator we recover the exponent set of the ideal.
print("recovered U:", sorted(ideal_to_U(5, 2, [c])))
