"""Finite fields and the ordering of the exponent grid.

Run with ``python3 demos/01_field_and_ordering.py``.
"""

import numpy as np

from gtcodes import enumerate_H, make_field

# %%
# Prime fields use residues. The primitive element is the smallest generator.
F5 = make_field(5)
print("F_5 alpha =", F5.alpha, "powers:", F5.exp_table.tolist())

# %%
# Extension fields store elements as base-p digit strings packed into ints.
# For F_9 the modulus is x^2 + c1 x + c0, listed low coefficient first.
F9 = make_field(9)
print("F_9 modulus coefficients:", F9.modulus, "alpha =", F9.alpha)
a = np.arange(9)
print("a * alpha over F_9:", F9.mul(a, F9.alpha).tolist())
print("a + a over F_9:   ", F9.add(a, a).tolist())

# %%
# The exponent grid H = {0..q-2}^r. Points fixed by u -> -u come first.
order = enumerate_H(5, 2)
print("n =", order.n, "fixed points:", order.n_fixed)
for j, u in enumerate(order.points):
    print(f"{j + 1:2d} {u}  sigma -> {order.points[order.sigma_perm[j]]}")
