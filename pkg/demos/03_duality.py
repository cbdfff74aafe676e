"""Duals of generalized toric codes are again generalized toric codes.

Run with ``python3 demos/03_duality.py``.
"""

import itertools

import numpy as np

from gtcodes import CodeSpec, dual_code, duality_report, sigma_fixed_count

rng = np.random.default_rng(0)
H = list(itertools.product(range(6), repeat=2))  # q = 7, r = 2

for _ in range(5):
    k = int(rng.integers(1, len(H)))
    U = [H[i] for i in rng.choice(len(H), size=k, replace=False)]
    spec = CodeSpec.build(7, 2, U)
    rep = duality_report(spec)
    print(f"k={spec.k:2d}  k_perp={len(rep.U_perp):2d}  G G_perp^T = 0: {rep.gram_ok}  self-dual: {rep.self_dual}")

# %%
# Taking the dual twice gives back U.
print("double dual:", dual_code(dual_code(spec)).U == spec.U)

# %%
# A self-dual C_U would need |U| = n/2 and U^perp = U. The points fixed by
# u -> -u always block this. Counts per (q, r):
for q in (3, 4, 5, 7, 8, 9):
    print(q, [sigma_fixed_count(q, r) for r in range(1, 5)])
