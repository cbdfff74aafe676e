"""The 16 x 16 evaluation matrix over F_5 and a [16, 6] code.

Run with ``python3 demos/02_worked_example_f5.py``.
"""

from gtcodes import CodeSpec, duality_report, evaluation_matrix, min_distance

E = evaluation_matrix(5, 2)
print("evaluation matrix M (rows = exponents u, columns = torus points):")
print(E.entries)

# %%
# M is symmetric, and M M^T is a permutation matrix pairing u with -u.
print("symmetric:", (E.entries == E.entries.T).all())
print("M M^T equals I_sigma:", (E.gram() == E.sigma_matrix()).all())

# %%
# Pick U, the exponents lying in the rectangle [0,2] x [0,1].
spec = CodeSpec.build(5, 2, "0,0;1,0;2,0;0,1;1,1;2,1")
report = duality_report(spec)
print("generator rows (1-based):", [j + 1 for j in spec.positions])
print("control rows (1-based):  ", [j + 1 for j in E.order.positions(report.U_perp)])
print("dual exponents:", sorted(report.U_perp))

# %%
# Minimum distance, from both engines.
res = min_distance(spec, "both")
print(f"[n, k, d] = [{spec.n}, {spec.k}, {res.d}]")
