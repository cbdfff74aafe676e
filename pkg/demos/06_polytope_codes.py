"""Toric codes from lattice polytopes.

Run with ``python3 demos/06_polytope_codes.py``.
"""

from gtcodes import Polytope, lattice_points, min_distance, polytope_code

# %%
# The rectangle [0,2] x [0,1] has 6 lattice points.
rect = Polytope.box([(0, 2), (0, 1)])
pc = polytope_code(5, rect)
print("points:", lattice_points(rect))
print("n, k =", pc.spec.n, pc.k, " d =", min_distance(pc.spec).d)

# %%
# Exponents are read mod q - 1, so points of a long segment can collide.
seg = polytope_code(5, Polytope.box([(0, 4)]))
print("segment: lattice points", seg.n_lattice_points, "-> k =", seg.k)

# %%
# A triangle given by inequalities a . x <= b.
tri = Polytope(2, [((-1, 0), 0), ((0, -1), 0), ((1, 1), 2)], [(0, 2), (0, 2)])
tc = polytope_code(7, tri)
print("triangle over F_7: k =", tc.k, " d =", min_distance(tc.spec).d)
