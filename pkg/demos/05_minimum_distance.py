"""Minimum distance by enumeration and by column rank.

Run with ``python3 demos/05_minimum_distance.py``.
"""

import time

from gtcodes import (
    BudgetExceeded,
    CodeSpec,
    certify_lower_bound,
    min_distance_column_rank,
    min_distance_exhaustive,
)

spec = CodeSpec.build(5, 2, "0,0;1,0;2,0;0,1;1,1;2,1")

t = time.perf_counter()
ex = min_distance_exhaustive(spec)
print(f"exhaustive:  d={ex.d}  work={ex.work}  {time.perf_counter() - t:.2f}s")

t = time.perf_counter()
cr = min_distance_column_rank(spec)
print(f"column rank: d={cr.d}  work={cr.work}  {time.perf_counter() - t:.2f}s")

# %%
# A lower bound d holds when every d - 1 columns of the control matrix are
# independent.
for d in range(4, 9):
    print("d >=", d, certify_lower_bound(spec, d))

# %%
# Large searches stop at the work budget and report what they proved so far.
big = CodeSpec.build(7, 2, "0,0;1,0;0,1;2,0")
try:
    min_distance_column_rank(big, budget=5000)
except BudgetExceeded as exc:
    print("budget hit; certified lower bound:", exc.partial.certified_lower_bound)
print("exhaustive answer:", min_distance_exhaustive(big).d)
