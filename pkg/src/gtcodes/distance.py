"""Minimum distance: exhaustive enumeration and control-matrix column rank."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator

import numpy as np

from .codes import CodeSpec, control_matrix, evaluation_matrix
from .errors import BudgetExceeded, EmptyU
from .exponents import dual_set
from .linalg import columns_independent, rank

DEFAULT_BUDGET = 10**7
BLOCK_ROWS = 2**15
COMBO_CHUNK = 2**13


def default_budget() -> int:
    env = os.environ.get("GTC_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class DistanceResult:
    d: int
    method: str
    certified_lower_bound: int = 1
    work: dict = dc_field(default_factory=dict)
    partial: bool = False

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "method": self.method,
            "certified_lower_bound": self.certified_lower_bound,
            "work": dict(self.work),
            "partial": self.partial,
        }


# -- exhaustive enumeration ------------------------------------------------


def _codeword_blocks(spec: CodeSpec, budget: int | None) -> Iterator[np.ndarray]:
    """Yield blocks of codewords that together cover C_U exactly once.

    Each message coordinate in F_q is split into m digits over F_p, so the
    code is the F_p-span of k*m rows beta_t * G_j. The low digits are
    tabulated once; the high digits run an odometer and each step adds the
    rows whose digit changed to a running base vector.
    """
    budget = default_budget() if budget is None else budget
    field = spec.field
    p, q, k = field.p, field.q, spec.k
    required = q**k - 1
    if required > budget:
        raise BudgetExceeded(
            f"exhaustive search needs {required} codewords, budget is {budget}",
            required=required,
        )
    if k == 0:
        yield np.zeros((1, spec.n), dtype=np.int64)
        return
    G = spec.rows()
    betas = [p**t for t in range(field.m)]
    E = np.array([field.mul(b, G[j]) for j in range(k) for b in betas], dtype=np.int64)
    K = len(E)
    n_low = min(K, max(1, int(math.log(BLOCK_ROWS, p))))
    table = np.zeros((1, spec.n), dtype=np.int64)
    for s in range(n_low):
        steps = [table]
        row = np.zeros(spec.n, dtype=np.int64)
        for _ in range(p - 1):
            row = field.add(row, E[s])
            steps.append(field.add(table, row[None, :]))
        table = np.concatenate(steps)
    high = E[n_low:]
    digits = [0] * len(high)
    base = np.zeros(spec.n, dtype=np.int64)
    while True:
        yield table if not base.any() else field.add(table, base[None, :])
        s = 0
        while s < len(high):
            base = field.add(base, high[s])
            digits[s] = (digits[s] + 1) % p
            if digits[s]:
                break
            s += 1
        else:
            return


def min_distance_exhaustive(spec: CodeSpec, budget: int | None = None) -> DistanceResult:
    """Minimum weight over all nonzero messages."""
    if spec.k == 0:
        raise EmptyU("the zero code has no minimum distance")
    best = spec.n
    count = 0
    for block in _codeword_blocks(spec, budget):
        w = np.count_nonzero(block, axis=1)
        count += len(w)
        nz = w[w > 0]
        if len(nz):
            best = min(best, int(nz.min()))
    return DistanceResult(best, "exhaustive", 1, {"codewords": count - 1})


def weight_distribution(spec: CodeSpec, budget: int | None = None) -> dict[int, int]:
    counts = np.zeros(spec.n + 1, dtype=np.int64)
    for block in _codeword_blocks(spec, budget):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=spec.n + 1)
    return {w: int(c) for w, c in enumerate(counts) if c}


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * math.comb(i, s) * math.comb(n - i, j - s)
        for s in range(j + 1)
    )


def macwilliams_transform(dist: dict[int, int], n: int, q: int) -> dict[int, Fraction]:
    """Weight distribution of the dual code predicted from ``dist``."""
    size = sum(dist.values())
    out = {}
    for j in range(n + 1):
        b = Fraction(sum(a * krawtchouk(j, i, n, q) for i, a in dist.items()), size)
        if b:
            out[j] = b
    return out


# -- column rank of the control matrix -------------------------------------


def _combination_chunks(n: int, w: int) -> Iterator[np.ndarray]:
    it = itertools.combinations(range(n), w)
    while True:
        chunk = list(itertools.islice(it, COMBO_CHUNK))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64).reshape(len(chunk), w)


def _all_independent(field, H: np.ndarray, w: int) -> bool:
    """Whether every w columns of H are linearly independent."""
    if w == 0:
        return True
    if w > len(H):
        return False
    for combos in _combination_chunks(H.shape[1], w):
        B = np.transpose(H[:, combos], (1, 0, 2))
        if not columns_independent(field, B).all():
            return False
    return True


def _first_dependent_size(field, H: np.ndarray, max_w: int, budget: int) -> tuple[int | None, int]:
    """Smallest w <= max_w such that some w columns of H are dependent.

    Returns ``(w or None, subsets_tested)``. Works level by level: every
    independent set S of size w carries a basis N_S of the left null space of
    H[:, S], and a column c extends S independently iff N_S c != 0. Each
    (w+1)-set is reached once, from its prefix S and its largest column.
    When a level would not fit in memory the remaining sizes are checked
    from scratch with batched elimination.
    """
    m, n = H.shape
    if max_w < 1:
        return None, 0
    if m == 0:
        return 1, n
    N = np.eye(m, dtype=np.int64)[None]
    last = np.array([-1])
    work = 0
    for w in range(max_w):
        # states: independent w-sets; test all (w+1)-sets
        cand = np.arange(n)[None, :] > last[:, None]
        tests = int(cand.sum())
        if tests == 0:
            return None, work
        if w == m:
            return w + 1, work
        rows = m - w
        if len(N) * n * rows * m > MAX_LEVEL_ENTRIES:
            for v in range(w + 1, max_w + 1):
                cost = math.comb(n, v)
                _charge(work, cost, budget, v)
                work += cost
                if not _all_independent(field, H, v):
                    return v, work
            return None, work
        _charge(work, tests, budget, w + 1)
        work += tests
        Y = field.matmul(N.reshape(-1, m), H).reshape(len(N), rows, n)
        nz = Y != 0
        if (cand & ~nz.any(axis=1)).any():
            return w + 1, work
        s_idx, j_idx = np.nonzero(cand)
        y = Y[s_idx, :, j_idx]
        t = np.argmax(y != 0, axis=1)
        T = np.arange(len(t))
        Ns = N[s_idx]
        coef = field.mul(y, field.inv(y[T, t])[:, None])
        Nn = field.sub(Ns, field.mul(coef[:, :, None], Ns[T, t][:, None, :]))
        keep = np.arange(rows)[None, :] != t[:, None]
        N = Nn[keep].reshape(len(t), rows - 1, m)
        last = j_idx
    return None, work


MAX_LEVEL_ENTRIES = 2**25


def _charge(work: int, cost: int, budget: int, size: int) -> None:
    if work + cost > budget:
        raise BudgetExceeded(
            f"checking all {size}-column subsets exceeds the budget {budget}",
            required=work + cost,
            partial=size,
        )


# (q, r, U) -> (smallest dependent size or None, largest size fully scanned)
_SCAN_CACHE: dict = {}


def _scan(spec: CodeSpec, max_w: int, budget: int) -> tuple[int | None, int]:
    key = (spec.q, spec.r, spec.U.members)
    hit = _SCAN_CACHE.get(key)
    if hit is not None:
        found, scanned = hit
        if found is not None:
            return (found if found <= max_w else None), 0
        if scanned >= max_w:
            return None, 0
    entries = (spec.n - spec.k) * spec.n
    if entries > MAX_LEVEL_ENTRIES:
        raise BudgetExceeded(
            f"control matrix has {entries} entries, more than {MAX_LEVEL_ENTRIES}",
            required=entries,
            partial=1,
        )
    found, work = _first_dependent_size(spec.field, control_matrix(spec), max_w, budget)
    if len(_SCAN_CACHE) > 4096:
        _SCAN_CACHE.clear()
    _SCAN_CACHE[key] = (found, max_w)
    return found, work


def min_distance_column_rank(spec: CodeSpec, budget: int | None = None) -> DistanceResult:
    """Smallest number of linearly dependent columns of the control matrix.

    On BudgetExceeded, ``exc.partial`` is a DistanceResult flagged partial
    whose ``certified_lower_bound`` is the bound proved before stopping.
    """
    if spec.k == 0:
        raise EmptyU("the zero code has no minimum distance")
    budget = default_budget() if budget is None else budget
    try:
        d, work = _scan(spec, spec.n, budget)
    except BudgetExceeded as exc:
        bound = exc.partial
        exc.partial = DistanceResult(bound, "column-rank", bound, {"subsets_required": exc.required}, partial=True)
        raise
    assert d is not None, "n + 1 columns are always dependent"
    return DistanceResult(d, "column-rank", d, {"subsets": work})


def certify_lower_bound(spec: CodeSpec, d: int, budget: int | None = None) -> bool:
    """True iff every d - 1 columns of the control matrix are independent.

    A True answer certifies that the minimum distance is at least d.
    """
    if not 1 <= d <= spec.n + 1:
        raise ValueError(f"d must lie in 1..{spec.n + 1}")
    budget = default_budget() if budget is None else budget
    found, _ = _scan(spec, d - 1, budget)
    return found is None


def certify_lower_bound_minors(spec: CodeSpec, d: int) -> bool:
    """Same criterion phrased with square minors of the evaluation matrix.

    For every set S of d - 1 points of H look for V inside U^perp of the same
    size with det M(S, V) != 0. Exponential; meant for small n as a check on
    :func:`certify_lower_bound`.
    """
    if d <= 1:
        return True
    M = evaluation_matrix(spec.field, spec.r).entries
    V_pos = spec.order.positions(dual_set(spec.U))
    size = d - 1
    if size > len(V_pos):
        return False
    for S in itertools.combinations(range(spec.n), size):
        rows = M[list(S)]
        if not any(
            rank(spec.field, rows[:, list(V)]) == size
            for V in itertools.combinations(V_pos, size)
        ):
            return False
    return True


def min_distance(spec: CodeSpec, method: str = "exhaustive", budget: int | None = None) -> DistanceResult:
    """Dispatch on ``method`` in {"exhaustive", "rank", "both", "auto"}.

    "both" runs the two engines and raises if they disagree. "auto" prefers
    exhaustive search and falls back to column rank when over budget.
    """
    if method == "exhaustive":
        return min_distance_exhaustive(spec, budget)
    if method in ("rank", "column-rank"):
        return min_distance_column_rank(spec, budget)
    if method == "both":
        a = min_distance_exhaustive(spec, budget)
        b = min_distance_column_rank(spec, budget)
        if a.d != b.d:
            raise AssertionError(f"engines disagree: exhaustive {a.d}, column-rank {b.d}")
        return DistanceResult(a.d, "both", b.certified_lower_bound, {**a.work, **b.work})
    if method == "auto":
        try:
            return min_distance_exhaustive(spec, budget)
        except BudgetExceeded:
            return min_distance_column_rank(spec, budget)
    raise ValueError(f"unknown method {method!r}")
