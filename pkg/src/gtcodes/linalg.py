"""Dense Gaussian elimination over F_q on index-encoded numpy arrays."""

from __future__ import annotations

import numpy as np

from .field import FiniteField


def row_reduce(field: FiniteField, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = np.array(A, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(A[rank:, c])[0]
        if len(nz) == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        A[rank] = field.mul(A[rank], field.inv(int(A[rank, c])))
        col = A[:, c].copy()
        col[rank] = 0
        hit = np.nonzero(col)[0]
        if len(hit):
            A[hit] = field.sub(A[hit], field.mul(col[hit, None], A[rank][None, :]))
        pivots.append(c)
        rank += 1
    return A, pivots


def rank(field: FiniteField, A: np.ndarray) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(row_reduce(field, A)[1])


def same_row_space(field: FiniteField, A: np.ndarray, B: np.ndarray) -> bool:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    ra, rb = rank(field, A), rank(field, B)
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(field, np.vstack([A, B])) == ra


def row_space_contains(field: FiniteField, A: np.ndarray, v: np.ndarray) -> bool:
    A = np.asarray(A, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64).reshape(1, -1)
    if A.size == 0:
        return not np.any(v)
    return rank(field, np.vstack([A, v])) == rank(field, A)


def columns_independent(field: FiniteField, B: np.ndarray) -> np.ndarray:
    """For a stack B of shape (S, m, w), whether each m x w slice has rank w.

    Batched elimination: at step c every slice picks its first unused row with
    a nonzero entry in column c and clears column c from its other rows. A
    slice with no such row has a dependent column.
    """
    B = np.array(B, dtype=np.int64, copy=True)
    S, m, w = B.shape
    ok = np.ones(S, dtype=bool)
    if w == 0:
        return ok
    if w > m:
        return np.zeros(S, dtype=bool)
    used = np.zeros((S, m), dtype=bool)
    batch = np.arange(S)
    for c in range(w):
        cand = (B[:, :, c] != 0) & ~used
        has = cand.any(axis=1)
        ok &= has
        piv = np.argmax(cand, axis=1)
        # slices already known dependent still run through harmlessly
        pivot_val = np.where(has, B[batch, piv, c], 1)
        pivot_row = field.mul(B[batch, piv, :], field.inv(pivot_val)[:, None])
        factor = np.where(has[:, None], B[:, :, c], 0)
        factor[batch, piv] = 0
        B = field.sub(B, field.mul(factor[:, :, None], pivot_row[:, None, :]))
        used[batch, piv] |= has
    return ok
