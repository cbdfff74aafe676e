"""Generalized toric codes: evaluation matrix, encoding and the algebra A.

Codewords are indexed by the canonical order of H (see
:func:`gtcodes.exponents.enumerate_H`); position j holds the value at the
torus point alpha^{i_j}. The same vector is read as the element
sum_j c_j X^{i_j} of A = F_q[X_1..X_r]/(X_k^{q-1} - 1) when shifting or
convolving.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

from .errors import ContextMismatch, EmptyPolytope, EmptyU, LengthMismatch
from .exponents import (
    ExponentSet,
    OrderedH,
    Polytope,
    dual_set,
    enumerate_H,
    lattice_points,
    reduce_set,
)
from .field import FiniteField, make_field

DEFAULT_MAX_MATRIX_N = 2**12


@dataclass(frozen=True)
class EvaluationMatrix:
    field: FiniteField
    order: OrderedH
    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.order.n

    @property
    def r(self) -> int:
        return self.order.r

    def sigma_matrix(self) -> np.ndarray:
        return self.order.sigma_matrix()

    def gram(self) -> np.ndarray:
        """M M^T over F_q; equals (-1)^r I_sigma."""
        return self.field.matmul(self.entries, self.entries.T)

    def inverse(self) -> np.ndarray:
        """(-1)^r I_sigma M."""
        sign = self.field.minus_one if self.r % 2 else 1
        return self.field.mul(sign, self.entries[self.order.sigma_perm])


def _exponent_rows(field: FiniteField, rows: np.ndarray, order: OrderedH) -> np.ndarray:
    """alpha^<u, i> for u in rows (k x r) and i over the ordered H."""
    k = len(rows)
    if k == 0:
        return np.zeros((0, order.n), dtype=np.int64)
    ip = (np.asarray(rows, dtype=np.int64) @ order.coords.T) % (field.q - 1)
    return field.exp_table[ip]


def evaluation_matrix(
    field: FiniteField | int, r: int, max_n: int = DEFAULT_MAX_MATRIX_N
) -> EvaluationMatrix:
    field = _as_field(field)
    order = enumerate_H(field.q, r, max_n=max_n)
    M = _exponent_rows(field, order.coords, order)
    M.setflags(write=False)
    return EvaluationMatrix(field, order, M)


def _as_field(field: FiniteField | int) -> FiniteField:
    return field if isinstance(field, FiniteField) else make_field(field)


@dataclass(frozen=True)
class CodeSpec:
    """The generalized toric code C_U for U a subset of H."""

    field: FiniteField
    r: int
    U: ExponentSet
    order: OrderedH

    @classmethod
    def build(cls, q: int | FiniteField, r: int, U) -> "CodeSpec":
        field = _as_field(q)
        if isinstance(U, str):
            U = ExponentSet.parse(U, field.q, r)
        elif not isinstance(U, ExponentSet):
            U = ExponentSet(U, field.q, r)
        if (U.q, U.r) != (field.q, r):
            raise ContextMismatch(f"U lives in (q={U.q}, r={U.r}), not (q={field.q}, r={r})")
        return cls(field, r, U, enumerate_H(field.q, r))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.order.n

    @property
    def k(self) -> int:
        return len(self.U)

    @property
    def positions(self) -> list[int]:
        """Canonical positions of U; also the row order of the generator matrix."""
        return self.order.positions(self.U)

    @property
    def basis(self) -> list[tuple[int, ...]]:
        """Members of U in canonical order (message coordinate order)."""
        return [self.order[j] for j in self.positions]

    def rows(self) -> np.ndarray:
        """Generator rows; empty (0 x n) when U is empty."""
        coords = np.array(self.basis, dtype=np.int64).reshape(-1, self.r)
        return _exponent_rows(self.field, coords, self.order)

    def __repr__(self) -> str:
        return f"CodeSpec(q={self.q}, r={self.r}, n={self.n}, k={self.k})"


def generator_matrix(spec: CodeSpec) -> np.ndarray:
    if spec.k == 0:
        raise EmptyU("the generator matrix of the zero code has no rows")
    return spec.rows()


def control_matrix(spec: CodeSpec) -> np.ndarray:
    """Generator matrix of the dual code; 0 x n when U = H."""
    return CodeSpec(spec.field, spec.r, dual_set(spec.U), spec.order).rows()


class Codeword:
    """A length-n vector over F_q tied to a (q, r) context."""

    __slots__ = ("field", "r", "values")

    def __init__(self, values, field: FiniteField | int, r: int):
        field = _as_field(field)
        v = np.array(values, dtype=np.int64).ravel()
        n = (field.q - 1) ** r
        if len(v) != n:
            raise LengthMismatch(f"codeword length {len(v)} != n = {n}")
        if v.size and (v.min() < 0 or v.max() >= field.q):
            raise ValueError(f"entries must be element indices of F_{field.q}")
        v.setflags(write=False)
        self.field = field
        self.r = r
        self.values = v

    @classmethod
    def zero(cls, field: FiniteField | int, r: int) -> "Codeword":
        field = _as_field(field)
        return cls(np.zeros((field.q - 1) ** r, dtype=np.int64), field, r)

    @classmethod
    def unit(cls, field: FiniteField | int, r: int) -> "Codeword":
        """delta_0: 1 at the position of i = 0 (the identity of A)."""
        c = np.zeros((_as_field(field).q - 1) ** r, dtype=np.int64)
        c[enumerate_H(_as_field(field).q, r).position[(0,) * r]] = 1
        return cls(c, field, r)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def order(self) -> OrderedH:
        return enumerate_H(self.field.q, self.r)

    def weight(self) -> int:
        return int(np.count_nonzero(self.values))

    def is_zero(self) -> bool:
        return not self.values.any()

    def _check(self, other: "Codeword") -> None:
        if not isinstance(other, Codeword):
            raise TypeError(f"expected Codeword, got {type(other).__name__}")
        if (self.field.q, self.r) != (other.field.q, other.r):
            raise ContextMismatch(
                f"(q={self.q}, r={self.r}) vs (q={other.q}, r={other.r})"
            )

    def __add__(self, other: "Codeword") -> "Codeword":
        self._check(other)
        return Codeword(self.field.add(self.values, other.values), self.field, self.r)

    def __sub__(self, other: "Codeword") -> "Codeword":
        self._check(other)
        return Codeword(self.field.sub(self.values, other.values), self.field, self.r)

    def __neg__(self) -> "Codeword":
        return Codeword(self.field.neg(self.values), self.field, self.r)

    def scale(self, a: int) -> "Codeword":
        return Codeword(self.field.mul(self.field.element(a), self.values), self.field, self.r)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Codeword):
            return NotImplemented
        return (self.q, self.r) == (other.q, other.r) and np.array_equal(self.values, other.values)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Codeword(q={self.q}, r={self.r}, {self.values.tolist()})"

    def tolist(self) -> list[int]:
        return self.values.tolist()


Message = Union[Sequence[int], Mapping[tuple, int], np.ndarray]


def encode(spec: CodeSpec, message: Message) -> Codeword:
    """sum over u in U of lambda_u * ev(Y^u).

    ``message`` is either a mapping u -> lambda_u or a sequence of length k
    aligned with ``spec.basis``.
    """
    if isinstance(message, Mapping):
        extra = set(map(tuple, message)) - set(spec.U.members)
        if extra:
            raise LengthMismatch(f"message keys outside U: {sorted(extra)}")
        lam = [message.get(u, 0) for u in spec.basis]
    else:
        lam = list(np.asarray(message, dtype=np.int64).ravel())
        if len(lam) != spec.k:
            raise LengthMismatch(f"message length {len(lam)} != k = {spec.k}")
    lam = np.array([spec.field.element(x) for x in lam], dtype=np.int64)
    if spec.k == 0:
        return Codeword.zero(spec.field, spec.r)
    return Codeword(spec.field.matmul(lam[None, :], spec.rows())[0], spec.field, spec.r)


def ev_monomial(field: FiniteField | int, r: int, u) -> Codeword:
    """ev(Y^u) for any integer exponent vector u."""
    field = _as_field(field)
    order = enumerate_H(field.q, r)
    row = _exponent_rows(field, np.asarray([u], dtype=np.int64) % (field.q - 1), order)[0]
    return Codeword(row, field, r)


def evaluate_polynomial(
    field: FiniteField | int, r: int, terms: Mapping[Sequence[int], int]
) -> Codeword:
    """Evaluate sum(c * Y^v) at every torus point by direct powering.

    Exponents may be any integers, including negatives. No reduction of
    exponents is performed, so this is an independent route to
    ``encode(reduce_set(...))``.
    """
    field = _as_field(field)
    order = enumerate_H(field.q, r)
    out = []
    for i in order.points:
        t = [field.alpha_pow(x) for x in i]
        acc = 0
        for v, c in terms.items():
            if len(v) != r:
                raise LengthMismatch(f"exponent {tuple(v)} does not have r={r} entries")
            term = field.element(c)
            for tk, vk in zip(t, v):
                term = field.mul(term, field.power(tk, int(vk)))
            acc = field.add(acc, term)
        out.append(acc)
    return Codeword(out, field, r)


def shift(c: Codeword, a: Sequence[int]) -> Codeword:
    """Multiply by X^a in A: the entry at X^i moves to X^{i+a}."""
    a = np.asarray(a, dtype=np.int64)
    if a.shape != (c.r,):
        raise LengthMismatch(f"shift vector must have {c.r} entries")
    order = c.order
    src = order.locate(order.coords - a)
    return Codeword(c.values[src], c.field, c.r)


def convolve(c1: Codeword, c2: Codeword) -> Codeword:
    """Product in A: r-dimensional cyclic convolution, each axis mod q - 1."""
    c1._check(c2)
    field = c1.field
    order = c1.order
    acc = np.zeros(c1.n, dtype=np.int64)
    for j in np.nonzero(c1.values)[0]:
        src = order.locate(order.coords - order.coords[j])
        acc = field.add(acc, field.mul(int(c1.values[j]), c2.values[src]))
    return Codeword(acc, field, c1.r)


def syndrome(spec: CodeSpec, c: Codeword) -> np.ndarray:
    if (c.q, c.r) != (spec.q, spec.r):
        raise ContextMismatch(f"codeword context (q={c.q}, r={c.r}) vs code (q={spec.q}, r={spec.r})")
    H = control_matrix(spec)
    if len(H) == 0:
        return np.zeros(0, dtype=np.int64)
    return spec.field.matmul(H, c.values)


def is_codeword(spec: CodeSpec, c: Codeword) -> bool:
    return not syndrome(spec, c).any()


@dataclass(frozen=True)
class PolytopeCode:
    spec: CodeSpec
    polytope: Polytope
    n_lattice_points: int

    @property
    def k(self) -> int:
        return self.spec.k


def polytope_code(q: int | FiniteField, P: Polytope) -> PolytopeCode:
    """C_P = C_U with U the reduction of the lattice points of P."""
    field = _as_field(q)
    pts = lattice_points(P)
    if not pts:
        raise EmptyPolytope("polytope has no lattice points inside its bounds")
    U = reduce_set(pts, field.q, P.r)
    return PolytopeCode(CodeSpec.build(field, P.r, U), P, len(pts))
