"""Duality and ideal structure of generalized toric codes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import CodeSpec, Codeword, convolve, ev_monomial
from .errors import ContextMismatch, ZeroIdeal
from .exponents import ExponentSet, dual_set, enumerate_H, reduce
from .field import FiniteField, make_field
from .linalg import rank


def inner_product_basis(field: FiniteField | int, r: int, u: Sequence[int], v: Sequence[int]) -> int:
    """<ev(Y^u), ev(Y^v)> in closed form: (-1)^r if u + v = 0 in H, else 0."""
    if not isinstance(field, FiniteField):
        field = make_field(field)
    if any(reduce(np.add(u, v), field.q)):
        return 0
    return field.minus_one if r % 2 else 1


def dual_code(spec: CodeSpec) -> CodeSpec:
    return CodeSpec(spec.field, spec.r, dual_set(spec.U), spec.order)


@dataclass(frozen=True)
class DualityReport:
    U: ExponentSet
    U_perp: ExponentSet
    gram_ok: bool
    dims_ok: bool
    self_dual: bool
    self_orthogonal: bool

    def to_json(self) -> dict:
        from .exponents import format_points

        return {
            "q": self.U.q,
            "r": self.U.r,
            "n": (self.U.q - 1) ** self.U.r,
            "k": len(self.U),
            "U": format_points(self.U),
            "dualU": format_points(self.U_perp),
            "k_perp": len(self.U_perp),
            "gram_ok": self.gram_ok,
            "dims_ok": self.dims_ok,
            "self_dual": self.self_dual,
            "self_orthogonal": self.self_orthogonal,
        }


def duality_report(spec: CodeSpec) -> DualityReport:
    """Check duality facts by explicit matrix computation."""
    field = spec.field
    dual = dual_code(spec)
    G = spec.rows()
    Gp = dual.rows()
    gram_ok = bool(len(G) == 0 or len(Gp) == 0 or not field.matmul(G, Gp.T).any())
    dims_ok = rank(field, G) + rank(field, Gp) == spec.n
    self_orthogonal = bool(len(G) == 0 or not field.matmul(G, G.T).any())
    return DualityReport(
        U=spec.U,
        U_perp=dual.U,
        gram_ok=gram_ok,
        dims_ok=dims_ok,
        # {ev(Y^u)} is a basis of F_q^n, so equal codes have equal exponent sets
        self_dual=spec.U == dual.U,
        self_orthogonal=self_orthogonal,
    )


def ideal_to_U(field: FiniteField | int, r: int, generators: Sequence[Codeword]) -> ExponentSet:
    """Exponent set U with (generators) = C_U^A as ideals of A.

    Convolving a generator with ev(Y^u) projects it onto the line spanned by
    ev(Y^u); u belongs to U exactly when some projection is nonzero.
    """
    if not isinstance(field, FiniteField):
        field = make_field(field)
    if not generators:
        raise ValueError("need at least one generator")
    for g in generators:
        if (g.q, g.r) != (field.q, r):
            raise ContextMismatch(f"generator context (q={g.q}, r={g.r}) != (q={field.q}, r={r})")
    live = [g for g in generators if not g.is_zero()]
    if not live:
        raise ZeroIdeal("all generators are zero; the ideal is C_U for U empty")
    order = enumerate_H(field.q, r)
    found = []
    for u in order.points:
        e = ev_monomial(field, r, u)
        if any(not convolve(e, g).is_zero() for g in live):
            found.append(u)
    return ExponentSet(found, field.q, r)
