"""The exponent grid H = {0..q-2}^r, the involution sigma and polytope points."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DimensionTooLarge, InvalidExponent

MAX_R = 8
DEFAULT_MAX_N = 2**20

ExponentVector = tuple[int, ...]


def _check_context(q: int, r: int) -> None:
    if q < 3:
        raise InvalidExponent(f"q must be at least 3, got {q}")
    if not 1 <= r <= MAX_R:
        raise DimensionTooLarge(f"r must lie in 1..{MAX_R}, got {r}")


def reduce(v: Sequence[int], q: int) -> ExponentVector:
    """Componentwise remainder mod q - 1 (the representative in H)."""
    return tuple(int(x) % (q - 1) for x in v)


def sigma(u: Sequence[int], q: int) -> ExponentVector:
    """The involution u -> -u mod q - 1."""
    return tuple((-int(x)) % (q - 1) for x in u)


def in_H(u: Sequence[int], q: int, r: int) -> bool:
    return len(u) == r and all(0 <= x <= q - 2 for x in u)


class ExponentSet:
    """A deduplicated subset of H for a fixed (q, r).

    Iteration is lexicographic. Compares equal to another ExponentSet with the
    same context and members.
    """

    __slots__ = ("q", "r", "_members")

    def __init__(self, members: Iterable[Sequence[int]], q: int, r: int):
        _check_context(q, r)
        self.q = q
        self.r = r
        pts = set()
        for u in members:
            u = tuple(int(x) for x in u)
            if not in_H(u, q, r):
                raise InvalidExponent(f"{u} is not a point of H for q={q}, r={r}")
            pts.add(u)
        self._members = frozenset(pts)

    @classmethod
    def full(cls, q: int, r: int) -> "ExponentSet":
        return cls(itertools.product(range(q - 1), repeat=r), q, r)

    @classmethod
    def empty(cls, q: int, r: int) -> "ExponentSet":
        return cls((), q, r)

    @classmethod
    def parse(cls, text: str, q: int, r: int) -> "ExponentSet":
        return cls(parse_points(text), q, r)

    @property
    def members(self) -> frozenset[ExponentVector]:
        return self._members

    def __iter__(self) -> Iterator[ExponentVector]:
        return iter(sorted(self._members))

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, u: object) -> bool:
        return tuple(u) in self._members  # type: ignore[arg-type]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExponentSet):
            return NotImplemented
        return (self.q, self.r, self._members) == (other.q, other.r, other._members)

    def __hash__(self) -> int:
        return hash((self.q, self.r, self._members))

    def __le__(self, other: "ExponentSet") -> bool:
        return self._members <= other._members

    def __repr__(self) -> str:
        return f"ExponentSet({format_points(self)!r}, q={self.q}, r={self.r})"

    def image(self) -> "ExponentSet":
        """U' = {sigma(u) : u in U}."""
        return ExponentSet((sigma(u, self.q) for u in self._members), self.q, self.r)

    def complement(self) -> "ExponentSet":
        full = itertools.product(range(self.q - 1), repeat=self.r)
        return ExponentSet((u for u in full if u not in self._members), self.q, self.r)


def dual_set(U: ExponentSet) -> ExponentSet:
    """U^perp = H minus sigma(U)."""
    return U.image().complement()


def reduce_set(V: Iterable[Sequence[int]], q: int, r: int | None = None) -> ExponentSet:
    V = [tuple(v) for v in V]
    if r is None:
        if not V:
            raise ValueError("r is required when V is empty")
        r = len(V[0])
    return ExponentSet((reduce(v, q) for v in V), q, r)


@dataclass(frozen=True)
class OrderedH:
    """All of H listed with sigma-fixed points first, then adjacent sigma-pairs."""

    q: int
    r: int
    points: tuple[ExponentVector, ...]
    n_fixed: int
    coords: np.ndarray = dc_field(repr=False, compare=False)
    position: dict = dc_field(repr=False, compare=False)
    sigma_perm: np.ndarray = dc_field(repr=False, compare=False)
    grid_to_pos: np.ndarray = dc_field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, j: int) -> ExponentVector:
        return self.points[j]

    def positions(self, U: Iterable[Sequence[int]]) -> list[int]:
        """Positions of the members of U, in canonical order."""
        return sorted(self.position[tuple(u)] for u in U)

    def locate(self, vectors: np.ndarray) -> np.ndarray:
        """Positions of arbitrary integer vectors (rows) after reduction."""
        v = np.asarray(vectors, dtype=np.int64) % (self.q - 1)
        flat = np.ravel_multi_index(tuple(v.T), (self.q - 1,) * self.r)
        return self.grid_to_pos[flat]

    def sigma_matrix(self) -> np.ndarray:
        """0/1 permutation matrix of sigma in this order."""
        n = self.n
        out = np.zeros((n, n), dtype=np.int64)
        out[np.arange(n), self.sigma_perm] = 1
        return out


_ORDER_CACHE: dict[tuple[int, int], OrderedH] = {}


def enumerate_H(q: int, r: int, max_n: int = DEFAULT_MAX_N) -> OrderedH:
    """Canonical ordering of H.

    Fixed points of sigma come first in lexicographic order. The remaining
    points are scanned lexicographically and each unplaced u is emitted
    immediately followed by sigma(u).
    """
    _check_context(q, r)
    n = (q - 1) ** r
    if n > max_n:
        raise DimensionTooLarge(f"n = (q-1)^r = {n} exceeds the budget {max_n}")
    key = (q, r)
    if key in _ORDER_CACHE:
        return _ORDER_CACHE[key]

    grid = list(itertools.product(range(q - 1), repeat=r))
    fixed = [u for u in grid if sigma(u, q) == u]
    order = list(fixed)
    placed = set(fixed)
    for u in grid:
        if u in placed:
            continue
        s = sigma(u, q)
        order += [u, s]
        placed.update((u, s))

    position = {u: j for j, u in enumerate(order)}
    coords = np.array(order, dtype=np.int64).reshape(n, r)
    sigma_perm = np.array([position[sigma(u, q)] for u in order], dtype=np.int64)
    grid_to_pos = np.empty(n, dtype=np.int64)
    flat = np.ravel_multi_index(tuple(coords.T), (q - 1,) * r)
    grid_to_pos[flat] = np.arange(n)
    for arr in (coords, sigma_perm, grid_to_pos):
        arr.setflags(write=False)
    result = OrderedH(q, r, tuple(order), len(fixed), coords, position, sigma_perm, grid_to_pos)
    _ORDER_CACHE[key] = result
    return result


def sigma_fixed_count(q: int, r: int) -> int:
    """Number of u in H with sigma(u) = u, by enumeration."""
    _check_context(q, r)
    return sum(1 for u in itertools.product(range(q - 1), repeat=r) if sigma(u, q) == u)


@dataclass(frozen=True)
class Polytope:
    """Integer points of {x : a.x <= b for each inequality} inside a finite box."""

    r: int
    inequalities: tuple[tuple[tuple[int, ...], int], ...]
    bounds: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.bounds) != self.r:
            raise ValueError(f"need {self.r} bounds, got {len(self.bounds)}")
        for lo, hi in self.bounds:
            if lo > hi:
                raise ValueError(f"empty bound interval [{lo}, {hi}]")
        for a, _ in self.inequalities:
            if len(a) != self.r:
                raise ValueError(f"inequality normal {a} has wrong length")

    @classmethod
    def from_json(cls, doc: dict) -> "Polytope":
        r = int(doc["r"])
        ineqs = tuple(
            (tuple(int(x) for x in item["a"]), int(item["b"])) for item in doc.get("ineqs", [])
        )
        bounds = tuple((int(lo), int(hi)) for lo, hi in doc["bounds"])
        return cls(r, ineqs, bounds)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "ineqs": [{"a": list(a), "b": b} for a, b in self.inequalities],
            "bounds": [list(b) for b in self.bounds],
        }

    @classmethod
    def box(cls, bounds: Sequence[tuple[int, int]]) -> "Polytope":
        return cls(len(bounds), (), tuple(tuple(b) for b in bounds))


def lattice_points(P: Polytope) -> list[ExponentVector]:
    """All integer points of P within its bounds, lexicographic."""
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in P.bounds]
    pts = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, P.r)
    keep = np.ones(len(pts), dtype=bool)
    for a, b in P.inequalities:
        keep &= pts @ np.asarray(a, dtype=np.int64) <= b
    return [tuple(int(x) for x in row) for row in pts[keep]]


_POINT_SEP = re.compile(r"\s*;\s*")


def parse_points(text: str) -> list[ExponentVector]:
    """Parse "c1,c2;c1,c2;..." into integer tuples. Blank text is the empty set."""
    text = text.strip()
    if not text:
        return []
    out = []
    for chunk in _POINT_SEP.split(text):
        if not chunk:
            continue
        try:
            out.append(tuple(int(x) for x in chunk.split(",")))
        except ValueError as exc:
            raise InvalidExponent(f"cannot parse point {chunk!r}") from exc
    return out


def format_points(points: Iterable[Sequence[int]]) -> str:
    return ";".join(",".join(str(int(x)) for x in u) for u in points)
