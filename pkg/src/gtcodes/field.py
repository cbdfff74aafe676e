"""Finite fields F_q with a pinned primitive element and exp/log tables.

Elements are plain integers in ``0..q-1``. For prime fields the integer is
the residue; for extension fields it is the base-``p`` digit string of the
polynomial coefficients, constant term as the least significant digit. All
arithmetic methods accept Python ints or integer numpy arrays and broadcast.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Union

import numpy as np

from .errors import DivisionByZero, NotPrimePower, TooLarge

MAX_ORDER = 2**16

FieldElement = int
ArrayLike = Union[int, np.ndarray]


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (adequate for n <= 2**16)."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _split_prime_power(q: int) -> tuple[int, int]:
    if q < 3:
        raise NotPrimePower(f"field order must be a prime power >= 3, got {q}")
    factors = factorize(q)
    if len(factors) != 1:
        raise NotPrimePower(f"{q} is not a prime power: {factors}")
    ((p, m),) = factors.items()
    return p, m


def _orbit_of_x(coeffs: tuple[int, ...], p: int) -> list[int] | None:
    """Powers of x modulo the monic polynomial x^m + sum(coeffs[j] x^j).

    Returns the exp table if x has order p^m - 1, otherwise None.
    """
    m = len(coeffs)
    q = p**m
    weights = [p**j for j in range(m)]
    digits = [1] + [0] * (m - 1)
    table = []
    for _ in range(q - 1):
        idx = sum(d * w for d, w in zip(digits, weights))
        if table and idx == 1:
            return None
        table.append(idx)
        top = digits[-1]
        digits = [0] + digits[:-1]
        if top:
            digits = [(d - top * c) % p for d, c in zip(digits, coeffs)]
    if sum(d * w for d, w in zip(digits, weights)) != 1:
        return None
    return table


def _prime_generator(p: int) -> int:
    primes = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in primes):
            return g
    raise AssertionError("unreachable: F_p^* is cyclic")


class FiniteField:
    """The field F_q, q = p^m, with a fixed primitive element alpha.

    Use :func:`make_field` rather than constructing this directly; it caches
    one instance per order so tables are shared.
    """

    def __init__(self, q: int):
        p, m = _split_prime_power(q)
        if q > MAX_ORDER:
            raise TooLarge(f"q = {q} exceeds the table budget {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            # F_p[x]/(x): the modulus is nominal for prime fields.
            self.modulus: tuple[int, ...] = (0, 1)
            g = _prime_generator(p)
            exp = [pow(g, e, p) for e in range(p - 1)]
        else:
            # Lexicographic over (c_0, ..., c_{m-1}), c_0 most significant.
            # A modulus for which x has order p^m - 1 is automatically
            # irreducible (every nonzero residue is a unit) and primitive
            # polynomials exist in every degree, so the search always succeeds.
            exp = None
            for code in range(q):
                coeffs = tuple((code // p ** (m - 1 - j)) % p for j in range(m))
                if coeffs[0] == 0:
                    continue
                exp = _orbit_of_x(coeffs, p)
                if exp is not None:
                    self.modulus = coeffs + (1,)
                    break
            assert exp is not None
            g = exp[1]
        self.alpha: int = g
        self.exp_table = np.array(exp, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        log[self.exp_table] = np.arange(q - 1, dtype=np.int64)
        self.log_table = log
        self._weights = p ** np.arange(m, dtype=np.int64)
        self.exp_table.setflags(write=False)
        self.log_table.setflags(write=False)

    def __repr__(self) -> str:
        return f"FiniteField(q={self.q}, p={self.p}, m={self.m}, alpha={self.alpha})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("FiniteField", self.q))

    # -- element helpers ---------------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def minus_one(self) -> int:
        return self.neg(1)

    def element(self, x: int) -> int:
        x = int(x)
        if not 0 <= x < self.q:
            raise ValueError(f"{x} is not an element index of F_{self.q}")
        return x

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def digits(self, a: ArrayLike) -> np.ndarray:
        """Base-p coefficient digits, shape ``a.shape + (m,)``."""
        a = np.asarray(a, dtype=np.int64)
        return (a[..., None] // self._weights) % self.p

    def from_digits(self, d: np.ndarray) -> np.ndarray:
        return (np.asarray(d, dtype=np.int64) % self.p) @ self._weights

    # -- arithmetic --------------------------------------------------------

    def add(self, a: ArrayLike, b: ArrayLike) -> ArrayLike:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            out = (a + b) % self.p
        elif self.p == 2:
            out = a ^ b
        else:
            out = self.from_digits(self.digits(a) + self.digits(b))
        return _unwrap(out)

    def neg(self, a: ArrayLike) -> ArrayLike:
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            out = (-a) % self.p
        elif self.p == 2:
            out = a
        else:
            out = self.from_digits(-self.digits(a))
        return _unwrap(out)

    def sub(self, a: ArrayLike, b: ArrayLike) -> ArrayLike:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            out = (a - b) % self.p
        elif self.p == 2:
            out = a ^ b
        else:
            out = self.from_digits(self.digits(a) - self.digits(b))
        return _unwrap(out)

    def mul(self, a: ArrayLike, b: ArrayLike) -> ArrayLike:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.m == 1:
            return _unwrap((a * b) % self.p)
        e = (self.log_table[a] + self.log_table[b]) % (self.q - 1)
        out = np.where((a == 0) | (b == 0), 0, self.exp_table[e])
        return _unwrap(out)

    def inv(self, a: ArrayLike) -> ArrayLike:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero(f"0 has no inverse in F_{self.q}")
        return _unwrap(self.exp_table[(-self.log_table[a]) % (self.q - 1)])

    def div(self, a: ArrayLike, b: ArrayLike) -> ArrayLike:
        return self.mul(a, self.inv(b))

    def alpha_pow(self, e: ArrayLike) -> ArrayLike:
        """alpha ** e for any integer exponent(s), reduced mod q - 1."""
        e = np.asarray(e, dtype=np.int64)
        return _unwrap(self.exp_table[e % (self.q - 1)])

    def power(self, a: int, e: int) -> int:
        """a ** e by square-and-multiply; negative e goes through inv().

        Deliberately avoids the log table so it can serve as an independent
        check of table-based exponentiation.
        """
        a = self.element(a)
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return int(result)

    # -- reductions and products ------------------------------------------

    def sum(self, a: np.ndarray, axis: int | None = None) -> ArrayLike:
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return _unwrap(a.sum(axis=axis) % self.p)
        if self.p == 2:
            if axis is None:
                return _unwrap(np.bitwise_xor.reduce(a.ravel()))
            return _unwrap(np.bitwise_xor.reduce(a, axis=axis))
        d = self.digits(a)
        if axis is None:
            d = d.reshape(-1, self.m)
            axis = 0
        elif axis < 0:
            axis = a.ndim + axis
        return _unwrap(self.from_digits(d.sum(axis=axis)))

    def dot(self, a: np.ndarray, b: np.ndarray) -> int:
        return int(self.sum(self.mul(a, b)))

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        squeeze = b.ndim == 1
        if squeeze:
            b = b[:, None]
        if a.shape[1] != b.shape[0]:
            raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
        if self.m == 1:
            # entries < 2**16, so int64 accumulation is exact for any n <= 2**30
            out = (a @ b) % self.p
        else:
            out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
            for k in range(a.shape[1]):
                out = self.add(out, self.mul(a[:, k, None], b[None, k, :]))
            out = np.asarray(out, dtype=np.int64)
        return out[:, 0] if squeeze else out


def _unwrap(x: np.ndarray) -> ArrayLike:
    if isinstance(x, np.ndarray) and x.ndim == 0:
        return int(x)
    if isinstance(x, np.integer):
        return int(x)
    return x


@lru_cache(maxsize=None)
def make_field(q: int) -> FiniteField:
    """Return the canonical F_q (deterministic alpha and modulus)."""
    return FiniteField(int(q))


def alpha_pow(field: FiniteField, e: ArrayLike) -> ArrayLike:
    return field.alpha_pow(e)
