"""Concrete finite fields F_{p^m} with Zech-logarithm addition.

Elements are ints in ``range(p**m)``: the base-p digits of ``x`` are the
coefficients of a polynomial in the root ``g`` of the defining primitive
polynomial (digit i is the coefficient of g^i). ``0`` is zero and ``1`` is one.
For ``m == 1`` the field is Z/p and ``g`` is the least primitive root.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import product

import numpy as np

from ..numth import prime_factors, prime_power

__all__ = ["ZechField", "zech_field", "least_primitive_polynomial"]


def _poly_mulmod_x(digits: list[int], low: list[int], p: int) -> list[int]:
    """Multiply a residue (coefficients, degree < m) by x modulo
    x^m + low[m-1] x^{m-1} + ... + low[0]."""
    m = len(low)
    top = digits[m - 1]
    shifted = [0] + digits[: m - 1]
    return [(shifted[i] - top * low[i]) % p for i in range(m)]


def _poly_mulmod(a: list[int], b: list[int], low: list[int], p: int) -> list[int]:
    m = len(low)
    prod_ = [0] * (2 * m - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod_[i + j] = (prod_[i + j] + x * y) % p
    # reduce with x^m = -(low[m-1] x^{m-1} + ... + low[0])
    for k in range(2 * m - 2, m - 1, -1):
        c = prod_[k]
        if c:
            prod_[k] = 0
            for i in range(m):
                prod_[k - m + i] = (prod_[k - m + i] - c * low[i]) % p
    return prod_[:m]


def _x_power(k: int, low: list[int], p: int) -> list[int]:
    m = len(low)
    result = [1] + [0] * (m - 1)
    base = [0, 1] + [0] * (m - 2) if m > 1 else [(-low[0]) % p]
    while k:
        if k & 1:
            result = _poly_mulmod(result, base, low, p)
        base = _poly_mulmod(base, base, low, p)
        k >>= 1
    return result


def _x_order_is_full(low: list[int], p: int) -> bool:
    """x generates (F_p[x]/f)^x with |.| = p^m - 1; this forces f irreducible."""
    m = len(low)
    order = p**m - 1
    if low[0] == 0:
        return False
    one = [1] + [0] * (m - 1)
    if _x_power(order, low, p) != one:
        return False
    return all(_x_power(order // r, low, p) != one for r in prime_factors(order))


@lru_cache(maxsize=None)
def least_primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Low coefficients (c_0, ..., c_{m-1}) of the monic primitive polynomial
    x^m + c_{m-1} x^{m-1} + ... + c_0 that is least in lexicographic order of
    (c_{m-1}, ..., c_0)."""
    for high_first in product(range(p), repeat=m):
        low = list(reversed(high_first))
        if _x_order_is_full(low, p):
            return tuple(low)
    raise AssertionError(f"no primitive polynomial of degree {m} over F_{p}")


def _least_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fs = prime_factors(p - 1)
    for a in range(2, p):
        if all(pow(a, (p - 1) // r, p) != 1 for r in fs):
            return a
    raise AssertionError("unreachable")


class ZechField:
    """F_{p^m} with log/antilog tables and a Zech table for addition."""

    def __init__(self, size: int):
        pp = prime_power(size)
        if pp is None:
            raise ValueError(f"{size} is not a prime power")
        self.size = size
        self.p, self.m = pp
        p, m = self.p, self.m
        order = size - 1
        exp = np.zeros(order, dtype=np.int64)
        if m == 1:
            self.poly = (-_least_primitive_root(p) % p,)
            g = _least_primitive_root(p)
            x = 1
            for i in range(order):
                exp[i] = x
                x = x * g % p
        else:
            self.poly = least_primitive_polynomial(p, m)
            low = list(self.poly)
            cur = [1] + [0] * (m - 1)
            weights = [p**i for i in range(m)]
            for i in range(order):
                exp[i] = sum(c * w for c, w in zip(cur, weights))
                cur = _poly_mulmod_x(cur, low, p)
        log = np.full(size, -1, dtype=np.int64)
        log[exp] = np.arange(order)
        if (log[1:] < 0).any():
            raise AssertionError("generator is not primitive")
        self.exp_table = exp
        self.log_table = log
        self.order = order
        # zech[i] = log(1 + g^i), -1 when 1 + g^i = 0
        one_plus = self._add_raw(np.ones(order, dtype=np.int64), exp)
        self.zech = np.where(one_plus == 0, -1, log[one_plus])

    def __repr__(self):
        return f"ZechField({self.size})"

    def _digits(self, x: np.ndarray) -> list[np.ndarray]:
        return [(x // self.p**i) % self.p for i in range(self.m)]

    def _add_raw(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Digit-wise addition; used only to build the Zech table."""
        da, db = self._digits(np.asarray(a)), self._digits(np.asarray(b))
        return sum(((x + y) % self.p) * self.p**i for i, (x, y) in enumerate(zip(da, db)))

    # -- scalar arithmetic through logs ----------------------------------

    def gen(self) -> int:
        return int(self.exp_table[1 % self.order]) if self.order > 1 else 1

    def power_of_gen(self, k: int) -> int:
        return int(self.exp_table[k % self.order])

    def log(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("log of zero")
        return int(self.log_table[x])

    def add(self, a: int, b: int) -> int:
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self.log_table[a], self.log_table[b]
        z = self.zech[(lb - la) % self.order]
        if z < 0:
            return 0
        return int(self.exp_table[(la + z) % self.order])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[(self.log_table[a] + self.log_table[b]) % self.order])

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        # -1 = g^{order/2} for odd p
        return int(self.exp_table[(self.log_table[a] + self.order // 2) % self.order])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.exp_table[(-self.log_table[a]) % self.order])

    def from_int(self, k: int) -> int:
        """Image of the integer k in the prime field."""
        return k % self.p

    # -- dense tables for vectorized matrix work -------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        q = self.size
        t = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                t[a, b] = self.add(a, b)
        return t

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.size
        t = np.zeros((q, q), dtype=np.int64)
        for a in range(1, q):
            for b in range(1, q):
                t[a, b] = self.mul(a, b)
        return t

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.size)], dtype=np.int64)


@lru_cache(maxsize=None)
def zech_field(size: int) -> ZechField:
    return ZechField(size)
