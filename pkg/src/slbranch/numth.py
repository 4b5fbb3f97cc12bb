"""Exact integer helpers: valuations, l-parts, prime powers.

Every function accepting ``ell`` also accepts ``ell == 0``, which stands for
characteristic zero: then every integer has trivial l-part and every element
counts as l-regular.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

__all__ = [
    "PrimePowerQ",
    "EllPrime",
    "is_prime",
    "prime_factors",
    "prime_power",
    "ell_val",
    "ell_part",
    "ell_prime_part",
    "gcd_many",
    "lnt_check",
    "LNTResult",
]


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    k = 3
    while k * k <= m:
        if m % k == 0:
            return False
        k += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime divisors of ``m`` by trial division, ascending."""
    if m < 1:
        raise ValueError(f"prime_factors needs m >= 1, got {m}")
    out = []
    k = 2
    while k * k <= m:
        if m % k == 0:
            out.append(k)
            while m % k == 0:
                m //= k
        k += 1
    if m > 1:
        out.append(m)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, f)`` with ``q == p**f`` or None if q is not a prime power."""
    if q < 2:
        return None
    ps = prime_factors(q)
    if len(ps) != 1:
        return None
    p = ps[0]
    f = 0
    while q > 1:
        q //= p
        f += 1
    return p, f


@dataclass(frozen=True)
class PrimePowerQ:
    q: int

    def __post_init__(self):
        if prime_power(self.q) is None:
            raise ValueError(f"q={self.q} is not a prime power")

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def f(self) -> int:
        return prime_power(self.q)[1]


@dataclass(frozen=True)
class EllPrime:
    """A prime ``ell`` not dividing ``q``; ``ell == 0`` is characteristic zero."""

    ell: int
    q: PrimePowerQ

    def __post_init__(self):
        if self.ell == 0:
            return
        if not is_prime(self.ell):
            raise ValueError(f"ell={self.ell} is not prime")
        if self.q.q % self.ell == 0:
            raise ValueError(f"ell={self.ell} divides q={self.q.q}")

    @property
    def char_zero(self) -> bool:
        return self.ell == 0


def _check_positive(m: int) -> None:
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")


def ell_val(m: int, ell: int) -> int:
    """Largest e with ell**e dividing m."""
    _check_positive(m)
    if ell == 0:
        return 0
    if ell < 2:
        raise ValueError(f"ell must be prime, got {ell}")
    e = 0
    while m % ell == 0:
        m //= ell
        e += 1
    return e


def ell_part(m: int, ell: int) -> int:
    return ell ** ell_val(m, ell) if ell else 1


def ell_prime_part(m: int, ell: int) -> int:
    return m // ell_part(m, ell)


def gcd_many(*values: int) -> int:
    return reduce(gcd, values, 0)


@dataclass(frozen=True)
class LNTResult:
    actual: int
    predicted: int
    exceptional: bool

    @property
    def holds(self) -> bool:
        return self.exceptional or self.actual == self.predicted


LNT_POWER_CAP = 64


def lnt_check(r: int, ell: int, d: int) -> LNTResult:
    """l-part of (r**(ell**d) - 1)/(r - 1) against its predicted value ell**d.

    Requires ell | r - 1. The prediction fails only in the family
    c = 1, ell = 2, r = 3 (mod 4), flagged as ``exceptional``.
    """
    if r < 2:
        raise ValueError(f"r must be >= 2, got {r}")
    if not is_prime(ell):
        raise ValueError(f"ell must be prime, got {ell}")
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if (r - 1) % ell:
        raise ValueError(f"ell={ell} does not divide r-1={r - 1}")
    ld = ell**d
    if ld > LNT_POWER_CAP:
        raise ValueError(f"ell**d={ld} exceeds cap {LNT_POWER_CAP}")
    c = ell_val(r - 1, ell)
    quotient = (r**ld - 1) // (r - 1)
    return LNTResult(
        actual=ell_part(quotient, ell),
        predicted=ld,
        exceptional=(c == 1 and ell == 2 and r % 4 == 3),
    )
