"""Multiplicative model of the tower F_q < F_{q^2} < ... .

A nonzero element of F_{q^d} is stored as an exponent ``e`` of a fixed
generator ``eps_d`` of the cyclic group F_{q^d}^x. The generators are chosen
compatible by definition::

    eps_d = eps_D ** ((q**D - 1) // (q**d - 1))      for d | D

so embedding F_{q^d} into F_{q^D} multiplies exponents by that index, and the
norm of ``eps_d`` down to F_q is ``eps_1``. No additive structure is modelled;
Frobenius acts by ``e -> e*q``. Field addition lives in
:mod:`slbranch.oracle.field`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd

import numpy as np

from .errors import CapacityError
from .numth import PrimePowerQ, ell_part, ell_prime_part, is_prime

__all__ = ["FieldElt", "FrobClass", "Tower", "LEVEL_CAP", "tower"]

LEVEL_CAP = 2**20


@dataclass(frozen=True, order=True)
class FieldElt:
    """``eps_level ** exp``; build through :meth:`Tower.elt` to normalize."""

    level: int
    exp: int

    def to_dict(self) -> dict:
        return {"level": self.level, "exp": self.exp}


@dataclass(frozen=True, order=True)
class FrobClass:
    """Frobenius orbit [sigma], stored at its degree with the least exponent."""

    level: int
    canon_exp: int

    @property
    def degree(self) -> int:
        return self.level

    def to_dict(self) -> dict:
        return {"level": self.level, "canon_exp": self.canon_exp}


def _divisors(d: int) -> list[int]:
    return [t for t in range(1, d + 1) if d % t == 0]


class Tower:
    """Immutable context for one base field size ``q``."""

    def __init__(self, q: int, cap: int = LEVEL_CAP):
        self.Q = PrimePowerQ(q)
        self.q = q
        self.cap = cap
        d = 0
        while q ** (d + 1) <= cap:
            d += 1
        self.max_level = d

    def __repr__(self):
        return f"Tower(q={self.q}, max_level={self.max_level})"

    # -- sizes -------------------------------------------------------------

    def check_level(self, d: int) -> None:
        if d < 1:
            raise ValueError(f"level must be positive, got {d}")
        if d > self.max_level:
            raise CapacityError(
                f"level {d} exceeds cap: q^{d} = {self.q**d} > {self.cap}"
            )

    def group_order(self, d: int) -> int:
        """|F_{q^d}^x|."""
        return self.q**d - 1

    # -- construction ------------------------------------------------------

    def elt(self, level: int, exp: int) -> FieldElt:
        """The element eps_level**exp, renormalized to its minimal level."""
        self.check_level(level)
        m = self.group_order(level)
        exp %= m
        t = self._degree_exp(level, exp)
        if t != level:
            exp //= m // self.group_order(t)
            level = t
        return FieldElt(level, exp)

    def one(self) -> FieldElt:
        return FieldElt(1, 0)

    def eps(self, d: int = 1) -> FieldElt:
        """The fixed generator of F_{q^d}^x."""
        return self.elt(d, 1)

    def scalars(self) -> list[FieldElt]:
        """F_q^x as level-1 elements, in exponent order."""
        return [FieldElt(1, e) for e in range(self.q - 1)]

    # -- basic arithmetic --------------------------------------------------

    def embed(self, x: FieldElt, D: int) -> int:
        """Exponent of ``x`` inside F_{q^D} (not renormalized)."""
        if D % x.level:
            raise ValueError(f"level {x.level} does not divide {D}")
        self.check_level(D)
        return x.exp * (self.group_order(D) // self.group_order(x.level))

    def mul(self, *xs: FieldElt) -> FieldElt:
        level = 1
        for x in xs:
            level = level * x.level // gcd(level, x.level)
        self.check_level(level)
        m = self.group_order(level)
        return self.elt(level, sum(self.embed(x, level) for x in xs) % m)

    def inv(self, x: FieldElt) -> FieldElt:
        return self.elt(x.level, -x.exp)

    def power(self, x: FieldElt, k: int) -> FieldElt:
        return self.elt(x.level, x.exp * k)

    def frobenius(self, x: FieldElt, i: int = 1) -> FieldElt:
        """x ** (q**i)."""
        m = self.group_order(x.level)
        return FieldElt(x.level, x.exp * pow(self.q, i, m) % m)

    def order(self, x: FieldElt) -> int:
        m = self.group_order(x.level)
        return m // gcd(x.exp, m)

    def _degree_exp(self, level: int, exp: int) -> int:
        m = self.group_order(level)
        for t in _divisors(level):
            if exp * (self.q**t - 1) % m == 0:
                return t
        raise AssertionError("unreachable: t = level always works")

    def degree(self, x: FieldElt) -> int:
        """Size of the Frobenius orbit of x, i.e. [F_q(x) : F_q]."""
        return self._degree_exp(x.level, x.exp)

    # -- Frobenius classes -------------------------------------------------

    def frob_class(self, x: FieldElt) -> FrobClass:
        x = self.elt(x.level, x.exp)
        d = x.level
        m = self.group_order(d)
        e = x.exp
        best = e
        for _ in range(d - 1):
            e = e * self.q % m
            best = min(best, e)
        return FrobClass(d, best)

    def rep(self, c: FrobClass) -> FieldElt:
        return FieldElt(c.level, c.canon_exp)

    def class_members(self, c: FrobClass) -> list[FieldElt]:
        x = self.rep(c)
        return [self.frobenius(x, i) for i in range(c.level)]

    def twist(self, c: FrobClass, t: FieldElt) -> FrobClass:
        """[sigma * t] for a scalar t in F_q^x."""
        if t.level != 1:
            raise ValueError("twist needs a level-1 scalar")
        return self.frob_class(self.mul(self.rep(c), t))

    def canon_array(self, level: int, exps: np.ndarray) -> np.ndarray:
        """Vectorized least Frobenius-orbit exponent at a fixed level."""
        m = self.group_order(level)
        e = np.asarray(exps, dtype=np.int64) % m
        best = e.copy()
        for _ in range(level - 1):
            e = e * self.q % m
            np.minimum(best, e, out=best)
        return best

    def classes_of_degree(self, d: int) -> list[FrobClass]:
        """All Frobenius classes of degree exactly d, ascending by exponent."""
        return [FrobClass(d, int(e)) for e in _classes_of_degree(self.q, d, self.cap)]

    def num_classes_of_degree(self, d: int) -> int:
        return len(_classes_of_degree(self.q, d, self.cap))

    # -- l-structure -------------------------------------------------------

    def is_ell_element(self, x: FieldElt, ell: int) -> bool:
        o = self.order(x)
        return ell_part(o, ell) == o if ell else o == 1

    def is_ell_regular(self, x: FieldElt, ell: int) -> bool:
        return ell == 0 or self.order(x) % ell != 0

    def parts(self, x: FieldElt, ell: int) -> tuple[FieldElt, FieldElt]:
        """(l'-part, l-part) of x; both are powers of x."""
        if ell == 0:
            return x, self.one()
        o = self.order(x)
        ol = ell_part(o, ell)
        olp = o // ol
        # a = 1 mod olp, a = 0 mod ol
        a = ol * pow(ol, -1, olp) % o if olp > 1 else 0
        b = (1 - a) % o if o > 1 else 0
        return self.power(x, a), self.power(x, b)

    def ell_subgroup(self, ell: int) -> list[FieldElt]:
        """O_l(F_q^x) as level-1 elements."""
        n = ell_part(self.q - 1, ell)
        step = (self.q - 1) // n
        return [FieldElt(1, step * i) for i in range(n)]

    def ell_prime_subgroup(self, ell: int) -> list[FieldElt]:
        """O_l'(F_q^x) as level-1 elements."""
        n = ell_prime_part(self.q - 1, ell)
        step = (self.q - 1) // n
        return [FieldElt(1, step * i) for i in range(n)]

    # -- norms and special elements ----------------------------------------

    def norm_to_base(self, x: FieldElt, level: int | None = None) -> FieldElt:
        """Norm from F_{q^level} (default: the element's level) to F_q."""
        level = x.level if level is None else level
        e = self.embed(x, level)
        # N(eps_D ** e) = eps_D ** (e (q^D-1)/(q-1)) = eps_1 ** e
        return FieldElt(1, e % (self.q - 1))

    def u_of(self, a: int, d: int, ell: int) -> FieldElt:
        """An l-element u(a, d) with deg(s u) = l^a d and |I(s u)| = l^a
        for every l'-element s of degree d."""
        if a < 0 or d < 1:
            raise ValueError(f"need a >= 0 and d >= 1, got a={a}, d={d}")
        if a == 0:
            return self.one()
        if not is_prime(ell):
            raise ValueError(f"ell must be prime, got {ell}")
        if (self.q - 1) % ell**a:
            raise ValueError(f"ell^a = {ell**a} does not divide q-1 = {self.q - 1}")
        qd = self.q**d
        if ell == 2 and qd % 4 == 3:
            level = 2 * d
            self.check_level(level)
            # order 4; the other choice is its inverse
            return self.elt(level, self.group_order(level) // 4)
        level = d * ell**a
        self.check_level(level)
        m = self.group_order(level)
        return self.elt(level, m // ell_part(m, ell))

    def stabilizer_I(self, sigma: FieldElt, ell: int, which: str = "ell") -> int:
        """Brute-force #{t in O_l(F_q^x) (or O_l') : [sigma t] = [sigma]}."""
        if which == "ell":
            group = self.ell_subgroup(ell) if ell else [self.one()]
        elif which == "ell_prime":
            group = self.ell_prime_subgroup(ell) if ell else self.scalars()
        else:
            raise ValueError(f"which must be 'ell' or 'ell_prime', got {which!r}")
        c = self.frob_class(sigma)
        return sum(1 for t in group if self.twist(c, t) == c)


@lru_cache(maxsize=None)
def _classes_of_degree(q: int, d: int, cap: int) -> np.ndarray:
    t = Tower(q, cap)
    t.check_level(d)
    m = q**d - 1
    e = np.arange(m, dtype=np.int64)
    canon = t.canon_array(d, e)
    keep = canon == e
    # exact degree d: not fixed by any proper Frobenius power q^t, t | d
    for s in _divisors(d)[:-1]:
        keep &= (e * (q**s - 1)) % m != 0
    return e[keep]


@lru_cache(maxsize=None)
def tower(q: int) -> Tower:
    """Shared default-cap tower for ``q``."""
    return Tower(q)
