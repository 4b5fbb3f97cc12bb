"""Admissible symbols and the branching calculus built on them.

A symbol is an unordered collection of pairs ``([sigma_i], lambda_i)`` with
pairwise distinct Frobenius classes and ``sum deg(sigma_i) |lambda_i| = n``.
:class:`ModSymbol` requires every ``sigma_i`` to be l-regular (labels of
irreducible modular GL_n(q)-modules); :class:`CxSymbol` allows arbitrary
``sigma_i`` (labels of complex irreducibles). Pairs are kept sorted by
``(deg, canon_exp, partition)`` so equal symbols compare equal as tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator

from . import partitions as P
from .gfq import FieldElt, FrobClass, Tower, tower
from .numth import EllPrime, PrimePowerQ, ell_part

__all__ = [
    "SymbolPair",
    "Symbol",
    "ModSymbol",
    "CxSymbol",
    "SummandLabel",
    "Main2Decision",
    "act",
    "stabilizer",
    "kappa_ell_prime",
    "kappa_ell",
    "kappa_ell_cx",
    "num_constituents",
    "PairParts",
    "pair_parts",
    "star",
    "is_critical",
    "jm_irreducible",
    "main2_decision",
    "theta",
    "symbol_leq",
    "same_orbit",
    "orbit",
    "orbit_rep",
    "orbit_reps",
    "enumerate_mod_symbols",
    "enumerate_cx_symbols",
    "ibr_sl_count",
    "summand_labels",
    "summand_leq",
    "from_json",
]


@dataclass(frozen=True, order=True)
class SymbolPair:
    cls: FrobClass
    partition: P.Partition

    @property
    def deg(self) -> int:
        return self.cls.level

    @property
    def weight(self) -> int:
        return self.cls.level * sum(self.partition)

    def to_dict(self) -> dict:
        return {"deg": self.cls.level, "exp": self.cls.canon_exp, "partition": list(self.partition)}


@dataclass(frozen=True)
class Symbol:
    q: int
    ell: int
    pairs: tuple[SymbolPair, ...]

    kind = "symbol"

    def __post_init__(self):
        EllPrime(self.ell, PrimePowerQ(self.q))
        pairs = tuple(sorted(self.pairs))
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise ValueError("a symbol needs at least one pair")
        t = self.tower
        for pr in pairs:
            if not pr.partition:
                raise ValueError("empty partition in symbol")
            P.make(pr.partition)
            if t.frob_class(t.rep(pr.cls)) != pr.cls:
                raise ValueError(f"{pr.cls} is not a canonical Frobenius class")
        classes = [pr.cls for pr in pairs]
        if len(set(classes)) != len(classes):
            raise ValueError("Frobenius classes in a symbol must be distinct")
        self._validate()

    def _validate(self) -> None:
        pass

    @property
    def tower(self) -> Tower:
        return tower(self.q)

    @property
    def n(self) -> int:
        return sum(pr.weight for pr in self.pairs)

    @property
    def multipartition(self) -> P.Multipartition:
        return tuple(pr.partition for pr in self.pairs)

    def sort_key(self) -> tuple:
        return tuple((pr.cls.level, pr.cls.canon_exp, pr.partition) for pr in self.pairs)

    def __lt__(self, other: "Symbol") -> bool:
        return self.sort_key() < other.sort_key()

    def replace_pairs(self, pairs: Iterable[SymbolPair]) -> "Symbol":
        return type(self)(self.q, self.ell, tuple(pairs))

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "ell": self.ell,
            "n": self.n,
            "kind": self.kind,
            "pairs": [pr.to_dict() for pr in self.pairs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def __str__(self):
        body = ", ".join(
            f"([{pr.cls.level}:{pr.cls.canon_exp}], {P.make(pr.partition)})" for pr in self.pairs
        )
        return f"[{body}]"


class ModSymbol(Symbol):
    """n-admissible symbol with l-regular classes."""

    kind = "mod"

    def _validate(self):
        t = self.tower
        for pr in self.pairs:
            if not t.is_ell_regular(t.rep(pr.cls), self.ell):
                raise ValueError(f"class {pr.cls} is not l-regular (ell={self.ell})")


class CxSymbol(Symbol):
    """n-admissible symbol with arbitrary nonzero classes."""

    kind = "cx"

    @classmethod
    def from_mod(cls, s: ModSymbol) -> "CxSymbol":
        return cls(s.q, s.ell, s.pairs)


def from_json(text: str | dict) -> Symbol:
    d = json.loads(text) if isinstance(text, str) else text
    q, ell = d["q"], d["ell"]
    t = tower(q)
    pairs = []
    for pr in d["pairs"]:
        c = t.frob_class(t.elt(pr["deg"], pr["exp"]))
        if c.level != pr["deg"]:
            raise ValueError(f"exponent {pr['exp']} has degree {c.level}, not {pr['deg']}")
        pairs.append(SymbolPair(c, P.make(pr["partition"])))
    kind = d.get("kind", "mod")
    klass = {"mod": ModSymbol, "cx": CxSymbol}[kind]
    s = klass(q, ell, tuple(pairs))
    if "n" in d and d["n"] != s.n:
        raise ValueError(f"declared n={d['n']} but pairs have weight {s.n}")
    return s


def pair(q: int, level: int, exp: int, partition: Iterable[int]) -> SymbolPair:
    """Convenience: pair for the class of eps_level**exp."""
    t = tower(q)
    return SymbolPair(t.frob_class(t.elt(level, exp)), P.make(partition))


# -- scalar action and stabilizers -------------------------------------------


def act(tau: FieldElt, s: Symbol) -> Symbol:
    t = s.tower
    if tau.level != 1:
        raise ValueError("only scalars in F_q^x act on symbols")
    if isinstance(s, ModSymbol) and not t.is_ell_regular(tau, s.ell):
        raise ValueError("only O_l'(F_q^x) acts on modular symbols")
    return s.replace_pairs(SymbolPair(t.twist(pr.cls, tau), pr.partition) for pr in s.pairs)


def stabilizer(s: Symbol, group: Iterable[FieldElt]) -> list[FieldElt]:
    return [tau for tau in group if act(tau, s) == s]


def kappa_ell_prime(s: Symbol) -> int:
    """Order of the stabilizer of s in O_l'(F_q^x)."""
    return len(stabilizer(s, s.tower.ell_prime_subgroup(s.ell)))


def kappa_ell(s: ModSymbol) -> int:
    """l-part of gcd(q - 1, Delta of the transposed multipartition)."""
    if not isinstance(s, ModSymbol):
        raise TypeError("kappa_ell is defined on modular symbols; use kappa_ell_cx")
    d = P.delta(tuple(P.transpose(lam) for lam in s.multipartition))
    return ell_part(gcd(s.q - 1, d), s.ell)


def kappa_ell_cx(s: Symbol) -> int:
    """Order of the stabilizer of s in O_l(F_q^x)."""
    return len(stabilizer(s, s.tower.ell_subgroup(s.ell)))


def num_constituents(s: ModSymbol) -> int:
    return kappa_ell_prime(s) * kappa_ell(s)


# -- the star map and criticality --------------------------------------------


@dataclass(frozen=True)
class PairParts:
    s_cls: FrobClass  # class of the l'-part
    d: int  # deg(s)
    k: int  # deg(sigma) / deg(s)
    u_order: int


def pair_parts(s: Symbol, pr: SymbolPair) -> PairParts:
    t = s.tower
    sigma = t.rep(pr.cls)
    sp, up = t.parts(sigma, s.ell)
    d = t.degree(sp)
    return PairParts(t.frob_class(sp), d, pr.cls.level // d, t.order(up))


def star(s: Symbol) -> ModSymbol:
    """Group the pairs by the class of their l'-part and merge partitions:
    delta' = sum_i k_i lambda_i'."""
    groups: dict[FrobClass, list[P.Partition]] = {}
    for pr in s.pairs:
        dc = pair_parts(s, pr)
        groups.setdefault(dc.s_cls, []).append(P.scale(dc.k, P.transpose(pr.partition)))
    pairs = [SymbolPair(c, P.transpose(P.add(*cols))) for c, cols in groups.items()]
    return ModSymbol(s.q, s.ell, tuple(pairs))


def is_critical(s: Symbol) -> bool:
    if s.ell != 2 or s.q % 4 != 3:
        return False
    ds = [pair_parts(s, pr) for pr in s.pairs]
    if any(dc.k <= 1 for dc in ds):
        return False
    return any(dc.k == 2 and dc.d % 2 == 1 and dc.u_order >= 8 for dc in ds)


def jm_irreducible(s: Symbol) -> bool:
    """Both James-Mathas conditions: distinct l'-part classes among pairs of
    equal degree, and every partition a JM-partition for Q = q^deg."""
    ds = [pair_parts(s, pr) for pr in s.pairs]
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            if s.pairs[i].deg == s.pairs[j].deg and ds[i].s_cls == ds[j].s_cls:
                return False
    return all(P.is_jm(pr.partition, s.q**pr.deg, s.ell) for pr in s.pairs)


@dataclass(frozen=True)
class Main2Decision:
    jm: bool
    kappa_match: bool
    critical: bool

    @property
    def constituent_reduction_irreducible(self) -> bool:
        return self.jm and self.kappa_match and not self.critical

    def to_dict(self) -> dict:
        return {
            "jm": self.jm,
            "kappa_match": self.kappa_match,
            "critical": self.critical,
            "constituent_reduction_irreducible": self.constituent_reduction_irreducible,
        }


def main2_decision(s: Symbol) -> Main2Decision:
    """Whether reducing a constituent of L_C(s) restricted to SL_n is irreducible."""
    return Main2Decision(
        jm=jm_irreducible(s),
        kappa_match=kappa_ell_prime(s) == kappa_ell_prime(star(s)),
        critical=is_critical(s),
    )


# -- Theta --------------------------------------------------------------------


def theta(s: ModSymbol) -> CxSymbol:
    """Lift s to a complex symbol t with star(t) = s and the same branching
    numbers: twist each class by u(c, d) and shrink columns by l^c."""
    kl = kappa_ell(s)
    if kl == 1:
        return CxSymbol.from_mod(s)
    c = 0
    while s.ell**c < kl:
        c += 1
    t = s.tower
    pairs = []
    for pr in s.pairs:
        cols = P.transpose(pr.partition)
        if not P.divides(kl, cols):
            raise AssertionError(f"kappa_ell={kl} does not divide the columns of {pr.partition}")
        mu = P.transpose(P.divide(cols, kl))
        tau = t.mul(t.rep(pr.cls), t.u_of(c, pr.deg, s.ell))
        pairs.append(SymbolPair(t.frob_class(tau), mu))
    return CxSymbol(s.q, s.ell, tuple(pairs))


# -- orbits and the order -----------------------------------------------------


def orbit(s: Symbol) -> list[Symbol]:
    """The O_l'(F_q^x)-orbit of s, sorted and deduplicated."""
    return sorted(set(act(tau, s) for tau in s.tower.ell_prime_subgroup(s.ell)))


def orbit_rep(s: Symbol) -> Symbol:
    return min(act(tau, s) for tau in s.tower.ell_prime_subgroup(s.ell))


def same_orbit(s: Symbol, t: Symbol) -> bool:
    return orbit_rep(s) == orbit_rep(t)


def orbit_reps(symbols: Iterable[Symbol]) -> list[Symbol]:
    return sorted({orbit_rep(s) for s in symbols})


def _check_context(s: Symbol, t: Symbol) -> None:
    if (s.q, s.ell, s.n) != (t.q, t.ell, t.n):
        raise ValueError(f"symbols live in different contexts: {(s.q, s.ell, s.n)} vs {(t.q, t.ell, t.n)}")


def symbol_leq(s: ModSymbol, t: ModSymbol) -> bool:
    """s dominates t: same pair count and, for some nu in O_l'(F_q^x), a
    matching with [sigma_i nu] = [tau_i] and lambda_i dominating mu_i.

    Classes of t are distinct, so each nu forces the matching.
    """
    _check_context(s, t)
    if len(s.pairs) != len(t.pairs):
        return False
    tw = s.tower
    by_class = {pr.cls: pr.partition for pr in t.pairs}
    for nu in tw.ell_prime_subgroup(s.ell):
        ok = True
        for pr in s.pairs:
            mu = by_class.get(tw.twist(pr.cls, nu))
            if mu is None or P.size(mu) != P.size(pr.partition) or not P.dominates(pr.partition, mu):
                ok = False
                break
        if ok:
            return True
    return False


# -- enumeration ----------------------------------------------------------------


def _pairs_up_to(
    classes: list[FrobClass], start: int, remaining: int
) -> Iterator[tuple[SymbolPair, ...]]:
    if remaining == 0:
        yield ()
        return
    for i in range(start, len(classes)):
        c = classes[i]
        if c.level > remaining:
            break
        for k in range(1, remaining // c.level + 1):
            for lam in P.partitions_of(k):
                for rest in _pairs_up_to(classes, i + 1, remaining - k * c.level):
                    yield (SymbolPair(c, lam),) + rest


def _classes_up_to(q: int, n: int) -> list[FrobClass]:
    t = tower(q)
    t.check_level(n)
    return [c for d in range(1, n + 1) for c in t.classes_of_degree(d)]


def enumerate_mod_symbols(n: int, q: int, ell: int) -> list[ModSymbol]:
    """All n-admissible modular symbols, in canonical order."""
    return list(_mod_symbols(n, q, ell))


@lru_cache(maxsize=64)
def _mod_symbols(n: int, q: int, ell: int) -> tuple[ModSymbol, ...]:
    EllPrime(ell, PrimePowerQ(q))
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    t = tower(q)
    classes = [c for c in _classes_up_to(q, n) if t.is_ell_regular(t.rep(c), ell)]
    out = [ModSymbol(q, ell, prs) for prs in _pairs_up_to(classes, 0, n)]
    return tuple(sorted(out))


def enumerate_cx_symbols(n: int, q: int, ell: int) -> list[CxSymbol]:
    """All n-admissible complex symbols (distinct classes), canonical order."""
    return list(_cx_symbols(n, q, ell))


@lru_cache(maxsize=64)
def _cx_symbols(n: int, q: int, ell: int) -> tuple[CxSymbol, ...]:
    EllPrime(ell, PrimePowerQ(q))
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    classes = _classes_up_to(q, n)
    out = [CxSymbol(q, ell, prs) for prs in _pairs_up_to(classes, 0, n)]
    return tuple(sorted(out))


def mod_orbit_reps(n: int, q: int, ell: int) -> list[ModSymbol]:
    return orbit_reps(_mod_symbols(n, q, ell))


def ibr_sl_count(n: int, q: int, ell: int) -> int:
    """Number of irreducible Brauer characters of SL_n(q) predicted by the
    branching numbers: sum over orbit representatives of kappa_l' kappa_l."""
    return sum(num_constituents(s) for s in mod_orbit_reps(n, q, ell))


# -- labels of IBr(SL_n) ------------------------------------------------------


@dataclass(frozen=True, order=True)
class SummandLabel:
    """The j-th summand (1-based) of L(s) restricted to SL_n(q)."""

    symbol: ModSymbol
    index: int

    def to_dict(self) -> dict:
        return {"symbol": self.symbol.to_dict(), "index": self.index}


def summand_labels(n: int, q: int, ell: int) -> list[SummandLabel]:
    return [
        SummandLabel(s, j)
        for s in mod_orbit_reps(n, q, ell)
        for j in range(1, num_constituents(s) + 1)
    ]


def summand_leq(a: SummandLabel, b: SummandLabel) -> bool:
    """a dominates b on IBr(SL_n): within one symbol, the linear order on
    indices (larger index dominates); across symbols, the symbol order."""
    if a.symbol == b.symbol:
        return a.index >= b.index
    return symbol_leq(a.symbol, b.symbol)
