"""Partitions and multipartitions.

Partitions are plain tuples of positive integers in weakly decreasing order;
``()`` is the empty partition. Multipartitions are tuples of partitions.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .numth import ell_part, gcd_many

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]

__all__ = [
    "Partition",
    "Multipartition",
    "make",
    "size",
    "transpose",
    "delta",
    "add",
    "scale",
    "dominates",
    "hooks",
    "is_jm",
    "partitions_of",
    "multipartitions_of",
    "multiplicities",
    "divides",
    "divide",
]


def make(parts: Iterable[int]) -> Partition:
    """Validate and normalize a partition (trailing zeros are dropped)."""
    p = tuple(int(x) for x in parts)
    p = tuple(x for x in p if x != 0)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts not weakly decreasing: {p}")
    return p


def size(lam: Partition) -> int:
    return sum(lam)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def delta(lam: Partition | Multipartition) -> int:
    """gcd of all parts; 0 for the empty partition."""
    if lam and isinstance(lam[0], tuple):
        return gcd_many(*(delta(p) for p in lam))
    return gcd_many(*lam)


def add(*lams: Partition) -> Partition:
    width = max((len(p) for p in lams), default=0)
    return tuple(sum(p[i] for p in lams if i < len(p)) for i in range(width))


def scale(k: int, lam: Partition) -> Partition:
    if k <= 0:
        raise ValueError(f"scale factor must be positive, got {k}")
    return tuple(k * x for x in lam)


def divides(m: int, lam: Partition) -> bool:
    """m | lam: m divides every part."""
    return all(x % m == 0 for x in lam)


def divide(lam: Partition, m: int) -> Partition:
    if not divides(m, lam):
        raise ValueError(f"{m} does not divide every part of {lam}")
    return tuple(x // m for x in lam)


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam dominates mu; both must have the same size."""
    if size(lam) != size(mu):
        raise ValueError(f"dominance needs equal sizes: {lam} vs {mu}")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def hooks(lam: Partition) -> list[list[int]]:
    """Hook lengths, row by row; entry [a][c] is the hook of node (a+1, c+1)."""
    t = transpose(lam)
    return [[lam[a] - c + t[c] - a - 1 for c in range(lam[a])] for a in range(len(lam))]


def is_jm(lam: Partition, Q: int, ell: int) -> bool:
    """Column hook condition: all hooks h in a column give the same l-part of
    (Q^h - 1)/(Q - 1). Uses exact big-integer powers."""
    if Q < 2:
        raise ValueError(f"Q must be >= 2, got {Q}")
    if not lam:
        return True
    h = hooks(lam)
    for c in range(lam[0]):
        col = {h[a][c] for a in range(len(lam)) if c < lam[a]}
        vals = {ell_part((Q**x - 1) // (Q - 1), ell) for x in col}
        if len(vals) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def _partitions(k: int, largest: int) -> tuple[Partition, ...]:
    if k == 0:
        return ((),)
    out = []
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(k: int) -> tuple[Partition, ...]:
    """All partitions of k in reverse lexicographic order, (k) first."""
    if k < 0:
        raise ValueError(f"negative size {k}")
    return _partitions(k, k)


def multipartitions_of(sizes: Sequence[int]) -> Iterator[Multipartition]:
    if not sizes:
        yield ()
        return
    for head in partitions_of(sizes[0]):
        for tail in multipartitions_of(sizes[1:]):
            yield (head,) + tail


def multiplicities(lam: Partition) -> dict[int, int]:
    """lam = (1^{r_1} 2^{r_2} ...) as {i: r_i} for r_i > 0."""
    out: dict[int, int] = {}
    for x in lam:
        out[x] = out.get(x, 0) + 1
    return out

