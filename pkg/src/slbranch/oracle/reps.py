"""Explicit representatives for the parametric class labels of GL_n(q).

A block ([sigma], mu) becomes the companion matrices of f^m, one per part m of
mu, where f is the minimal polynomial of sigma over F_q. This is the primary
rational canonical form, so the matrix has semisimple part conjugate to sigma
and unipotent part of Jordan type mu in GL_k(q^d).

sigma = eps_d^e is realized in F_{q^d} as g_d^e where g_d is primitive and
g_d^N (N = (q^d-1)/(q-1)) equals the concrete generator of F_q. Norms, and
therefore determinants, then match the abstract labels.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

import numpy as np

from ..classcount import ClassLabel
from ..gfq import FrobClass
from .field import ZechField, zech_field
from .matrices import MatrixSpace, matrix_space

__all__ = ["SubfieldEmbedding", "embedding", "minimal_polynomial", "companion", "class_rep"]


class SubfieldEmbedding:
    """F_q inside F_{q^d} with a norm-compatible primitive element g_d."""

    def __init__(self, q: int, d: int):
        self.q, self.d = q, d
        self.small: ZechField = zech_field(q)
        self.big: ZechField = zech_field(q**d)
        self.N = (q**d - 1) // (q - 1)
        big, small = self.big, self.small
        low = list(small.poly)
        for j in range(1, big.order + 1):
            if gcd(j, big.order) != 1:
                continue
            y = big.power_of_gen(j * self.N)
            # y must be a root of the defining polynomial of F_q; prime-field
            # coefficients are the same ints in both fields
            acc = big.power_of_gen(small.m * big.log(y))
            for i, c in enumerate(low):
                acc = big.add(acc, big.mul(c, big.power_of_gen(i * big.log(y))))
            if acc == 0:
                self.j = j
                break
        else:
            raise AssertionError(f"no norm-compatible generator for F_{q}^{d}")

    def g_power(self, e: int) -> int:
        """g_d^e as an element of F_{q^d}."""
        return self.big.power_of_gen(self.j * e)

    def to_small(self, x: int) -> int:
        """An element of F_{q^d} lying in F_q, as an element of the small field."""
        if x == 0:
            return 0
        lg = self.big.log(x)
        if lg % self.N:
            raise ValueError("element is not in the subfield")
        # x = g_d^{N t} = h^{j N t}
        t = (lg // self.N) * pow(self.j, -1, self.q - 1) % (self.q - 1) if self.q > 2 else 0
        return self.small.power_of_gen(t)


@lru_cache(maxsize=None)
def embedding(q: int, d: int) -> SubfieldEmbedding:
    return SubfieldEmbedding(q, d)


def _poly_mul(F: ZechField, a: list[int], b: list[int]) -> list[int]:
    """Coefficient lists, lowest degree first."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


@lru_cache(maxsize=None)
def minimal_polynomial(q: int, cls: FrobClass) -> tuple[int, ...]:
    """Monic minimal polynomial of the class over F_q, lowest degree first."""
    emb = embedding(q, cls.level)
    big = emb.big
    f = [1]
    for i in range(cls.level):
        root = emb.g_power(cls.canon_exp * q**i)
        f = _poly_mul(big, f, [big.neg(root), 1])
    return tuple(emb.to_small(c) for c in f)


def companion(F: ZechField, f: list[int] | tuple[int, ...]) -> np.ndarray:
    """Companion matrix of a monic polynomial (lowest degree first)."""
    k = len(f) - 1
    C = np.zeros((k, k), dtype=np.int64)
    for i in range(1, k):
        C[i, i - 1] = 1
    for i in range(k):
        C[i, k - 1] = F.neg(f[i])
    return C


def class_rep(label: ClassLabel, space: MatrixSpace | None = None) -> np.ndarray:
    space = space or matrix_space(label.n, label.q)
    F = space.F
    blocks = []
    for (cls, _), mu in zip(label.ss.blocks, label.mp):
        f = list(minimal_polynomial(label.q, cls))
        for m in mu:
            g = [1]
            for _ in range(m):
                g = _poly_mul(F, g, f)
            blocks.append(companion(F, g))
    return space.block_diag(blocks)
