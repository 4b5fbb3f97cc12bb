"""Batched n x n matrices over a :class:`ZechField`.

A batch is an int64 array of shape ``(N, n, n)`` holding field elements;
single matrices have shape ``(n, n)`` and broadcast against batches. All
arithmetic goes through the field's dense add/mul tables.

Key format: entry (i, j) is digit ``i*n + j`` of a base-q integer, so keys are
injective and fit int64 while ``q**(n*n) < 2**63``.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

import numpy as np

from ..errors import CapacityError
from .field import ZechField, zech_field

__all__ = ["MatrixSpace", "matrix_space"]


def _perm_sign(p: tuple[int, ...]) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


class MatrixSpace:
    def __init__(self, n: int, F: ZechField):
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        if F.size ** (n * n) >= 2**63:
            raise CapacityError(f"keys for {n}x{n} over F_{F.size} do not fit int64")
        self.n = n
        self.F = F
        self.q = F.size
        self.weights = (self.q ** np.arange(n * n, dtype=np.int64)).reshape(n, n)
        self._add = F.add_table
        self._mul = F.mul_table
        self._neg = F.neg_table
        self._perms = [(p, _perm_sign(p)) for p in permutations(range(n))]

    def __repr__(self):
        return f"MatrixSpace(n={self.n}, q={self.q})"

    # -- packing ---------------------------------------------------------

    def keys(self, A: np.ndarray) -> np.ndarray:
        return (np.asarray(A, dtype=np.int64) * self.weights).sum(axis=(-2, -1))

    def key(self, A) -> int:
        return int(self.keys(np.asarray(A)))

    def from_keys(self, keys: np.ndarray) -> np.ndarray:
        keys = np.asarray(keys, dtype=np.int64)
        digits = (keys[..., None] // self.weights.reshape(-1)) % self.q
        return digits.reshape(keys.shape + (self.n, self.n))

    def from_key(self, key: int) -> np.ndarray:
        return self.from_keys(np.array(key))

    # -- constructors ------------------------------------------------------

    def identity(self) -> np.ndarray:
        return np.eye(self.n, dtype=np.int64)

    def diag(self, entries) -> np.ndarray:
        M = np.zeros((self.n, self.n), dtype=np.int64)
        for i, x in enumerate(entries):
            M[i, i] = x
        return M

    def elementary(self, i: int, j: int, b: int) -> np.ndarray:
        """I + b e_{ij} (i != j)."""
        M = self.identity()
        M[i, j] = b
        return M

    def block_diag(self, blocks: list[np.ndarray]) -> np.ndarray:
        M = np.zeros((self.n, self.n), dtype=np.int64)
        r = 0
        for B in blocks:
            k = B.shape[0]
            M[r : r + k, r : r + k] = B
            r += k
        if r != self.n:
            raise ValueError(f"blocks fill {r} rows, need {self.n}")
        return M

    # -- arithmetic --------------------------------------------------------

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        n = self.n
        A = np.asarray(A)
        B = np.asarray(B)
        shape = np.broadcast_shapes(A.shape[:-2], B.shape[:-2]) + (n, n)
        C = np.empty(shape, dtype=np.int64)
        for i in range(n):
            for j in range(n):
                acc = self._mul[A[..., i, 0], B[..., 0, j]]
                for k in range(1, n):
                    acc = self._add[acc, self._mul[A[..., i, k], B[..., k, j]]]
                C[..., i, j] = acc
        return C

    def conjugate(self, g: np.ndarray, X: np.ndarray, g_inv: np.ndarray | None = None) -> np.ndarray:
        """g X g^{-1}."""
        if g_inv is None:
            g_inv = self.inverse(g)
        return self.matmul(self.matmul(g, X), g_inv)

    def det(self, A: np.ndarray) -> np.ndarray:
        A = np.asarray(A)
        total = np.zeros(A.shape[:-2], dtype=np.int64)
        for p, sign in self._perms:
            term = A[..., 0, p[0]]
            for i in range(1, self.n):
                term = self._mul[term, A[..., i, p[i]]]
            if sign < 0:
                term = self._neg[term]
            total = self._add[total, term]
        return total

    def power(self, A: np.ndarray, k: int) -> np.ndarray:
        if k < 0:
            raise ValueError("negative powers: invert first")
        A = np.asarray(A)
        result = np.broadcast_to(self.identity(), A.shape).copy()
        base = A
        while k:
            if k & 1:
                result = self.matmul(result, base)
            k >>= 1
            if k:
                base = self.matmul(base, base)
        return result

    def is_identity(self, A: np.ndarray) -> np.ndarray:
        return (np.asarray(A) == self.identity()).all(axis=(-2, -1))

    def inverse(self, g: np.ndarray) -> np.ndarray:
        """Inverse of a single matrix by Gauss-Jordan elimination."""
        F, n = self.F, self.n
        M = [[int(x) for x in row] + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(g)]
        for col in range(n):
            piv = next((r for r in range(col, n) if M[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            M[col], M[piv] = M[piv], M[col]
            inv = F.inv(M[col][col])
            M[col] = [F.mul(inv, x) for x in M[col]]
            for r in range(n):
                if r != col and M[r][col]:
                    c = M[r][col]
                    M[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(M[r], M[col])]
        return np.array([row[n:] for row in M], dtype=np.int64)

    # -- enumeration -------------------------------------------------------

    def total(self) -> int:
        return self.q ** (self.n * self.n)

    def all_matrices(self, chunk: int = 1 << 20) -> Iterator[np.ndarray]:
        """Every n x n matrix, in key order, as batches of at most ``chunk``."""
        total = self.total()
        for start in range(0, total, chunk):
            yield self.from_keys(np.arange(start, min(total, start + chunk), dtype=np.int64))


def matrix_space(n: int, q: int) -> MatrixSpace:
    return MatrixSpace(n, zech_field(q))
