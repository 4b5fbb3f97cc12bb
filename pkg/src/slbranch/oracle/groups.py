"""Explicit matrix groups GL_n(q), SL_n(q) and R_n(q) with full enumeration.

R_n is the subgroup of matrices whose determinant lies in
<eps^{(q-1)_l}>, so that R_n / SL_n is the l'-part of GL_n / SL_n.

Memory: a group of order N stores N int64 keys plus N*n*n uint8 entries,
about 17 bytes per element at n = 3; the default cap of 10^6 elements keeps
that under 20 MB before temporaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd, lcm

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..classcount import gl_order
from ..errors import CapacityError
from ..numth import EllPrime, PrimePowerQ, ell_part, ell_prime_part, prime_factors
from .matrices import MatrixSpace, matrix_space

__all__ = [
    "GroupSpec",
    "OracleGroup",
    "ConjClasses",
    "ORACLE_CAP",
    "oracle_group",
    "element_order",
    "gl_exponent_bound",
    "orbit_size",
    "class_splitting",
    "centralizer_scan",
    "det_image_of_centralizer",
]

ORACLE_CAP = 10**6
SCAN_CAP = 2 * 10**6


@dataclass(frozen=True)
class GroupSpec:
    kind: str  # "GL", "SL" or "R"
    n: int
    q: int
    ell: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", self.kind.upper())
        if self.kind not in ("GL", "SL", "R"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        PrimePowerQ(self.q)
        if self.kind == "R":
            if self.ell is None:
                raise ValueError("R_n needs ell")
            EllPrime(self.ell, PrimePowerQ(self.q))

    @property
    def det_step(self) -> int:
        """det must be a power of eps^det_step."""
        if self.kind == "GL":
            return 1
        if self.kind == "SL":
            return self.q - 1
        return ell_part(self.q - 1, self.ell)

    @property
    def order(self) -> int:
        return gl_order(self.n, self.q) // self.det_step

    def __str__(self):
        base = f"{self.kind}_{self.n}({self.q})"
        return base + (f"[ell={self.ell}]" if self.kind == "R" else "")


@dataclass
class ConjClasses:
    """Conjugacy classes of a conjugation-stable subset of a group."""

    keys: np.ndarray  # sorted element keys of the subset
    labels: np.ndarray  # class index per element, classes numbered by least key
    reps: np.ndarray  # least key of each class
    sizes: np.ndarray

    def __len__(self):
        return len(self.reps)

    def class_of(self, key: int) -> int:
        i = int(np.searchsorted(self.keys, key))
        if i >= len(self.keys) or self.keys[i] != key:
            raise KeyError(f"key {key} not in subset")
        return int(self.labels[i])

    def size_of(self, key: int) -> int:
        return int(self.sizes[self.class_of(key)])


class OracleGroup:
    def __init__(self, spec: GroupSpec, cap: int = ORACLE_CAP):
        if spec.order > cap:
            raise CapacityError(f"|{spec}| = {spec.order} exceeds cap {cap}")
        if spec.q ** (spec.n * spec.n) > max(SCAN_CAP, cap):
            raise CapacityError(f"{spec}: scanning q^(n^2) = {spec.q ** (spec.n ** 2)} matrices exceeds cap")
        self.spec = spec
        self.space: MatrixSpace = matrix_space(spec.n, spec.q)
        self.F = self.space.F

    def __repr__(self):
        return f"OracleGroup({self.spec})"

    @property
    def order(self) -> int:
        return self.spec.order

    def contains_det(self, dets: np.ndarray) -> np.ndarray:
        dets = np.asarray(dets)
        logs = self.F.log_table[dets]
        return (dets != 0) & (logs % self.spec.det_step == 0)

    # -- elements ----------------------------------------------------------

    @cached_property
    def _elements(self) -> tuple[np.ndarray, np.ndarray]:
        keys, mats = [], []
        for batch in self.space.all_matrices():
            ok = self.contains_det(self.space.det(batch))
            keys.append(self.space.keys(batch[ok]))
            mats.append(batch[ok].astype(np.uint8))
        k = np.concatenate(keys)
        m = np.concatenate(mats)
        if len(k) != self.order:
            raise AssertionError(f"enumerated {len(k)} elements of {self.spec}, expected {self.order}")
        return k, m  # already in key order

    @property
    def keys(self) -> np.ndarray:
        return self._elements[0]

    @property
    def elements(self) -> np.ndarray:
        return self._elements[1]

    def index_of(self, keys: np.ndarray, pool: np.ndarray | None = None) -> np.ndarray:
        pool = self.keys if pool is None else pool
        idx = np.searchsorted(pool, keys)
        idx = np.minimum(idx, len(pool) - 1)
        if not (pool[idx] == keys).all():
            raise AssertionError("conjugation left the element set")
        return idx

    def contains(self, g: np.ndarray) -> bool:
        return bool(self.contains_det(self.space.det(np.asarray(g))))

    # -- generators ------------------------------------------------------------

    @cached_property
    def generators(self) -> list[np.ndarray]:
        """Elementary transvections x_{i,i+1}(b), x_{i+1,i}(b) with b running
        over the F_p-basis 1, g, ..., g^{f-1} (these generate SL_n), plus a
        diagonal matrix whose determinant generates det(G)."""
        sp, F = self.space, self.F
        gens = []
        for i in range(self.spec.n - 1):
            for b in (F.power_of_gen(k) for k in range(F.m)):
                gens.append(sp.elementary(i, i + 1, b))
                gens.append(sp.elementary(i + 1, i, b))
        step = self.spec.det_step
        if step % (self.spec.q - 1):
            gens.append(sp.diag([F.power_of_gen(step)] + [1] * (self.spec.n - 1)))
        if not gens:  # GL_1 / SL_1 / R_1 with trivial det group
            gens.append(sp.identity())
        return gens

    # -- l-regularity and orders --------------------------------------------

    def ell_regular_mask(self, ell: int) -> np.ndarray:
        """g is l-regular iff g^{e_l'} = 1, e the exponent bound of GL_n(q)."""
        e = ell_prime_part(gl_exponent_bound(self.spec.n, self.spec.q), ell)
        return self.space.is_identity(self.space.power(self.elements.astype(np.int64), e))

    # -- conjugacy classes -------------------------------------------------

    def conj_classes(self, subset: np.ndarray | None = None) -> ConjClasses:
        """Orbits of G acting by conjugation on ``subset`` (a boolean mask over
        the elements; must be conjugation-stable), via closure under the
        generators."""
        if subset is None:
            keys, mats = self.keys, self.elements
        else:
            keys, mats = self.keys[subset], self.elements[subset]
        N = len(keys)
        if N == 0:
            e = np.zeros(0, dtype=np.int64)
            return ConjClasses(keys, e, e, e)
        mats = mats.astype(np.int64)
        rows, cols = [], []
        base = np.arange(N)
        for g in self.generators:
            img = self.space.keys(self.space.conjugate(g, mats))
            rows.append(base)
            cols.append(self.index_of(img, keys))
        r = np.concatenate(rows)
        c = np.concatenate(cols)
        graph = coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(N, N))
        ncomp, comp = connected_components(graph, directed=True, connection="weak")
        # renumber classes by their least key (keys are sorted, so first hit)
        first = np.full(ncomp, N, dtype=np.int64)
        np.minimum.at(first, comp, base)
        order = np.argsort(first)
        renum = np.empty(ncomp, dtype=np.int64)
        renum[order] = np.arange(ncomp)
        labels = renum[comp]
        sizes = np.bincount(labels, minlength=ncomp)
        reps = keys[np.sort(first)]
        return ConjClasses(keys, labels, reps, sizes)

    def ell_regular_classes(self, ell: int) -> ConjClasses:
        return self.conj_classes(self.ell_regular_mask(ell))

    def ell_regular_count(self, ell: int) -> int:
        return len(self.ell_regular_classes(ell))

    def centralizer(self, g: np.ndarray) -> np.ndarray:
        """Mask of elements commuting with g."""
        X = self.elements.astype(np.int64)
        return (self.space.matmul(g, X) == self.space.matmul(X, g)).all(axis=(-2, -1))


@lru_cache(maxsize=16)
def oracle_group(kind: str, n: int, q: int, ell: int | None = None, cap: int = ORACLE_CAP) -> OracleGroup:
    if kind.upper() != "R":
        ell = None
    return OracleGroup(GroupSpec(kind, n, q, ell), cap)


# -- single-element tools ----------------------------------------------------


def gl_exponent_bound(n: int, q: int) -> int:
    """A multiple of every element order in GL_n(q): lcm_{d<=n}(q^d - 1)
    times the least power of p that is >= n."""
    p = PrimePowerQ(q).p
    e = lcm(*(q**d - 1 for d in range(1, n + 1)))
    pa = 1
    while pa < n:
        pa *= p
    return e * pa


def element_order(space: MatrixSpace, g: np.ndarray) -> int:
    """Order of g, found by stripping primes from the exponent bound."""
    o = gl_exponent_bound(space.n, space.q)
    if not space.is_identity(space.power(g, o)):
        raise ValueError("matrix is not invertible")
    for r in prime_factors(o):
        while o % r == 0 and space.is_identity(space.power(g, o // r)):
            o //= r
    return o


def orbit_size(space: MatrixSpace, g: np.ndarray, gens: list[np.ndarray]) -> int:
    """|g^G| by closing {g} under conjugation by the generators of G."""
    invs = [space.inverse(h) for h in gens]
    seen = np.array([space.key(g)], dtype=np.int64)
    frontier = np.asarray(g, dtype=np.int64)[None]
    while len(frontier):
        imgs = np.concatenate([space.conjugate(h, frontier, hi) for h, hi in zip(gens, invs)])
        ks, first = np.unique(space.keys(imgs), return_index=True)
        new = ~np.isin(ks, seen, assume_unique=True)
        frontier = imgs[first[new]]
        seen = np.union1d(seen, ks[new])
    return len(seen)


def class_splitting(g: np.ndarray, G: OracleGroup, H: OracleGroup) -> int:
    """|g^G| / |g^H| for g in H <= G, both orbits by generator closure."""
    if not H.contains(g):
        raise ValueError("g is not in H")
    a = orbit_size(G.space, g, G.generators)
    b = orbit_size(H.space, g, H.generators)
    if a % b:
        raise AssertionError(f"orbit sizes {a}, {b} do not divide")
    return a // b


def centralizer_scan(space: MatrixSpace, g: np.ndarray, cap: int = SCAN_CAP) -> np.ndarray:
    """All invertible matrices commuting with g, by scanning every matrix."""
    if space.total() > cap:
        raise CapacityError(f"scan of {space.total()} matrices exceeds cap {cap}")
    found = []
    g = np.asarray(g, dtype=np.int64)
    for batch in space.all_matrices():
        ok = (space.matmul(g, batch) == space.matmul(batch, g)).all(axis=(-2, -1))
        batch = batch[ok]
        found.append(batch[space.det(batch) != 0])
    return np.concatenate(found)


def det_image_of_centralizer(space: MatrixSpace, u: np.ndarray, cap: int = SCAN_CAP) -> int:
    """det(C_{GL_n(q)}(u)) as the least exponent k with image <eps^k>;
    k divides q - 1."""
    C = centralizer_scan(space, u, cap)
    logs = np.unique(space.F.log_table[space.det(C)])
    k = space.q - 1
    for x in logs:
        k = gcd(k, int(x))
    return k
