from __future__ import annotations

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from slbranch import partitions as P
from slbranch.classcount import (
    ClassLabel,
    SemisimpleLabel,
    centralizer_order,
    class_size,
    enumerate_labels,
    gl_order,
    is_ell_regular,
    unipotent_centralizer_order,
)
from slbranch.errors import CapacityError
from slbranch.gfq import FrobClass
from slbranch.numth import ell_part
from slbranch.oracle import (
    GroupSpec,
    OracleGroup,
    centralizer_scan,
    class_rep,
    class_splitting,
    det_image_of_centralizer,
    element_order,
    matrix_space,
    minimal_polynomial,
    oracle_group,
    zech_field,
)
from slbranch.oracle.field import least_primitive_polynomial


def unipotent(q, lam):
    return ClassLabel(q, SemisimpleLabel(((FrobClass(1, 0), P.size(lam)),)), (lam,))


# -- fields ---------------------------------------------------------------------


def _irreducible_brute(low, p):
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(low)
    f = list(low) + [1]

    def polymod(a, b):
        a = a[:]
        while len(a) >= len(b):
            c = a[-1] * pow(b[-1], -1, p) % p
            shift = len(a) - len(b)
            for i, y in enumerate(b):
                a[shift + i] = (a[shift + i] - c * y) % p
            a.pop()
        return a

    for d in range(1, m // 2 + 1):
        for coeffs in product(range(p), repeat=d):
            g = list(coeffs) + [1]
            if not any(polymod(f, g)):
                return False
    return True


@pytest.mark.parametrize("size", [4, 8, 9, 16, 25, 27, 32, 49, 64])
def test_primitive_polynomial_is_irreducible(size):
    F = zech_field(size)
    assert _irreducible_brute(list(F.poly), F.p)


def test_primitive_polynomial_values():
    assert least_primitive_polynomial(2, 2) == (1, 1)  # x^2 + x + 1
    assert least_primitive_polynomial(2, 3) == (1, 1, 0)  # x^3 + x + 1
    assert least_primitive_polynomial(3, 2) == (2, 1)  # x^2 + x + 2
    assert zech_field(7).gen() == 3
    assert zech_field(13).gen() == 2


@pytest.mark.parametrize("size", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64])
def test_field_axioms_exhaustive(size):
    F = zech_field(size)
    A, M = F.add_table, F.mul_table
    x = np.arange(size)
    assert (A[0] == x).all() and (M[1] == x).all()
    assert (A == A.T).all() and (M == M.T).all()
    # associativity and distributivity over all triples
    a, b, c = np.meshgrid(x, x, x, indexing="ij")
    assert (A[A[a, b], c] == A[a, A[b, c]]).all()
    assert (M[M[a, b], c] == M[a, M[b, c]]).all()
    assert (M[a, A[b, c]] == A[M[a, b], M[a, c]]).all()
    # inverses
    assert all(A[v, F.neg(v)] == 0 for v in range(size))
    assert all(M[v, F.inv(v)] == 1 for v in range(1, size))


# -- matrices ---------------------------------------------------------------------


def test_keys_injective():
    sp = matrix_space(2, 3)
    mats = next(sp.all_matrices())
    keys = sp.keys(mats)
    assert len(np.unique(keys)) == 81 == len(keys)
    assert (sp.from_keys(keys) == mats).all()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([(2, 3), (2, 4), (3, 2), (3, 5), (2, 9)]), st.data())
def test_matmul_inverse_det(nq, data):
    n, q = nq
    sp = matrix_space(n, q)
    G = oracle_group("GL", n, q) if gl_order(n, q) <= 10**5 else oracle_group("SL", n, q)
    i = data.draw(st.integers(0, G.order - 1))
    j = data.draw(st.integers(0, G.order - 1))
    g = G.elements[i].astype(np.int64)
    h = G.elements[j].astype(np.int64)
    assert sp.is_identity(sp.matmul(g, sp.inverse(g)))
    F = sp.F
    assert int(sp.det(sp.matmul(g, h))) == F.mul(int(sp.det(g)), int(sp.det(h)))


# -- groups -----------------------------------------------------------------------


def test_group_orders():
    assert oracle_group("GL", 2, 3).keys.size == 48
    assert oracle_group("SL", 2, 3).keys.size == 24
    assert oracle_group("R", 2, 3, 2).keys.size == 24
    assert oracle_group("R", 2, 7, 2).keys.size == gl_order(2, 7) // 2
    assert GroupSpec("r", 2, 5, 3).order == gl_order(2, 5)


def test_capacity_errors():
    with pytest.raises(CapacityError):
        OracleGroup(GroupSpec("GL", 3, 5))
    with pytest.raises(CapacityError):
        OracleGroup(GroupSpec("SL", 3, 7))
    with pytest.raises(ValueError):
        GroupSpec("R", 2, 3)
    with pytest.raises(ValueError):
        GroupSpec("PSL", 2, 3)


def test_conj_classes_examples():
    G = oracle_group("GL", 2, 3)
    cc = G.conj_classes()
    assert len(cc) == 8
    assert cc.sizes.sum() == 48
    assert oracle_group("SL", 2, 3).ell_regular_count(2) == 3
    # representatives are least keys
    for r, lab in zip(cc.reps, range(len(cc))):
        assert r == cc.keys[cc.labels == lab].min()


@pytest.mark.parametrize("kind,n,q", [("GL", 2, 5), ("SL", 2, 7), ("GL", 3, 2), ("SL", 3, 3), ("GL", 2, 8)])
def test_class_sizes_sum(kind, n, q):
    cc = oracle_group(kind, n, q).conj_classes()
    assert cc.sizes.sum() == oracle_group(kind, n, q).order


def test_known_sl_class_numbers():
    # SL_2(q): q + 4 classes for odd q, q + 1 for even q
    for q in (3, 5, 7, 9, 11):
        assert len(oracle_group("SL", 2, q).conj_classes()) == q + 4
    for q in (2, 4, 8):
        assert len(oracle_group("SL", 2, q).conj_classes()) == q + 1


def test_element_order():
    sp = matrix_space(2, 3)
    assert element_order(sp, sp.identity()) == 1
    assert element_order(sp, sp.elementary(0, 1, 1)) == 3
    assert element_order(sp, sp.diag([2, 1])) == 2
    with pytest.raises(ValueError):
        element_order(sp, np.zeros((2, 2), dtype=np.int64))


def test_class_splitting_examples():
    GL, R = oracle_group("GL", 2, 3), oracle_group("R", 2, 3, 2)
    sp = GL.space
    assert class_splitting(sp.identity(), GL, R) == 1
    assert class_splitting(sp.elementary(0, 1, 1), GL, R) == 2
    with pytest.raises(ValueError):
        class_splitting(sp.diag([2, 1]), GL, R)


def test_det_image_examples():
    for n, q in [(1, 3), (2, 3), (3, 2), (2, 5)]:
        sp = matrix_space(n, q)
        assert det_image_of_centralizer(sp, sp.identity()) == 1
    sp = matrix_space(2, 3)
    u = class_rep(unipotent(3, (2,)), sp)
    assert len(centralizer_scan(sp, u)) == 6
    assert det_image_of_centralizer(sp, u) == 2
    sp3 = matrix_space(3, 3)
    assert det_image_of_centralizer(sp3, class_rep(unipotent(3, (2, 1)), sp3)) == 1


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (3, 5)])
def test_unipotent_centralizer_scan(n, q):
    sp = matrix_space(n, q)
    for lam in P.partitions_of(n):
        if n == 3 and q == 5 and lam == (1, 1, 1):
            continue  # full group; covered by gl_order
        C = centralizer_scan(sp, class_rep(unipotent(q, lam), sp))
        assert len(C) == unipotent_centralizer_order(lam, q)


# -- representatives --------------------------------------------------------------


def test_class_rep_examples():
    sp = matrix_space(3, 5)
    lab = ClassLabel(5, SemisimpleLabel(((FrobClass(1, 0), 1), (FrobClass(1, 1), 2))), ((1,), (1, 1)))
    g = class_rep(lab, sp)
    assert (g == np.diag(np.diag(g))).all()
    # a degree-2 class over F_3 gives an irreducible companion matrix
    f = minimal_polynomial(3, FrobClass(2, 1))
    F = zech_field(3)
    assert len(f) == 3 and f[-1] == 1
    assert all(F.add(F.mul(F.mul(x, x), 1), F.add(F.mul(f[1], x), f[0])) != 0 for x in range(3))


@pytest.mark.parametrize("n,q", [(1, 7), (2, 3), (2, 4), (2, 5), (2, 7), (2, 9), (3, 2), (3, 3), (3, 4)])
def test_class_reps_match_labels(n, q):
    G = oracle_group("GL", n, q)
    cc = G.conj_classes()
    sp = G.space
    seen = set()
    for lab in enumerate_labels(n, q):
        g = class_rep(lab, sp)
        c = cc.class_of(sp.key(g))
        assert c not in seen
        seen.add(c)
        assert cc.sizes[c] == class_size(lab)
        assert G.centralizer(g).sum() == centralizer_order(lab)
        o = element_order(sp, g)
        for ell in (2, 3, 5, 7):
            if q % ell:
                assert (o % ell != 0) == is_ell_regular(lab, ell)
    assert len(seen) == len(cc)


def test_conj_index_identity_sampled():
    # |g^G| / |g^R| = gcd(c, d) with c = (G : C_G(g) S) and d = (G : R)
    for q, ell in [(5, 2), (7, 3), (9, 2), (4, 3)]:
        GL, R = oracle_group("GL", 2, q), oracle_group("R", 2, q, ell)
        sp = GL.space
        d = ell_part(q - 1, ell)
        rng = np.random.default_rng(q)
        for i in rng.choice(R.order, size=25, replace=False):
            g = R.elements[i].astype(np.int64)
            dets = sp.det(GL.elements[GL.centralizer(g)])
            c = (q - 1) // len(np.unique(dets))
            assert class_splitting(g, GL, R) == np.gcd(c, d)
