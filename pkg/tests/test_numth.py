from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from slbranch.numth import (
    EllPrime,
    PrimePowerQ,
    ell_part,
    ell_prime_part,
    ell_val,
    gcd_many,
    is_prime,
    lnt_check,
    prime_factors,
    prime_power,
)


def test_prime_power_basics():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(13) == (13, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None
    assert PrimePowerQ(49).p == 7 and PrimePowerQ(49).f == 2


def test_invalid_contexts():
    with pytest.raises(ValueError):
        PrimePowerQ(6)
    with pytest.raises(ValueError):
        EllPrime(3, PrimePowerQ(9))
    with pytest.raises(ValueError):
        EllPrime(4, PrimePowerQ(5))
    assert EllPrime(0, PrimePowerQ(5)).char_zero


def test_ell_parts_examples():
    assert ell_part(24, 2) == 8
    assert ell_prime_part(24, 2) == 3
    assert ell_val(81, 3) == 4
    assert ell_part(7, 0) == 1
    with pytest.raises(ValueError):
        ell_val(0, 2)


@given(st.integers(1, 10**6), st.sampled_from([2, 3, 5, 7, 11]))
def test_ell_part_split(m, ell):
    a, b = ell_part(m, ell), ell_prime_part(m, ell)
    assert a * b == m
    assert b % ell != 0
    assert a == ell ** ell_val(m, ell)


@given(st.integers(2, 5000))
def test_prime_factors_reconstruct(m):
    fs = prime_factors(m)
    assert all(is_prime(p) for p in fs)
    rest = m
    for p in fs:
        while rest % p == 0:
            rest //= p
    assert rest == 1


def test_gcd_many():
    assert gcd_many(12, 18, 30) == 6
    assert gcd_many() == 0


def test_lnt_examples():
    # r = 3: c = 1, ell = 2, r = 3 mod 4 is the flagged family
    res = lnt_check(3, 2, 1)
    assert res.exceptional and res.actual == 4 and res.predicted == 2
    res = lnt_check(5, 2, 3)
    assert not res.exceptional and res.actual == 8 and res.holds
    res = lnt_check(7, 3, 2)
    assert res.actual == 9
    with pytest.raises(ValueError):
        lnt_check(4, 2, 1)
    with pytest.raises(ValueError):
        lnt_check(3, 2, 7)


def test_lnt_exhaustive_small():
    for ell in (2, 3, 5, 7):
        for r in range(ell + 1, 200, ell):
            d = 1
            while ell**d <= 64:
                assert lnt_check(r, ell, d).holds
                d += 1
