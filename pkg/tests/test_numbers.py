from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from diagquartic.numbers import (
    FpElem,
    GaussInt,
    Zeta8,
    factor_int,
    fp_fourth_roots,
    fp_sqrt_all,
    fp_zeta8,
    gauss_primary_split,
    is_primary,
    is_prime,
    primes_below,
    q8_inv,
    q8_is_fourth_power,
    q8_mul,
)

z = Zeta8.zeta()
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))
zeta8s = st.tuples(rationals, rationals, rationals, rationals).map(Zeta8)


def test_power_basis_constants():
    assert Zeta8.i() == z**2
    assert Zeta8.sqrt2() == z - z**3
    assert Zeta8.sqrt2() ** 2 == 2
    assert Zeta8.i() ** 2 == -1
    assert z**4 == -1 and z**8 == 1


def test_q8_mul_examples():
    assert q8_mul(z, z**3) == -1
    assert q8_mul(z - z**3, z - z**3) == 2
    assert q8_mul(z**2, z**2) == -1


def test_q8_inv_examples():
    one = Zeta8.coerce(1)
    assert q8_inv(one) == 1
    assert q8_inv(z) == -(z**3)
    assert q8_inv(1 + z**2) == (1 - z**2) / 2
    with pytest.raises(ZeroDivisionError):
        q8_inv(Zeta8())


def test_zeta8_representation_is_unique():
    a = Zeta8([Fraction(2, 4), 0, 0, 0])
    assert a == Fraction(1, 2)
    assert a.coords == (Fraction(1, 2), 0, 0, 0)
    assert hash(a) == hash(Zeta8([Fraction(1, 2), 0, 0, 0]))


@settings(max_examples=200, deadline=None)
@given(zeta8s, zeta8s, zeta8s)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    if not a.is_zero():
        assert a * q8_inv(a) == 1


@settings(max_examples=100, deadline=None)
@given(zeta8s)
def test_sqrt_of_square(a):
    r = (a * a).sqrt()
    assert r is not None and r * r == a * a


def test_fourth_powers_in_q8():
    assert q8_is_fourth_power(Zeta8.coerce(4))
    assert q8_is_fourth_power(Zeta8.coerce(-4))
    assert not q8_is_fourth_power(Zeta8.coerce(2))
    assert not q8_is_fourth_power(Zeta8.coerce(3))


def test_factor_and_primes():
    assert factor_int(360) == {2: 3, 3: 2, 5: 1}
    assert factor_int(-12) == {2: 2, 3: 1}
    assert primes_below(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert [n for n in range(30) if is_prime(n)] == primes_below(30)


def test_gauss_int_arithmetic():
    a, b = GaussInt(1, 2), GaussInt(3, -1)
    assert a * b == GaussInt(5, 5)
    assert (a * b).norm() == a.norm() * b.norm()
    assert GaussInt(-1, 2) ** 4 == GaussInt(-7, 24)
    assert GaussInt(2, 2).divides(GaussInt(4, 0))
    assert repr(GaussInt(-1, 2)) == "-1+2i"


@pytest.mark.parametrize("p, expected", [(5, GaussInt(-1, 2)), (17, GaussInt(1, 4)), (13, GaussInt(3, 2))])
def test_gauss_primary_split_examples(p, expected):
    assert gauss_primary_split(p) == expected


def _primary_oracle(p):
    # all a + bi of norm p, all unit multiples, filtered by the congruence mod 2+2i
    out = []
    for a in range(-p, p + 1):
        for b in range(1, p + 1):
            if a * a + b * b == p and GaussInt(2, 2).divides(GaussInt(a - 1, b)):
                out.append(GaussInt(a, b))
    return out


@pytest.mark.parametrize("p", [5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97])
def test_gauss_primary_split_oracle(p):
    assert _primary_oracle(p) == [gauss_primary_split(p)]


def test_gauss_primary_split_all_below_10000():
    for p in primes_below(10_000):
        if p % 4 != 1:
            continue
        pi = gauss_primary_split(p)
        assert pi.norm() == p and pi.im > 0
        assert GaussInt(2, 2).divides(pi - 1)
        assert is_primary(pi)


@pytest.mark.parametrize("p", [2, 3, 7, 15])
def test_gauss_primary_split_rejects(p):
    with pytest.raises(ValueError):
        gauss_primary_split(p)


def test_fp_fourth_roots_examples():
    assert [int(r) for r in fp_fourth_roots(FpElem(1, 17))] == [1, 4, 13, 16]
    assert [int(r) for r in fp_fourth_roots(FpElem(0, 41))] == [0]
    assert fp_fourth_roots(FpElem(2, 5)) == []


@pytest.mark.parametrize("p", [3, 5, 13, 17, 41, 73, 97, 113, 241, 257])
def test_fp_roots_brute_force(p):
    for c in range(p):
        fourth = sorted(x for x in range(p) if pow(x, 4, p) == c)
        square = sorted(x for x in range(p) if x * x % p == c)
        assert [int(r) for r in fp_fourth_roots(FpElem(c, p))] == fourth
        assert sorted(int(r) for r in fp_sqrt_all(FpElem(c, p))) == square


def test_fp_zeta8():
    assert fp_zeta8(17) == 2
    e = fp_zeta8(41)
    assert e**4 == -1
    for p in primes_below(1000):
        if p % 8 == 1:
            assert fp_zeta8(p) ** 4 == -1
    with pytest.raises(ValueError):
        fp_zeta8(13)


def test_fp_elem_field_ops():
    a = FpElem(5, 13)
    assert a * a.inverse() == 1
    assert a / 5 == 1
    assert a + Fraction(1, 2) == FpElem(5 + 7, 13)
    with pytest.raises(ZeroDivisionError):
        FpElem(0, 13).inverse()
