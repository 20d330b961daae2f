from __future__ import annotations

import dataclasses
import itertools
import random

import pytest

from diagquartic.geometry import e_form, f_form, h_form
from diagquartic.mizukami import (
    DEFAULT_PRIME,
    KummerSurface,
    SamplingError,
    build_f,
    build_g,
    denominators_nonzero_on_x,
    dependence_relations,
    kummer_map,
    kummer_map_mod_p,
    sample_x_point,
    square_identities,
    verify_dependence,
    verify_kummer,
    verify_kummer_exact,
    verify_kummer_sampled,
    verify_squares,
)
from diagquartic.numbers import FpElem, Zeta8
from diagquartic.poly import MPoly, RatFunc, fermat_quartic, rf_equal_on_x

z = Zeta8.zeta()
x0, x1, x2, x3 = MPoly.gens()


@pytest.fixture(scope="module")
def data():
    return kummer_map()


def test_build_f_examples():
    assert rf_equal_on_x(build_f(3), RatFunc(f_form(7, 2, 7) * f_form(7, 6, 3) * f_form(5, 3, 4) * f_form(5, 7, 0)))
    num = (
        f_form(7, 2, 7) * f_form(7, 6, 3) * f_form(1, 2, 5) * f_form(1, 6, 1)
        * e_form(1, 1) * (x0 - x1 * z) * (x0 - x1 * z**7)
    )
    den = e_form(2, 1) * (x2 - x3 * z) * (x2 - x3 * z**7)
    assert rf_equal_on_x(build_f(1), RatFunc(num, den))
    with pytest.raises(ValueError):
        build_f(5)


def test_build_g_examples():
    assert rf_equal_on_x(build_g(3), RatFunc(f_form(3, 6, 7) * f_form(3, 2, 3) * f_form(7, 5, 4) * f_form(7, 1, 0)))
    num = (
        f_form(3, 6, 7) * f_form(3, 2, 3) * f_form(3, 2, 7) * f_form(3, 6, 3)
        * h_form(1, 3, 1) * (x0 - x1 * z**3)
    )
    den = h_form(2, 3, 3) * (x0 - x1 * z**7)
    assert rf_equal_on_x(build_g(2), RatFunc(num, den))
    with pytest.raises(ValueError):
        build_g(0)


def test_dependence_and_squares():
    assert len(dependence_relations()) == 4
    assert len(square_identities()) == 2
    assert verify_dependence()
    assert verify_squares()


def test_dependence_negative():
    assert not rf_equal_on_x(build_f(3), build_f(2))
    F1, F2, G1, G2 = build_f(1), build_f(2), build_g(1), build_g(2)
    wrong = (RatFunc(e_form(1, -1)) / RatFunc(h_form(1, 1, 3))) ** 2 * 2
    assert not rf_equal_on_x((F1 * G2) / (F2 * G1), wrong)


@pytest.mark.parametrize("k", [1, 3, 5, 7])
def test_identities_for_every_primitive_root(k):
    eps = z**k
    assert verify_dependence(eps)
    assert verify_squares(eps)


def test_kummer_map_components(data):
    assert rf_equal_on_x(data.z, RatFunc(e_form(1, 1) * (z**3 * (1 + z**2)), h_form(1, 1, 3)))
    assert rf_equal_on_x(data.w2, (build_g(2) / build_g(1)) * (z / (1 + z**2)))
    assert rf_equal_on_x(data.y, RatFunc(e_form(2, 1) * (z**2 * 2), h_form(2, 1, 1)))


def test_kummer_exact(data):
    checks = verify_kummer_exact(data)
    assert len(checks) == 6 and all(checks.values())
    assert verify_kummer("exact", data=data)


def test_kummer_exact_negative(data):
    bad = dataclasses.replace(data, y=data.y * 2)
    checks = verify_kummer_exact(bad)
    assert not checks["y^2 = (w1-1)(w2-1)/((w1-1/2)(w2-1/2))"]
    assert checks["z^2 = w2/w1"]


def test_denominators_nonzero(data):
    assert denominators_nonzero_on_x(data)


@pytest.mark.parametrize("p", [DEFAULT_PRIME, 41, 73])
def test_kummer_sampled(p):
    assert verify_kummer_sampled(p, 100, 0) == (100, 100)


def test_kummer_sampled_seed_1():
    assert verify_kummer("sampled", DEFAULT_PRIME, 100, 1)


def test_kummer_sampled_negative():
    data = kummer_map_mod_p(DEFAULT_PRIME)
    bad = dataclasses.replace(data, y=data.y * 2)
    passed, total = verify_kummer_sampled(DEFAULT_PRIME, 50, 3, bad)
    assert total == 50 and passed < total


def test_sampled_rejects_bad_prime():
    with pytest.raises(ValueError):
        verify_kummer_sampled(13)
    with pytest.raises(ValueError):
        sample_x_point(13, 0)
    with pytest.raises(ValueError):
        verify_kummer("approximate")


def test_sampled_budget_exhaustion():
    with pytest.raises(SamplingError):
        verify_kummer_sampled(41, 100, 0, max_draws=5)


def _normalize(pt, p):
    vals = [int(c) for c in pt]
    k = next(i for i, v in enumerate(vals) if v)
    inv = pow(vals[k], -1, p)
    return tuple(v * inv % p for v in vals)


def test_sample_x_point_against_brute_force():
    p = 17
    brute = set()
    for pt in itertools.product(range(p), repeat=4):
        if any(pt) and sum(pow(v, 4, p) for v in pt) % p == 0:
            brute.add(_normalize(pt, p))
    quartic = fermat_quartic(FpElem(1, p))
    rng = random.Random(5)
    seen = set()
    for _ in range(400):
        pt = sample_x_point(p, rng)
        assert quartic.evaluate(pt) == 0
        seen.add(_normalize(pt, p))
    assert seen <= brute
    assert (0, 0, 1, 2) in brute  # x1 = 0, x2 = 1, x3 = 2: 1 + 16 = 0 mod 17


def test_sample_x_point_is_seeded():
    assert sample_x_point(41, 9) == sample_x_point(41, 9)


def test_kummer_residuals():
    assert KummerSurface.residuals(3, 3, 2, 1)[1] == 0
    assert KummerSurface.residuals(2, 2, 1, 1)[0] != 0
