"""The map from the Fermat quartic X to the Kummer surface
y^2 = (w1-1)(w2-1)/((w1-1/2)(w2-1/2)),  z^2 = w2/w1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .geometry import default_eps, e_form, f_form, h_form
from .numbers import FpElem, fp_fourth_roots, fp_zeta8, is_prime
from .poly import MPoly, RatFunc, nf_fermat, product_on_x, rf_equal_on_x

DEFAULT_PRIME = 998244353
HALF = Fraction(1, 2)


class SamplingError(RuntimeError):
    pass


def _gens(eps):
    return MPoly.gens(eps**0)


def _f(code: str, eps) -> MPoly:
    return f_form(int(code[0]), int(code[1]), int(code[2]), eps)


def _prod(codes: str, eps) -> MPoly:
    return product_on_x([_f(c, eps) for c in codes.split()])


def _lin(i: int, j: int, k: int, eps) -> MPoly:
    """x_i - eps^k x_j."""
    x = _gens(eps)
    return x[i] - x[j] * eps ** (k % 8)


def _rat(num_factors: list[MPoly], den_factors: list[MPoly], eps) -> RatFunc:
    one = eps**0
    return RatFunc(product_on_x(num_factors, one), product_on_x(den_factors, one))


def build_f(i: int, eps=None) -> RatFunc:
    eps = default_eps() if eps is None else eps
    if i not in (1, 2, 3, 4):
        raise ValueError(f"F_{i} is not defined; i must be 1..4")
    ep, em = e_form(1, 1, eps), e_form(1, -1, eps)
    epp, epm = e_form(2, 1, eps), e_form(2, -1, eps)
    h13, h33pp = h_form(1, 1, 3, eps), h_form(2, 3, 3, eps)
    common = _prod("727 763", eps)
    if i == 1:
        return _rat(
            [common, _prod("125 161", eps), ep, _lin(0, 1, 1, eps), _lin(0, 1, 7, eps)],
            [epp, _lin(2, 3, 1, eps), _lin(2, 3, 7, eps)],
            eps,
        )
    if i == 2:
        return _rat(
            [common, _prod("327 363", eps), h13, _lin(2, 3, 5, eps)],
            [h33pp, _lin(2, 3, 1, eps)],
            eps,
        )
    if i == 3:
        return _rat([common, _prod("534 570", eps)], [], eps)
    return _rat(
        [common, _prod("754 710", eps), epm, h13, _lin(0, 1, 1, eps), _lin(0, 1, 7, eps)],
        [em, h33pp, _lin(2, 3, 1, eps), _lin(2, 3, 3, eps)],
        eps,
    )


def build_g(i: int, eps=None) -> RatFunc:
    eps = default_eps() if eps is None else eps
    if i not in (1, 2, 3, 4):
        raise ValueError(f"G_{i} is not defined; i must be 1..4")
    ep, em = e_form(1, 1, eps), e_form(1, -1, eps)
    epp, epm = e_form(2, 1, eps), e_form(2, -1, eps)
    h31, h33pp = h_form(1, 3, 1, eps), h_form(2, 3, 3, eps)
    common = _prod("367 323", eps)
    if i == 1:
        return _rat(
            [common, _prod("125 161", eps), em, _lin(0, 1, 1, eps), _lin(0, 1, 3, eps)],
            [epp, _lin(2, 3, 5, eps), _lin(2, 3, 7, eps)],
            eps,
        )
    if i == 2:
        return _rat(
            [common, _prod("327 363", eps), h31, _lin(0, 1, 3, eps)],
            [h33pp, _lin(0, 1, 7, eps)],
            eps,
        )
    if i == 3:
        return _rat([common, _prod("754 710", eps)], [], eps)
    return _rat(
        [common, _prod("534 570", eps), epm, h31, _lin(2, 3, 1, eps), _lin(2, 3, 3, eps)],
        [ep, h33pp, _lin(0, 1, 1, eps), _lin(0, 1, 7, eps)],
        eps,
    )


def dependence_relations(eps=None) -> dict[str, tuple[RatFunc, RatFunc]]:
    """Each entry pairs a function with the linear combination claimed equal to it."""
    eps = default_eps() if eps is None else eps
    F = {i: build_f(i, eps) for i in range(1, 5)}
    G = {i: build_g(i, eps) for i in range(1, 5)}
    i2 = eps**2
    c = eps * (1 + i2)
    return {
        "F3 = e^2 F2 - e(1+e^2) F1": (F[3], F[2] * i2 - F[1] * c),
        "F4 = -e(1+e^2) F2 + e^2 F1": (F[4], F[1] * i2 - F[2] * c),
        "G3 = e(1+e^2) G1 - e^2 G2": (G[3], G[1] * c - G[2] * i2),
        "G4 = -e(1+e^2) G2 + e^2 G1": (G[4], G[1] * i2 - G[2] * c),
    }


def square_identities(eps=None) -> dict[str, tuple[RatFunc, RatFunc]]:
    eps = default_eps() if eps is None else eps
    F = {i: build_f(i, eps) for i in range(1, 5)}
    G = {i: build_g(i, eps) for i in range(1, 5)}
    ep, epp = RatFunc(e_form(1, 1, eps)), RatFunc(e_form(2, 1, eps))
    h13, h11pp = RatFunc(h_form(1, 1, 3, eps)), RatFunc(h_form(2, 1, 1, eps))
    return {
        "F1 G2 / F2 G1 = 2 (e'+ / h'13)^2": ((F[1] * G[2]) / (F[2] * G[1]), (ep / h13) ** 2 * 2),
        "F3 G3 / F4 G4 = 2 (e''+ / h''11)^2": ((F[3] * G[3]) / (F[4] * G[4]), (epp / h11pp) ** 2 * 2),
    }


def verify_dependence(eps=None) -> bool:
    return all(rf_equal_on_x(a, b) for a, b in dependence_relations(eps).values())


def verify_squares(eps=None) -> bool:
    return all(rf_equal_on_x(a, b) for a, b in square_identities(eps).values())


@dataclass
class MizukamiData:
    F: tuple[RatFunc, ...]
    G: tuple[RatFunc, ...]
    w1: RatFunc
    w2: RatFunc
    y: RatFunc
    z: RatFunc
    epsilon: object


@dataclass(frozen=True)
class KummerSurface:
    """Two equations in (w1, w2, y, z); no arithmetic on the surface itself."""

    equations: tuple[str, str] = (
        "y^2 = (w1-1)(w2-1)/((w1-1/2)(w2-1/2))",
        "z^2 = w2/w1",
    )

    @staticmethod
    def residuals(w1, w2, y, z) -> tuple:
        """Cleared-denominator residuals of both equations at field values."""
        return (
            y * y * (w1 - HALF) * (w2 - HALF) - (w1 - 1) * (w2 - 1),
            z * z * w1 - w2,
        )


def kummer_map(eps=None) -> MizukamiData:
    eps = default_eps() if eps is None else eps
    F = tuple(build_f(i, eps) for i in range(1, 5))
    G = tuple(build_g(i, eps) for i in range(1, 5))
    i2 = eps**2
    k = eps / (1 + i2)
    w1 = RatFunc(F[1].num * F[0].den, F[1].den * F[0].num) * k
    w2 = RatFunc(G[1].num * G[0].den, G[1].den * G[0].num) * k
    z = RatFunc(e_form(1, 1, eps) * (eps**3 * (1 + i2)), h_form(1, 1, 3, eps))
    y = RatFunc(e_form(2, 1, eps) * (i2 * 2), h_form(2, 1, 1, eps))
    return MizukamiData(F, G, w1, w2, y, z, eps)


def kummer_identities(data: MizukamiData) -> dict[str, tuple[RatFunc, RatFunc]]:
    """Kummer equations and the four ratio identities as pairs of functions on X."""
    eps = data.epsilon
    F, G, w1, w2, y, z = data.F, data.G, data.w1, data.w2, data.y, data.z
    i2 = eps**2
    c = eps * (1 + i2)
    return {
        "z^2 = w2/w1": (z * z, w2 / w1),
        "y^2 = (w1-1)(w2-1)/((w1-1/2)(w2-1/2))": (
            y * y,
            ((w1 - 1) * (w2 - 1)) / ((w1 - HALF) * (w2 - HALF)),
        ),
        "F3/F1 = e(1+e^2)(w1-1)": (F[2] / F[0], (w1 - 1) * c),
        "F4/F1 = -2e^2(w1-1/2)": (F[3] / F[0], (w1 - HALF) * (i2 * -2)),
        "G3/G1 = -e(1+e^2)(w2-1)": (G[2] / G[0], (w2 - 1) * (-c)),
        "G4/G1 = -2e^2(w2-1/2)": (G[3] / G[0], (w2 - HALF) * (i2 * -2)),
    }


def _denominators(data: MizukamiData) -> list[MPoly]:
    polys = []
    for r in (*data.F, *data.G, data.w1, data.w2, data.y, data.z):
        polys += [r.num, r.den]
    return polys


def sample_x_point(p: int, rng: random.Random | int, max_tries: int = 10_000) -> tuple:
    """A projective F_p-point of X, solving for x0 from random (x1, x2, x3)."""
    if not is_prime(p) or p % 8 != 1:
        raise ValueError(f"{p} is not a prime congruent to 1 mod 8")
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    for _ in range(max_tries):
        x1, x2, x3 = (FpElem(rng.randrange(p), p) for _ in range(3))
        roots = fp_fourth_roots(-(x1**4 + x2**4 + x3**4))
        if not roots:
            continue
        x0 = roots[rng.randrange(len(roots))]
        if x0 or x1 or x2 or x3:
            return (x0, x1, x2, x3)
    raise SamplingError(f"no point of X over F_{p} found in {max_tries} draws")


def verify_kummer_exact(data: MizukamiData | None = None) -> dict[str, bool]:
    data = kummer_map() if data is None else data
    return {k: rf_equal_on_x(a, b) for k, (a, b) in kummer_identities(data).items()}


def verify_kummer_sampled(
    p: int = DEFAULT_PRIME,
    trials: int = 100,
    seed: int = 0,
    data: MizukamiData | None = None,
    max_draws: int | None = None,
) -> tuple[int, int]:
    """(passed, trials) at random points of X(F_p) where the map is defined.

    ``data`` must already be built over F_p (see :func:`kummer_map_mod_p`).
    """
    if not is_prime(p) or p % 8 != 1:
        raise ValueError(f"{p} is not a prime congruent to 1 mod 8")
    data = kummer_map_mod_p(p) if data is None else data
    rng = random.Random(seed)
    guards = _denominators(data)
    budget = max_draws if max_draws is not None else 200 * trials
    passed = done = draws = 0
    while done < trials:
        if draws >= budget:
            raise SamplingError(f"only {done} usable points of X(F_{p}) in {budget} draws")
        draws += 1
        pt = sample_x_point(p, rng)
        if any(not g.evaluate(pt) for g in guards):
            continue
        w1, w2 = data.w1.evaluate(pt), data.w2.evaluate(pt)
        if w1 == HALF or w2 == HALF:
            continue
        y, z = data.y.evaluate(pt), data.z.evaluate(pt)
        done += 1
        if not any(KummerSurface.residuals(w1, w2, y, z)):
            passed += 1
    return passed, trials


def kummer_map_mod_p(p: int) -> MizukamiData:
    return kummer_map(fp_zeta8(p))


def verify_kummer(mode: str = "exact", p: int = DEFAULT_PRIME, trials: int = 100,
                  seed: int = 0, data: MizukamiData | None = None) -> bool:
    if mode == "exact":
        return all(verify_kummer_exact(data).values())
    if mode == "sampled":
        passed, total = verify_kummer_sampled(p, trials, seed, data)
        return passed == total
    raise ValueError(f"unknown verification mode {mode!r}")


def denominators_nonzero_on_x(data: MizukamiData | None = None) -> bool:
    data = kummer_map() if data is None else data
    return all(not nf_fermat(r.den).is_zero() for r in (*data.F, *data.G, data.w1, data.w2, data.y, data.z))
