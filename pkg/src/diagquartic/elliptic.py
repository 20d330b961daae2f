"""Short Weierstrass curves over exact fields, CM by Z[i] on y^2 = x^3 - x,
torsion checks and Frobenius traces."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .galois import mult_order_mod
from .numbers import (
    FpElem,
    GaussInt,
    Zeta8,
    fp_sqrt_all,
    fp_sqrt_minus_one,
    gauss_primary_split,
    is_prime,
    primes_below,
    q8_is_fourth_power,
)
from .poly import MPoly, reduce_power


@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + a x + b."""

    a: object
    b: object = 0

    def __post_init__(self):
        if not self.discriminant():
            raise ValueError("singular curve")

    def discriminant(self):
        return -16 * (4 * self.a**3 + 27 * self.b**2)

    def j_invariant(self):
        a = Fraction(self.a) if isinstance(self.a, int) else self.a
        return -1728 * (4 * a) ** 3 / self.discriminant()

    def contains(self, P: "EcPoint") -> bool:
        if P.is_infinity():
            return True
        return P.y * P.y == P.x**3 + self.a * P.x + self.b


E = Curve(-1, 0)  # the lemniscatic curve
C_PRIME = Curve(-4, 0)


@dataclass(frozen=True)
class EcPoint:
    x: object = None
    y: object = None

    @classmethod
    def infinity(cls) -> "EcPoint":
        return cls()

    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self) -> str:
        return "O" if self.is_infinity() else f"({self.x}, {self.y})"


O = EcPoint.infinity()


def ec_neg(P: EcPoint) -> EcPoint:
    return P if P.is_infinity() else EcPoint(P.x, -P.y)


def ec_add(P: EcPoint, Q: EcPoint, C: Curve) -> EcPoint:
    if P.is_infinity():
        return Q
    if Q.is_infinity():
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return O
        lam = (3 * P.x * P.x + C.a) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    return EcPoint(x3, lam * (P.x - x3) - P.y)


def ec_scalar_mul(n: int, P: EcPoint, C: Curve) -> EcPoint:
    if n < 0:
        return ec_scalar_mul(-n, ec_neg(P), C)
    result, base = O, P
    while n:
        if n & 1:
            result = ec_add(result, base, C)
        base = ec_add(base, base, C)
        n >>= 1
    return result


def duplication_x(x):
    """x(2P) on y^2 = x^3 - x, read as (x^2+1)^2 / (4 x (x^2-1))."""
    return (x * x + 1) ** 2 / (4 * x * (x * x - 1))


def sqrt_minus_one_like(c):
    """The element i used for [i] in the field of ``c``."""
    if isinstance(c, Zeta8):
        return Zeta8.i()
    if isinstance(c, FpElem):
        return fp_sqrt_minus_one(c.p)
    raise ValueError(f"the field of {c!r} has no square root of -1")


def cm_apply(alpha, P: EcPoint, C: Curve = E, i=None) -> EcPoint:
    """[a+bi]P = aP + b([i]P) with [i](x, y) = (-x, i y)."""
    if C.b != 0:
        raise ValueError("CM by Z[i] needs a curve y^2 = x^3 + a x")
    alpha = GaussInt.coerce(alpha)
    if P.is_infinity():
        return P
    if i is None:
        i = sqrt_minus_one_like(P.x)
    iP = EcPoint(-P.x, i * P.y)
    return ec_add(ec_scalar_mul(alpha.re, P, C), ec_scalar_mul(alpha.im, iP, C), C)


def _reduce_mod(c, p: int) -> FpElem:
    return FpElem(0, p) + c


def count_points(C: Curve, p: int) -> int:
    """#C(F_p) by enumeration, infinity included."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"count_points needs an odd prime, got {p}")
    a, b = _reduce_mod(C.a, p).value, _reduce_mod(C.b, p).value
    if (4 * a**3 + 27 * b**2) % p == 0:
        raise ValueError(f"bad reduction at {p}")
    sq = [0] * p
    for y in range(p):
        sq[y * y % p] += 1
    return 1 + sum(sq[(x * x * x + a * x + b) % p] for x in range(p))


def frobenius_primary(p: int) -> GaussInt:
    pi = gauss_primary_split(p)
    trace = p + 1 - count_points(E, p)
    if 2 * pi.re != trace:
        raise AssertionError(f"trace mismatch at {p}: 2*{pi.re} != {trace}")
    return pi


def three_division_poly(C: Curve) -> MPoly:
    """psi_3 / 3 = t^4 + 2a t^2 + 4b t - a^2/3 as a polynomial in x0."""
    one = Fraction(1)
    t = MPoly.var(0, one)
    a, b = Fraction(C.a), Fraction(C.b)
    return t**4 + t**2 * (2 * a) + t * (4 * b) - MPoly.const(a * a / 3, one)


def duplication_fixed_point_poly() -> MPoly:
    """Numerator of x(2P) - x(P) on E, i.e. (x^2+1)^2 - 4x^2(x^2-1)."""
    one = Fraction(1)
    t = MPoly.var(0, one)
    return (t**2 + 1) ** 2 - t**2 * (t**2 - 1) * 4


def _halves_of_two_torsion(root, others) -> list[EcPoint]:
    # 2P = (e1, 0) iff x(P) = e1 +- sqrt((e1-e2)(e1-e3))
    d = (root - others[0]) * (root - others[1])
    s = d.sqrt()
    if s is None:
        return []
    out = []
    for x in (root + s, root - s):
        y = (x**3 - x).sqrt()
        if y is None:
            continue
        out += [EcPoint(x, y), EcPoint(x, -y)]
    return out


def four_torsion_q8() -> list[EcPoint]:
    """All 16 points of E[4], with coordinates in Q(zeta8)."""
    zero, one = Zeta8.coerce(0), Zeta8.coerce(1)
    roots = [zero, one, -one]
    pts = [O] + [EcPoint(r, zero) for r in roots]
    for k, r in enumerate(roots):
        pts += _halves_of_two_torsion(r, roots[:k] + roots[k + 1 :])
    return pts


def mod5_point(p: int, i_p: FpElem | None = None, conjugate: bool = False) -> EcPoint | None:
    """A point (x, y) of E(F_p) with x^2 = (1+2i)^(-1), or (1-2i)^(-1) if
    ``conjugate``; None if no such point is F_p-rational."""
    if i_p is None:
        i_p = fp_sqrt_minus_one(p)
    u = (1 + (-2 if conjugate else 2) * i_p).inverse()
    for x in fp_sqrt_all(u):
        ys = fp_sqrt_all(x**3 - x)
        if ys and ys[0]:
            return EcPoint(x, ys[0])
    return None


def verify_torsion_fields(ell: int, prime_bound: int = 2000) -> dict[str, bool]:
    """Algebraic shadows of the 3- and 5-torsion field computations."""
    if ell == 3:
        return _torsion3()
    if ell == 5:
        return _torsion5(prime_bound)
    raise ValueError("ell must be 3 or 5")


def _torsion3() -> dict[str, bool]:
    i = Zeta8.i()
    a = MPoly.var(1)
    z = a * (a**2 - i) * ((1 + i) / 2)
    expr = z**4 + z**2 * 6 - 3
    root_ok = reduce_power(expr, 1, 4, MPoly.const(-3)).is_zero()
    f = three_division_poly(E)
    psi3 = MPoly.var(0, Fraction(1)) ** 4 * 3 - MPoly.var(0, Fraction(1)) ** 2 * 6 - 1
    return {
        "(1+i)a(a^2-i)/2 is a root of z^4+6z^2-3 when a^4=-3": root_ok,
        "3 f(t) is the 3-division polynomial of E": f * 3 == psi3,
        "x(2P) = x(P) reduces to -3 f(t)": duplication_fixed_point_poly() == f * -3,
        "1+4i has order 8 in (Z[i]/3)*": mult_order_mod(GaussInt(1, 4), 3) == 8,
    }


def _torsion5(prime_bound: int) -> dict[str, bool]:
    i = Zeta8.i()
    checks = {}
    for name, g in (("y1^4 = -4(1+2i)^-3", 1 + 2 * i), ("y2^4 = -4(1-2i)^-3", 1 - 2 * i)):
        u = g.inverse()
        # y^4 = (x^3 - x)^2 = x^2 (x^2 - 1)^2 with x^2 = u
        checks[name] = u * (u - 1) ** 2 == -4 * g**-3
    y1, y2 = MPoly.var(1), MPoly.var(2)
    expr = (y1 * y2 * Fraction(5, 2)) ** 4
    expr = reduce_power(expr, 1, 4, MPoly.const(-4 * (1 + 2 * i) ** -3))
    expr = reduce_power(expr, 2, 4, MPoly.const(-4 * (1 - 2 * i) ** -3))
    checks["((5/2) y1 y2)^4 = 5"] = expr == MPoly.const(5)
    p = mod5_verification_prime(prime_bound)
    P = mod5_point(p)
    Q = mod5_point(p, conjugate=True)
    checks["P5 != O and [5]P5 = O"] = not P.is_infinity() and ec_scalar_mul(5, P, E).is_infinity()
    checks["[1-2i]P5 = O"] = cm_apply(GaussInt(1, -2), P).is_infinity()
    # with [i](x, y) = (-x, iy) the point x^2 = (1+2i)^-1 lies in Ker[1+2i];
    # the generator of Ker[1-2i] is the conjugate one, x^2 = (1-2i)^-1
    checks["[1+2i]P5 = O"] = cm_apply(GaussInt(1, 2), P).is_infinity()
    checks["[1-2i]P5' = O for x^2 = (1-2i)^-1"] = (
        not Q.is_infinity() and cm_apply(GaussInt(1, -2), Q).is_infinity()
    )
    return checks


def mod5_verification_prime(prime_bound: int = 2000) -> int:
    """Smallest p = 1 mod 4, p != 5, where both mod-5 points exist over F_p."""
    for p in primes_below(prime_bound):
        if p % 4 == 1 and p != 5 and mod5_point(p) and mod5_point(p, conjugate=True):
            return p
    raise RuntimeError(f"no verification prime below {prime_bound}")


def curve_invariants(C: Curve) -> tuple:
    return C.discriminant(), C.j_invariant()


def is_fourth_power(c) -> bool:
    """Fourth-power test in the field c lives in (Q, Q(zeta8) or F_p)."""
    if isinstance(c, Zeta8):
        return q8_is_fourth_power(c)
    if isinstance(c, FpElem):
        return c.is_zero() or pow(c.value, (c.p - 1) // math.gcd(4, c.p - 1), c.p) == 1
    q = Fraction(c)
    if q < 0:
        return False
    return all(math.isqrt(math.isqrt(n)) ** 4 == n for n in (q.numerator, q.denominator))


def quartic_twist_isomorphic(a1, a2) -> bool:
    """y^2 = x^3 + a1 x and y^2 = x^3 + a2 x are isomorphic over the field of a1, a2."""
    return is_fourth_power(a1 / a2)


@dataclass(frozen=True)
class QuarticCurveC:
    """The model v^2 = (u^2 - 1)(u^2 - 1/2), base point at infinity with v/u^2 = 1."""

    @staticmethod
    def contains(u, v) -> bool:
        return v * v == (u * u - 1) * (u * u - Fraction(1, 2))

    @staticmethod
    def weierstrass_quotient() -> Curve:
        return C_PRIME
