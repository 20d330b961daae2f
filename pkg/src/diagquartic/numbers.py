"""Exact arithmetic: the cyclotomic field Q(zeta_8), Gaussian integers, prime fields.

Rationals are :class:`fractions.Fraction`; integers are Python ints.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

Rational = Fraction


def is_prime(n: int) -> bool:
    """Trial division; only meant for the small moduli used here."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_below(n: int) -> list[int]:
    sieve = bytearray([1]) * max(n, 2)
    sieve[0:2] = b"\x00\x00"
    for k in range(2, math.isqrt(n - 1) + 1 if n > 1 else 0):
        if sieve[k]:
            sieve[k * k :: k] = bytearray(len(sieve[k * k :: k]))
    return [k for k in range(n) if sieve[k]]


def factor_int(n: int) -> dict[int, int]:
    """Prime factorisation of |n| by trial division."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


# ---------------------------------------------------------------------------
# Q(zeta_8)
# ---------------------------------------------------------------------------


class Zeta8:
    """Element c0 + c1*z + c2*z^2 + c3*z^3 of Q(z) with z^4 = -1.

    Stored as four integer numerators over one positive common denominator,
    kept fully reduced so that equality and hashing are structural.
    """

    __slots__ = ("nums", "den")

    def __init__(self, coeffs: Iterable = (0, 0, 0, 0)):
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) != 4:
            raise ValueError("Zeta8 needs exactly four coordinates")
        den = math.lcm(*(c.denominator for c in cs))
        self._set(tuple(c.numerator * (den // c.denominator) for c in cs), den)

    def _set(self, nums: tuple, den: int) -> None:
        if den != 1:
            g = math.gcd(den, *nums)
            if g != 1:
                nums = tuple(n // g for n in nums)
                den //= g
        self.nums = nums
        self.den = den

    @classmethod
    def _raw(cls, nums: tuple, den: int = 1) -> "Zeta8":
        obj = cls.__new__(cls)
        if den < 0:
            nums, den = tuple(-n for n in nums), -den
        obj._set(nums, den)
        return obj

    # distinguished elements
    @classmethod
    def zeta(cls) -> "Zeta8":
        return cls._raw((0, 1, 0, 0))

    @classmethod
    def i(cls) -> "Zeta8":
        return cls._raw((0, 0, 1, 0))

    @classmethod
    def sqrt2(cls) -> "Zeta8":
        return cls._raw((0, 1, 0, -1))

    @classmethod
    def zeta_power(cls, k: int) -> "Zeta8":
        k %= 8
        nums = [0, 0, 0, 0]
        nums[k % 4] = 1 if k < 4 else -1
        return cls._raw(tuple(nums))

    @classmethod
    def coerce(cls, x) -> "Zeta8":
        if isinstance(x, Zeta8):
            return x
        if isinstance(x, int):
            return cls._raw((x, 0, 0, 0))
        if isinstance(x, Fraction):
            return cls._raw((x.numerator, 0, 0, 0), x.denominator)
        if isinstance(x, GaussInt):
            return cls._raw((x.re, 0, x.im, 0))
        raise TypeError(f"cannot coerce {x!r} into Q(zeta8)")

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    c0 = property(lambda self: Fraction(self.nums[0], self.den))
    c1 = property(lambda self: Fraction(self.nums[1], self.den))
    c2 = property(lambda self: Fraction(self.nums[2], self.den))
    c3 = property(lambda self: Fraction(self.nums[3], self.den))

    def is_zero(self) -> bool:
        return not any(self.nums)

    def is_rational(self) -> bool:
        return not (self.nums[1] or self.nums[2] or self.nums[3])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        try:
            other = Zeta8.coerce(other)
        except TypeError:
            return NotImplemented
        return self.nums == other.nums and self.den == other.den

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.nums[0], self.den))
        return hash((self.nums, self.den))

    def __neg__(self) -> "Zeta8":
        return Zeta8._raw(tuple(-n for n in self.nums), self.den)

    def __add__(self, other) -> "Zeta8":
        try:
            o = Zeta8.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return Zeta8._raw(tuple(a + b for a, b in zip(self.nums, o.nums)), self.den)
        return Zeta8._raw(
            tuple(a * o.den + b * self.den for a, b in zip(self.nums, o.nums)),
            self.den * o.den,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Zeta8":
        try:
            o = Zeta8.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Zeta8":
        return Zeta8.coerce(other) - self

    def __mul__(self, other) -> "Zeta8":
        try:
            o = Zeta8.coerce(other)
        except TypeError:
            return NotImplemented
        return Zeta8._raw(negacyclic_mul(self.nums, o.nums), self.den * o.den)

    __rmul__ = __mul__

    def conjugate(self, k: int) -> "Zeta8":
        """Image under the automorphism z -> z^k (k odd)."""
        if k % 2 == 0:
            raise ValueError("automorphisms of Q(zeta8) send z to an odd power")
        out = [0, 0, 0, 0]
        for j, n in enumerate(self.nums):
            e = (j * k) % 8
            if e < 4:
                out[e] += n
            else:
                out[e - 4] -= n
        return Zeta8._raw(tuple(out), self.den)

    def norm(self) -> Fraction:
        prod = self.conjugate(3) * self.conjugate(5) * self.conjugate(7) * self
        assert prod.is_rational()
        return prod.c0

    def inverse(self) -> "Zeta8":
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in Q(zeta8)")
        partial = self.conjugate(3) * self.conjugate(5) * self.conjugate(7)
        n = (partial * self).c0
        return partial * (1 / n)

    def __truediv__(self, other) -> "Zeta8":
        try:
            o = Zeta8.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "Zeta8":
        return Zeta8.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "Zeta8":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Zeta8._raw((1, 0, 0, 0)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sqrt(self) -> "Zeta8 | None":
        """A square root inside Q(zeta8), or None if there is none."""
        return _q8_sqrt(self)

    def __repr__(self) -> str:
        parts = []
        for j, c in enumerate(self.coords):
            if c == 0:
                continue
            mono = ("", "z", "z^2", "z^3")[j]
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def negacyclic_mul(a: tuple, b: tuple) -> tuple:
    """Product of coordinate 4-tuples in Z[z]/(z^4+1)."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
        a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
        a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
        a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
    )


def q8_mul(a: Zeta8, b: Zeta8) -> Zeta8:
    return a * b


def q8_inv(a: Zeta8) -> Zeta8:
    return a.inverse()


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def _gauss_rational_sqrt(a: Fraction, b: Fraction) -> tuple[Fraction, Fraction] | None:
    """Square root of a + b*i inside Q(i)."""
    if b == 0:
        r = _rational_sqrt(a)
        if r is not None:
            return r, Fraction(0)
        r = _rational_sqrt(-a)
        if r is not None:
            return Fraction(0), r
        return None
    n = _rational_sqrt(a * a + b * b)
    if n is None:
        return None
    for sgn in (1, -1):
        x = _rational_sqrt((a + sgn * n) / 2)
        if x is not None and x != 0:
            return x, b / (2 * x)
    return None


def _q8_sqrt(alpha: Zeta8) -> Zeta8 | None:
    # Write alpha = A + B*sqrt2 with A, B in Q(i); sqrt2 = z - z^3, i = z^2.
    c0, c1, c2, c3 = alpha.coords
    # z = (1+i)/sqrt2 and z^3 = (-1+i)/sqrt2 => c1 z + c3 z^3 = ((c1-c3) + (c1+c3) i) sqrt2 / 2
    A = (c0, c2)
    B = ((c1 - c3) / 2, (c1 + c3) / 2)
    sqrt2 = Zeta8.sqrt2()

    def gi(p: tuple) -> Zeta8:
        return Zeta8((p[0], 0, p[1], 0))

    def gmul(p, q):
        return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])

    candidates = []
    if B == (0, 0):
        r = _gauss_rational_sqrt(*A)
        if r is not None:
            candidates.append(gi(r))
        half = (A[0] / 2, A[1] / 2)
        r = _gauss_rational_sqrt(*half)
        if r is not None:
            candidates.append(gi(r) * sqrt2)
    else:
        a2 = gmul(A, A)
        b2 = gmul(B, B)
        n = _gauss_rational_sqrt(a2[0] - 2 * b2[0], a2[1] - 2 * b2[1])
        if n is not None:
            for sgn in (1, -1):
                x = _gauss_rational_sqrt((A[0] + sgn * n[0]) / 2, (A[1] + sgn * n[1]) / 2)
                if x is None or x == (0, 0):
                    continue
                xz = gi(x)
                y = gi(B) / (2 * xz)
                candidates.append(xz + y * sqrt2)
    for c in candidates:
        if c * c == alpha:
            return c
    return None


def q8_is_fourth_power(alpha: Zeta8) -> bool:
    if alpha.is_zero():
        return True
    s = alpha.sqrt()
    if s is None:
        return False
    return s.sqrt() is not None or (-s).sqrt() is not None


# ---------------------------------------------------------------------------
# Gaussian integers
# ---------------------------------------------------------------------------


class GaussInt:
    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        self.re = int(re)
        self.im = int(im)

    @classmethod
    def coerce(cls, x) -> "GaussInt":
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} into Z[i]")

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def __eq__(self, other) -> bool:
        try:
            o = GaussInt.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __add__(self, other) -> "GaussInt":
        o = GaussInt.coerce(other)
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussInt":
        o = GaussInt.coerce(other)
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other) -> "GaussInt":
        return GaussInt.coerce(other) - self

    def __mul__(self, other) -> "GaussInt":
        o = GaussInt.coerce(other)
        return GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GaussInt":
        if n < 0:
            raise ValueError("negative powers are not in Z[i]")
        result, base = GaussInt(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divides(self, other) -> bool:
        """True iff self | other in Z[i]."""
        o = GaussInt.coerce(other)
        n = self.norm()
        if n == 0:
            return o == 0
        q = o * self.conj()
        return q.re % n == 0 and q.im % n == 0

    def __repr__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        imag = "i" if mag == 1 else f"{mag}i"
        if self.re == 0:
            return imag if self.im > 0 else "-" + imag
        return f"{self.re}{sign}{imag}"


_PRIMARY_MODULUS = GaussInt(2, 2)


def is_primary(pi: GaussInt) -> bool:
    return _PRIMARY_MODULUS.divides(pi - 1)


def gauss_primary_split(p: int) -> GaussInt:
    """The primary prime a+bi (b > 0) with a^2 + b^2 = p, for p = 1 mod 4."""
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"{p} is not a prime congruent to 1 mod 4")
    b = 1
    while b * b < p:
        a = math.isqrt(p - b * b)
        if a * a + b * b == p:
            for cand in (GaussInt(a, b), GaussInt(-a, b), GaussInt(b, a), GaussInt(-b, a)):
                if is_primary(cand):
                    return cand
        b += 1
    raise AssertionError(f"no primary split found for {p}")


# ---------------------------------------------------------------------------
# Prime fields
# ---------------------------------------------------------------------------


@total_ordering
class FpElem:
    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _lift(self, x) -> "FpElem":
        if isinstance(x, FpElem):
            if x.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {x.p}")
            return x
        if isinstance(x, int):
            return FpElem(x, self.p)
        if isinstance(x, Fraction):
            return FpElem(x.numerator, self.p) / FpElem(x.denominator, self.p)
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        try:
            o = self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.value == o.value

    def __lt__(self, other) -> bool:
        return self.value < self._lift(other).value

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __int__(self) -> int:
        return self.value

    def __neg__(self) -> "FpElem":
        return FpElem(-self.value, self.p)

    def __add__(self, other) -> "FpElem":
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return FpElem(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other) -> "FpElem":
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return FpElem(self.value - o.value, self.p)

    def __rsub__(self, other) -> "FpElem":
        return self._lift(other) - self

    def __mul__(self, other) -> "FpElem":
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return FpElem(self.value * o.value, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "FpElem":
        if self.value == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return FpElem(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other) -> "FpElem":
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "FpElem":
        return self._lift(other) * self.inverse()

    def __pow__(self, n: int) -> "FpElem":
        if n < 0:
            return self.inverse() ** (-n)
        return FpElem(pow(self.value, n, self.p), self.p)

    def sqrt(self) -> "FpElem | None":
        roots = fp_sqrt_all(self)
        return roots[0] if roots else None

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


def _tonelli(n: int, p: int) -> int | None:
    n %= p
    if n == 0:
        return 0
    if p == 2:
        return n
    if pow(n, (p - 1) // 2, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def fp_sqrt_all(c: FpElem) -> list[FpElem]:
    r = _tonelli(c.value, c.p)
    if r is None:
        return []
    if r == 0:
        return [FpElem(0, c.p)]
    return sorted({FpElem(r, c.p), FpElem(-r, c.p)})


def fp_fourth_roots(c: FpElem) -> list[FpElem]:
    """All x in F_p with x^4 = c, sorted by value."""
    if c.p % 2 == 0:
        raise ValueError("p must be odd")
    if c.value == 0:
        return [FpElem(0, c.p)]
    out: set[FpElem] = set()
    for s in fp_sqrt_all(c):
        out.update(fp_sqrt_all(s))
    return sorted(out)


def fp_zeta8(p: int) -> FpElem:
    """The smallest element of multiplicative order 8 in F_p (p = 1 mod 8)."""
    if not is_prime(p) or p % 8 != 1:
        raise ValueError(f"{p} is not a prime congruent to 1 mod 8")
    for g in range(2, p):
        e = pow(g, (p - 1) // 8, p)
        if pow(e, 4, p) == p - 1:
            return FpElem(min(pow(e, k, p) for k in (1, 3, 5, 7)), p)
    raise AssertionError("unreachable for prime p = 1 mod 8")


def fp_sqrt_minus_one(p: int) -> FpElem:
    """Smallest square root of -1 in F_p (p = 1 mod 4)."""
    if p % 4 != 1:
        raise ValueError(f"F_{p} has no square root of -1")
    return fp_sqrt_all(FpElem(-1, p))[0]


Scalar = Union[int, Fraction, Zeta8, FpElem]
