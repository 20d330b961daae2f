"""2x2 matrices over Z/n and the finite sweeps behind the Galois-module bounds.

Basis convention: a + bi acts as [[a, -b], [b, a]].
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .numbers import GaussInt


@dataclass(frozen=True)
class Mat2Mod:
    a: int
    b: int
    c: int
    d: int
    n: int

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.n)

    def _check(self, other: "Mat2Mod") -> None:
        if other.n != self.n:
            raise ValueError("moduli differ")

    def __add__(self, o: "Mat2Mod") -> "Mat2Mod":
        self._check(o)
        return Mat2Mod(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d, self.n)

    def __sub__(self, o: "Mat2Mod") -> "Mat2Mod":
        self._check(o)
        return Mat2Mod(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d, self.n)

    def __mul__(self, o) -> "Mat2Mod":
        if isinstance(o, int):
            return Mat2Mod(self.a * o, self.b * o, self.c * o, self.d * o, self.n)
        self._check(o)
        return Mat2Mod(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            self.n,
        )

    __rmul__ = __mul__

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.n

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def inverse(self) -> "Mat2Mod":
        try:
            di = pow(self.det(), -1, self.n)
        except ValueError:
            raise ValueError(f"matrix not invertible mod {self.n}") from None
        return Mat2Mod(self.d * di, -self.b * di, -self.c * di, self.a * di, self.n)

    def in_o(self) -> bool:
        """Membership in O/n = {[[a, -b], [b, a]]}."""
        return self.a == self.d and (self.b + self.c) % self.n == 0

    def in_obar(self) -> bool:
        """Membership in the anti-diagonal part {[[a, b], [b, -a]]}."""
        return self.b == self.c and (self.a + self.d) % self.n == 0


def gauss_matrix_mod(alpha, n: int) -> Mat2Mod:
    if n < 2:
        raise ValueError("modulus must be at least 2")
    alpha = GaussInt.coerce(alpha)
    return Mat2Mod(alpha.re, -alpha.im, alpha.im, alpha.re, n)


def all_matrices(n: int):
    for a, b, c, d in itertools.product(range(n), repeat=4):
        yield Mat2Mod(a, b, c, d, n)


def terib_counterexamples() -> list[Mat2Mod]:
    """Matrices A mod 16 with sA - As in O/16 but 8(a-d), 8(b+c) or 8A failing."""
    n = 16
    bad = []
    # s = [[1, -4], [4, 1]]; inline sA - As to keep the 65536-case sweep cheap
    for a, b, c, d in itertools.product(range(n), repeat=4):
        m00 = (-4 * c - 4 * b) % n
        m01 = (-4 * d + 4 * a) % n
        m10 = (4 * a - 4 * d) % n
        m11 = (4 * b + 4 * c) % n
        if m00 != m11 or (m01 + m10) % n:
            continue
        A = Mat2Mod(a, b, c, d, n)
        if (8 * (a - d)) % n or (8 * (b + c)) % n or not (A * 8).in_o():
            bad.append(A)
    return bad


def verify_terib_kernel() -> bool:
    s = gauss_matrix_mod(GaussInt(1, 4), 16)
    assert (s.a, s.b, s.c, s.d) == (1, 12, 4, 1)
    return not terib_counterexamples()


def verify_odd_square_kill(ell: int) -> bool:
    if ell not in (3, 5):
        raise ValueError("ell must be 3 or 5")
    if GaussInt(1, 4) ** 4 != GaussInt(161, -240):
        return False
    if 240 % ell or 240 % (ell * ell) == 0:
        return False
    n = ell * ell
    u = gauss_matrix_mod(GaussInt(161, -240), n)
    u_inv = u.inverse()
    for a, b in itertools.product(range(n), repeat=2):
        x = Mat2Mod(a, b, b, -a, n)
        if u * x * u_inv == x and not (x * ell).is_zero():
            return False
    return True


def fr5_fourth_power() -> GaussInt:
    return GaussInt(-1, 2) ** 4


def check_nonscalar_fr5pow4(ell: int) -> bool:
    """True iff Fr_5^4 = -7+24i is not congruent to a scalar mod ell."""
    if ell < 3:
        raise ValueError("ell must be at least 3")
    f = fr5_fourth_power()
    assert f == GaussInt(-7, 24)
    return f.im % ell != 0


def mult_order_mod(alpha, ell: int) -> int:
    alpha = GaussInt.coerce(alpha)
    if alpha.norm() % ell == 0:
        raise ValueError(f"{alpha} is not invertible mod {ell}")
    x = GaussInt(alpha.re % ell, alpha.im % ell)
    k = 1
    while (x.re, x.im) != (1, 0):
        x = x * alpha
        x = GaussInt(x.re % ell, x.im % ell)
        k += 1
    return k


def centralizer_of_i(n: int) -> list[Mat2Mod]:
    j = gauss_matrix_mod(GaussInt(0, 1), n)
    return [m for m in all_matrices(n) if m * j == j * m]


def obar_equals_o_times_swap(n: int) -> bool:
    """O/n * [[0,1],[1,0]] is the anti-diagonal set {[[a,b],[b,-a]]}."""
    swap = Mat2Mod(0, 1, 1, 0, n)
    lhs = {gauss_matrix_mod(GaussInt(a, b), n) * swap for a in range(n) for b in range(n)}
    rhs = {Mat2Mod(a, b, b, -a, n) for a in range(n) for b in range(n)}
    return lhs == rhs
