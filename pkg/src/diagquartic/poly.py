"""Sparse polynomials in x0..x3 over Q(zeta8) or F_p, and the normal form
modulo the Fermat quartic x0^4 + x1^4 + x2^4 + x3^4.

Multiplication runs on plain integers: Q(zeta8) coefficients are scaled to a
common denominator and convolved as 4-tuples, F_p coefficients as residues.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .numbers import FpElem, Zeta8, negacyclic_mul

NVARS = 4
_SHIFT = 16
_MASK = (1 << _SHIFT) - 1

Monomial = tuple[int, int, int, int]


def _pack(e: Monomial) -> int:
    return e[0] | (e[1] << 16) | (e[2] << 32) | (e[3] << 48)


def _unpack(k: int) -> Monomial:
    return (k & _MASK, (k >> 16) & _MASK, (k >> 32) & _MASK, (k >> 48) & _MASK)


def grlex_key(e: Monomial) -> tuple:
    return (sum(e), e)


class MPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent 4-tuples to nonzero
    coefficients, all of the same field as ``one``."""

    __slots__ = ("terms", "one")

    def __init__(self, terms: dict | None = None, one=None):
        if one is None:
            one = Zeta8.coerce(1)
        self.one = one
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    # -- constructors -----------------------------------------------------
    @classmethod
    def var(cls, i: int, one=None) -> "MPoly":
        one = Zeta8.coerce(1) if one is None else one
        e = [0] * NVARS
        e[i] = 1
        return cls({tuple(e): one}, one)

    @classmethod
    def gens(cls, one=None) -> tuple["MPoly", ...]:
        return tuple(cls.var(i, one) for i in range(NVARS))

    @classmethod
    def const(cls, c, one=None) -> "MPoly":
        one = Zeta8.coerce(1) if one is None else one
        return cls({(0, 0, 0, 0): one * c}, one)

    def _new(self, terms: dict) -> "MPoly":
        p = MPoly.__new__(MPoly)
        p.one = self.one
        p.terms = terms
        return p

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return other
        return MPoly.const(other, self.one)

    # -- basic predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def degree(self, var: int | None = None) -> int:
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        return max(e[var] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading(self) -> tuple[Monomial, object]:
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def coeff(self, e: Monomial):
        return self.terms.get(tuple(e), self.one * 0)

    # -- ring operations ------------------------------------------------------
    def __neg__(self) -> "MPoly":
        return self._new({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "MPoly":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return self._new(out)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def scale(self, c) -> "MPoly":
        if not c:
            return self._new({})
        return self._new({e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            try:
                return self.scale(self.one * other)
            except TypeError:
                return NotImplemented
        return self._new(_mul_terms(self.terms, other.terms))

    def __rmul__(self, other) -> "MPoly":
        return self.__mul__(other)

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = MPoly.const(1, self.one), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- evaluation and substitution ------------------------------------------
    def map_coeffs(self, fn: Callable, one) -> "MPoly":
        return MPoly({e: fn(c) for e, c in self.terms.items()}, one)

    def evaluate(self, point: Sequence):
        powers = [_power_table(x, self.degree(i)) for i, x in enumerate(point)]
        total = self.one * 0
        for e, c in self.terms.items():
            total = total + c * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]] * powers[3][e[3]]
        return total

    def substitute(self, images: Sequence["MPoly"]) -> "MPoly":
        """Compose: replace x_i by images[i]."""
        one = images[0].one
        cache: list[dict[int, MPoly]] = [{0: MPoly.const(1, one), 1: img} for img in images]

        def pw(i: int, k: int) -> MPoly:
            table = cache[i]
            if k not in table:
                table[k] = pw(i, k // 2) * pw(i, k - k // 2)
            return table[k]

        out = MPoly({}, one)
        for e, c in self.terms.items():
            term = MPoly.const(c, one)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            mono = "*".join(
                f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e) if k
            )
            c = self.terms[e]
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def _power_table(x, n: int) -> list:
    out = [x * 0 + 1]
    for _ in range(max(n, 0)):
        out.append(out[-1] * x)
    return out


# ---------------------------------------------------------------------------
# multiplication kernel
# ---------------------------------------------------------------------------


def _mul_terms(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    sample = next(iter(a.values()))
    if isinstance(sample, Zeta8):
        return _mul_q8(a, b)
    if isinstance(sample, FpElem):
        return _mul_fp(a, b, sample.p)
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3])
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _to_integral(terms: dict) -> tuple[int, list]:
    den = math.lcm(*(c.den for c in terms.values()))
    return den, [(_pack(e), tuple(n * (den // c.den) for n in c.nums)) for e, c in terms.items()]


def _mul_q8(a: dict, b: dict) -> dict:
    da, ia = _to_integral(a)
    db, ib = _to_integral(b)
    if len(ia) < len(ib):
        ia, ib = ib, ia
    acc: dict[int, list] = {}
    get = acc.get
    for ka, (a0, a1, a2, a3) in ib:
        for kb, (b0, b1, b2, b3) in ia:
            k = ka + kb
            slot = get(k)
            if slot is None:
                acc[k] = [
                    a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
                    a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
                    a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
                    a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
                ]
            else:
                slot[0] += a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1
                slot[1] += a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2
                slot[2] += a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3
                slot[3] += a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
    den = da * db
    return {
        _unpack(k): Zeta8._raw(tuple(v), den) for k, v in acc.items() if any(v)
    }


def _mul_fp(a: dict, b: dict, p: int) -> dict:
    ia = [(_pack(e), c.value) for e, c in a.items()]
    ib = [(_pack(e), c.value) for e, c in b.items()]
    acc: dict[int, int] = {}
    get = acc.get
    for ka, ca in ia:
        for kb, cb in ib:
            k = ka + kb
            acc[k] = get(k, 0) + ca * cb
    return {_unpack(k): FpElem(v, p) for k, v in acc.items() if v % p}


# ---------------------------------------------------------------------------
# normal form modulo the Fermat quartic
# ---------------------------------------------------------------------------


def fermat_quartic(one=None) -> MPoly:
    x0, x1, x2, x3 = MPoly.gens(one)
    return x0**4 + x1**4 + x2**4 + x3**4


def reduce_power(f: MPoly, var: int, k: int, replacement: MPoly) -> MPoly:
    """Rewrite f using x_var^k -> replacement until deg_{x_var} < k.

    ``replacement`` must not involve x_var.
    """
    if replacement.degree(var) > 0:
        raise ValueError("replacement must be free of the eliminated variable")
    groups: dict[int, dict] = {}
    for e, c in f.terms.items():
        q, r = divmod(e[var], k)
        e2 = list(e)
        e2[var] = r
        groups.setdefault(q, {})[tuple(e2)] = c
    out = f._new(groups.pop(0, {}))
    power = MPoly.const(1, f.one)
    done = 0
    for q in sorted(groups):
        while done < q:
            power = power * replacement
            done += 1
        out = out + f._new(groups[q]) * power
    return out


def nf_fermat(f: MPoly) -> MPoly:
    """Unique representative of f mod (x0^4+x1^4+x2^4+x3^4) with deg_x0 <= 3."""
    if f.degree(0) < 4:
        return f
    x0, x1, x2, x3 = MPoly.gens(f.one)
    return reduce_power(f, 0, 4, -(x1**4 + x2**4 + x3**4))


def mul_on_x(f: MPoly, g: MPoly) -> MPoly:
    """nf_fermat(f*g), computed from reduced factors."""
    return nf_fermat(nf_fermat(f) * nf_fermat(g))


def product_on_x(factors: Iterable[MPoly], one=None) -> MPoly:
    out = None
    for f in factors:
        out = nf_fermat(f) if out is None else mul_on_x(out, f)
    return out if out is not None else MPoly.const(1, one)


# ---------------------------------------------------------------------------
# exact division
# ---------------------------------------------------------------------------


def poly_divide_exact(f: MPoly, g: MPoly) -> MPoly | None:
    """q with f == g*q, or None when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lg, cg = g.leading()
    inv = 1 / cg if not isinstance(cg, FpElem) else cg.inverse()
    rem = dict(f.terms)
    quot: dict = {}
    while rem:
        lr = max(rem, key=grlex_key)
        if any(a < b for a, b in zip(lr, lg)):
            return None
        m = tuple(a - b for a, b in zip(lr, lg))
        c = rem[lr] * inv
        quot[m] = c
        for e, v in g.terms.items():
            t = (e[0] + m[0], e[1] + m[1], e[2] + m[2], e[3] + m[3])
            s = rem.get(t)
            s = -(v * c) if s is None else s - v * c
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return MPoly(quot, f.one)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RatFunc:
    """num/den, never reduced; equality on X is semantic via rf_equal_on_x."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.const(1, num.one)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc(other)
        return RatFunc(MPoly.const(other, self.num.one))

    def _is_one(self, p: MPoly) -> bool:
        return p.terms == {(0, 0, 0, 0): self.num.one}

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        o = self._coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        if self._is_one(o.den):
            return RatFunc(self.num + o.num * self.den, self.den)
        if self._is_one(self.den):
            return RatFunc(self.num * o.den + o.num, o.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        if not isinstance(other, (RatFunc, MPoly)):
            return RatFunc(self.num * other, self.den)
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        if not isinstance(other, (RatFunc, MPoly)):
            return RatFunc(self.num, self.den * other)
        o = self._coerce(other)
        if self.den == o.den:
            return RatFunc(self.num, o.num)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return RatFunc(self.den**-n, self.num**-n)
        return RatFunc(self.num**n, self.den**n)

    def reduce_on_x(self) -> "RatFunc":
        return RatFunc(nf_fermat(self.num), nf_fermat(self.den))

    def map_coeffs(self, fn: Callable, one) -> "RatFunc":
        return RatFunc(self.num.map_coeffs(fn, one), self.den.map_coeffs(fn, one))

    def evaluate(self, point: Sequence):
        d = self.den.evaluate(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.evaluate(point) / d

    def __repr__(self) -> str:
        return f"({self.num}) / ({self.den})"


def rf_equal_on_x(r: RatFunc, s: RatFunc) -> bool:
    """True iff r == s in the function field of the Fermat quartic."""
    for d in (r.den, s.den):
        if nf_fermat(d).is_zero():
            raise ValueError("denominator vanishes identically on X")
    lhs = mul_on_x(r.num, s.den)
    rhs = mul_on_x(s.num, r.den)
    return (lhs - rhs).is_zero()


# ---------------------------------------------------------------------------
# binary forms and small exact linear algebra
# ---------------------------------------------------------------------------


def binary_coefficients(q: MPoly, s: int = 0, t: int = 1) -> list:
    """Coefficients [a_0, ..., a_d] of a_k s^(d-k) t^k for a homogeneous form."""
    if q.is_zero():
        raise ValueError("binary form is identically zero")
    if not q.is_homogeneous():
        raise ValueError("binary form must be homogeneous")
    d = q.degree()
    out = [q.one * 0] * (d + 1)
    for e, c in q.terms.items():
        if any(k for i, k in enumerate(e) if i not in (s, t)):
            raise ValueError("form involves more than two variables")
        out[e[t]] = c
    return out


def binary_resultant(q1: MPoly, q2: MPoly, s: int = 0, t: int = 1):
    """Sylvester resultant of two binary forms in variables (x_s, x_t)."""
    a = binary_coefficients(q1, s, t)
    b = binary_coefficients(q2, s, t)
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    if size == 0:
        return q1.one
    zero = q1.one * 0
    rows = []
    for i in range(n):
        rows.append([zero] * i + a + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + b + [zero] * (size - n - 1 - i))
    return determinant(rows)


def _inv(c):
    return c.inverse() if hasattr(c, "inverse") else Fraction(1) / c


def _echelon(rows: list[list]) -> tuple[list[list], int, int]:
    """Row-reduce a copy; returns (matrix, rank, sign of row swaps)."""
    m = [list(r) for r in rows]
    rank, sign = 0, 1
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        if pivot != rank:
            m[rank], m[pivot] = m[pivot], m[rank]
            sign = -sign
        inv = _inv(m[rank][col])
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return m, rank, sign


def matrix_rank(rows: list[list]) -> int:
    return _echelon(rows)[1] if rows else 0


def determinant(rows: list[list]):
    m, rank, sign = _echelon(rows)
    if rank < len(rows):
        return rows[0][0] * 0
    out = rows[0][0] * 0 + sign
    for i in range(len(m)):
        out = out * m[i][i]
    return out
