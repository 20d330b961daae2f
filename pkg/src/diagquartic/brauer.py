"""Classes in Q*/Q*^4, the subgroup H_D and per-surface Brauer bounds for
x0^4 + a1 x1^4 + a2 x2^4 + a3 x3^4 = 0.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .numbers import factor_int

MAX_GENERATORS = 8

# 2^10 * 3 * 5, its square, and the square times 2^5
UNCONDITIONAL_EXPONENT = 2**10 * 3 * 5
UNCONDITIONAL_ORDER_BR1 = UNCONDITIONAL_EXPONENT**2
UNCONDITIONAL_ORDER_BR0 = UNCONDITIONAL_ORDER_BR1 * 2**5
ALGEBRAIC_PART_BOUND = 2**5
TWO_PART_CITATION = (
    "e2 = 1 when 2 is not in H_D cites an external theorem: the 2-primary "
    "part of Br(D)/Br_1(D) vanishes in that case"
)


@dataclass(frozen=True)
class QClassMod4:
    """sign in Z/2 and prime exponents in Z/4; zero exponents are dropped."""

    sign: int = 0
    exps: tuple[tuple[int, int], ...] = ()

    @classmethod
    def make(cls, sign: int, exps: dict[int, int]) -> "QClassMod4":
        return cls(sign % 2, tuple(sorted((q, e % 4) for q, e in exps.items() if e % 4)))

    def __mul__(self, other: "QClassMod4") -> "QClassMod4":
        exps = dict(self.exps)
        for q, e in other.exps:
            exps[q] = exps.get(q, 0) + e
        return QClassMod4.make(self.sign + other.sign, exps)

    def __pow__(self, n: int) -> "QClassMod4":
        return QClassMod4.make(self.sign * n, {q: e * n for q, e in self.exps})

    def is_trivial(self) -> bool:
        return self.sign == 0 and not self.exps

    def __str__(self) -> str:
        parts = ["-1"] if self.sign else []
        parts += [f"{q}^{e}" if e > 1 else str(q) for q, e in self.exps]
        return "*".join(parts) or "1"


def qclass_of(d) -> QClassMod4:
    d = Fraction(d)
    if d == 0:
        raise ValueError("0 has no class in Q*/Q*^4")
    exps = dict(factor_int(d.numerator))
    for q, e in factor_int(d.denominator).items():
        exps[q] = exps.get(q, 0) - e
    return QClassMod4.make(1 if d < 0 else 0, exps)


@dataclass(frozen=True)
class SubgroupMod4:
    generators: tuple[QClassMod4, ...]

    @classmethod
    def generated_by(cls, *values) -> "SubgroupMod4":
        return cls(tuple(v if isinstance(v, QClassMod4) else qclass_of(v) for v in values))


def subgroup_contains(H: SubgroupMod4, d) -> bool:
    """Exhaustive search over exponent vectors in (Z/4)^n."""
    n = len(H.generators)
    if n > MAX_GENERATORS:
        raise ValueError(f"at most {MAX_GENERATORS} generators supported, got {n}")
    target = d if isinstance(d, QClassMod4) else qclass_of(d)
    for exps in itertools.product(range(4), repeat=n):
        acc = QClassMod4()
        for g, e in zip(H.generators, exps):
            if e:
                acc = acc * g**e
        if acc == target:
            return True
    return False


def compute_hd(a1, a2, a3) -> SubgroupMod4:
    coeffs = [Fraction(a) for a in (a1, a2, a3)]
    if any(a == 0 for a in coeffs):
        raise ValueError("coefficients of a diagonal quartic must be nonzero")
    return SubgroupMod4.generated_by(-1, 4, *coeffs)


def splits_in_kummer_field(b, d) -> bool:
    """Whether t^4 - d splits in Q(sqrt(-1), b_1^(1/4), ..., b_n^(1/4))."""
    return subgroup_contains(SubgroupMod4.generated_by(-4, *b), d)


@dataclass(frozen=True)
class BrauerReport:
    coefficients: tuple[Fraction, Fraction, Fraction]
    hd_contains_2: bool
    hd_contains_3: bool
    hd_contains_5: bool
    transcendental_trivial: bool
    exponent_bound: int
    order_bound_br1: int
    order_bound_br0: int
    two_part_citation: str = TWO_PART_CITATION
    unconditional_bounds: dict = field(
        default_factory=lambda: {
            "exponent": UNCONDITIONAL_EXPONENT,
            "order_br1": UNCONDITIONAL_ORDER_BR1,
            "order_br0": UNCONDITIONAL_ORDER_BR0,
        }
    )

    def to_dict(self) -> dict:
        return {
            "coefficients": [str(a) for a in self.coefficients],
            "hd_contains": {
                "2": self.hd_contains_2,
                "3": self.hd_contains_3,
                "5": self.hd_contains_5,
            },
            "transcendental_trivial": self.transcendental_trivial,
            "exponent_bound": self.exponent_bound,
            "order_bound_br_mod_br1": self.order_bound_br1,
            "order_bound_br_mod_br0": self.order_bound_br0,
            "unconditional": dict(self.unconditional_bounds),
        }


def analyze_surface(a1, a2, a3) -> BrauerReport:
    """H_D memberships of 2, 3, 5 and the bounds they imply.

    The 2-part factor drops to 1 when 2 is not in H_D; that step rests on the
    external result that the 2-primary part of Br(D)/Br_1(D) then vanishes.
    """
    H = compute_hd(a1, a2, a3)
    has2, has3, has5 = (subgroup_contains(H, q) for q in (2, 3, 5))
    exponent = (2**10 if has2 else 1) * (3 if has3 else 1) * (5 if has5 else 1)
    order_br1 = exponent**2
    return BrauerReport(
        coefficients=tuple(Fraction(a) for a in (a1, a2, a3)),
        hd_contains_2=has2,
        hd_contains_3=has3,
        hd_contains_5=has5,
        transcendental_trivial=not (has2 or has3 or has5),
        exponent_bound=exponent,
        order_bound_br1=order_br1,
        order_bound_br0=order_br1 * ALGEBRAIC_PART_BOUND,
    )
