"""Lines, conics and quadric sections of the Fermat quartic X.

Lines are L_{mu nu}: x0 = e^mu x1, x2 = e^nu x3;  M_{mu nu}: x0 = e^mu x2,
x1 = e^nu x3;  N_{mu nu}: x0 = e^mu x3, x1 = e^nu x2, with e^4 = -1 and
mu, nu odd residues mod 8.  Everything is generic in the choice of ``eps``;
the default is zeta in Q(zeta8).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .numbers import Zeta8
from .poly import (
    MPoly,
    binary_resultant,
    fermat_quartic,
    matrix_rank,
    nf_fermat,
    poly_divide_exact,
)

FAMILIES = ("L", "M", "N")
ODD = (1, 3, 5, 7)


def default_eps():
    return Zeta8.zeta()


def _one(eps):
    return eps**0


def _e(eps, k: int):
    return eps ** (k % 8)


@dataclass(frozen=True, order=True)
class LineId:
    family: str
    mu: int
    nu: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown line family {self.family!r}")
        mu, nu = self.mu % 8, self.nu % 8
        if mu % 2 == 0 or nu % 2 == 0:
            raise ValueError("line indices must be odd residues mod 8")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)

    @classmethod
    def parse(cls, name: str) -> "LineId":
        """'L15' -> LineId('L', 1, 5)."""
        return cls(name[0], int(name[1]), int(name[2]))

    def __str__(self) -> str:
        return f"{self.family}{self.mu}{self.nu}"


ALL_LINES: tuple[LineId, ...] = tuple(
    LineId(f, mu, nu) for f in FAMILIES for mu in ODD for nu in ODD
)


def line_forms(line: LineId, eps=None) -> tuple[MPoly, MPoly]:
    eps = default_eps() if eps is None else eps
    x0, x1, x2, x3 = MPoly.gens(_one(eps))
    a, b = _e(eps, line.mu), _e(eps, line.nu)
    if line.family == "L":
        return x0 - x1 * a, x2 - x3 * b
    if line.family == "M":
        return x0 - x2 * a, x1 - x3 * b
    return x0 - x3 * a, x1 - x2 * b


def line_parametrization(line: LineId, eps=None) -> list[MPoly]:
    """Images of x0..x3 as linear forms in (s, t) = (x0, x1)."""
    eps = default_eps() if eps is None else eps
    s, t, _, _ = MPoly.gens(_one(eps))
    a, b = _e(eps, line.mu), _e(eps, line.nu)
    if line.family == "L":
        return [s * a, s, t * b, t]
    if line.family == "M":
        return [s * a, t * b, s, t]
    return [s * a, t * b, t, s]


def line_on_x(line: LineId, eps=None) -> bool:
    return fermat_quartic(_one(eps or default_eps())).substitute(
        line_parametrization(line, eps)
    ).is_zero()


def lines_meet_rule(a: LineId, b: LineId) -> bool:
    if a == b:
        raise ValueError("a line is not compared with itself")
    if a.family == b.family:
        return (a.mu == b.mu) != (a.nu == b.nu)
    if FAMILIES.index(a.family) > FAMILIES.index(b.family):
        a, b = b, a
    al, be, ga, de = a.mu, a.nu, b.mu, b.nu
    pair = a.family + b.family
    if pair == "LM":
        return (al - be - ga + de) % 8 == 0
    if pair == "LN":
        return (al + be - ga + de) % 8 == 0
    return (al + be - ga - de) % 8 == 0


def _linear_row(form: MPoly) -> list:
    zero = form.one * 0
    row = [zero] * 4
    for e, c in form.terms.items():
        row[e.index(1)] = c
    return row


def lines_meet_oracle(a: LineId, b: LineId, eps=None) -> bool:
    """Rank test: the four defining forms have a common projective zero."""
    if a == b:
        raise ValueError("a line is not compared with itself")
    rows = [_linear_row(f) for f in (*line_forms(a, eps), *line_forms(b, eps))]
    return matrix_rank(rows) <= 3


# ---------------------------------------------------------------------------
# named forms
# ---------------------------------------------------------------------------


def f_form(lam: int, mu: int, nu: int, eps=None) -> MPoly:
    eps = default_eps() if eps is None else eps
    x0, x1, x2, x3 = MPoly.gens(_one(eps))
    return x0 + x1 * _e(eps, lam) + x2 * _e(eps, mu) + x3 * _e(eps, nu)


def e_form(primes: int, sign: int, eps=None) -> MPoly:
    """e'_+- = x0x3 +- x1x2 (primes=1);  e''_+- = x0x2 +- x1x3 (primes=2)."""
    eps = default_eps() if eps is None else eps
    x0, x1, x2, x3 = MPoly.gens(_one(eps))
    if primes == 1:
        return x0 * x3 + x1 * x2 * sign
    return x0 * x2 + x1 * x3 * sign


def h_form(primes: int, alpha: int, beta: int, eps=None) -> MPoly:
    eps = default_eps() if eps is None else eps
    x0, x1, x2, x3 = MPoly.gens(_one(eps))
    a2, b2, ab2 = _e(eps, 2 * alpha), _e(eps, 2 * beta), _e(eps, 2 * alpha + 2 * beta)
    if primes == 1:
        return x0**2 - x1**2 * a2 - x2**2 * b2 + x3**2 * ab2
    return x0**2 - x1**2 * a2 - x3**2 * b2 + x2**2 * ab2


@dataclass(frozen=True)
class NamedForm:
    kind: str  # "e", "h" or "f"
    primes: int  # 1 for ' and 2 for ''
    indices: tuple  # (sign,) for e-forms, (alpha, beta) for h-forms, (l, m, n) for f
    poly: MPoly = field(compare=False, repr=False)

    @property
    def tag(self) -> str:
        mark = "'" * self.primes
        if self.kind == "e":
            return f"e{mark}{'+' if self.indices[0] > 0 else '-'}"
        if self.kind == "h":
            return f"h{mark}{self.indices[0]}{self.indices[1]}"
        return "f{}{}{}".format(*self.indices)


def named_e(primes: int, sign: int, eps=None) -> NamedForm:
    return NamedForm("e", primes, (sign,), e_form(primes, sign, eps))


def named_h(primes: int, alpha: int, beta: int, eps=None) -> NamedForm:
    return NamedForm("h", primes, (alpha % 8, beta % 8), h_form(primes, alpha, beta, eps))


_E_OCTADS = {
    (1, -1): "L11 L33 L55 L77 M11 M33 M55 M77",
    (1, 1): "L15 L37 L51 L73 M15 M37 M51 M73",
    (2, -1): "L17 L35 L53 L71 N11 N33 N55 N77",
    (2, 1): "L13 L31 L57 L75 N15 N37 N51 N73",
}


def octad_lines(form: NamedForm) -> list[LineId]:
    """The eight lines making up the section of X by the quadric form = 0."""
    if form.kind == "e":
        return [LineId.parse(n) for n in _E_OCTADS[(form.primes, form.indices[0])].split()]
    if form.kind != "h":
        raise ValueError("only e- and h-forms cut out octads of lines")
    a, b = form.indices
    other = "M" if form.primes == 1 else "N"
    if form.primes == 1:
        ls = [(a, a), (a, a + 4), (a + 4, a), (a + 4, a + 4)]
    else:
        ls = [(a, -a), (a, 4 - a), (a + 4, -a), (a + 4, 4 - a)]
    ms = [(b, b), (b, b + 4), (b + 4, b), (b + 4, b + 4)]
    return [LineId("L", *p) for p in ls] + [LineId(other, *p) for p in ms]


def form_vanishes_on_line(form: MPoly, line: LineId, eps=None) -> bool:
    return form.substitute(line_parametrization(line, eps)).is_zero()


def verify_quadric_octad(form: NamedForm, eps=None) -> bool:
    lines = octad_lines(form)
    if len(set(lines)) != 8:
        return False
    return all(form_vanishes_on_line(form.poly, line, eps) for line in lines)


def all_octad_forms(eps=None) -> list[NamedForm]:
    forms = [named_e(p, s, eps) for p in (1, 2) for s in (-1, 1)]
    forms += [named_h(p, a, b, eps) for p in (1, 2) for a in ODD for b in ODD]
    return forms


def e1_differences(eps=None, reduce: bool = True) -> dict[str, MPoly]:
    """Differences whose vanishing on X gives h13 h31 = -h11 h33 = 2 e+ e- (single and double primed)."""
    out = {}
    for primes, mark in ((1, "'"), (2, "''")):
        h13, h31 = h_form(primes, 1, 3, eps), h_form(primes, 3, 1, eps)
        h11, h33 = h_form(primes, 1, 1, eps), h_form(primes, 3, 3, eps)
        ep, em = e_form(primes, 1, eps), e_form(primes, -1, eps)
        lhs = h13 * h31
        out[f"h{mark}13 h{mark}31 + h{mark}11 h{mark}33"] = lhs + h11 * h33
        out[f"h{mark}13 h{mark}31 - 2 e{mark}+ e{mark}-"] = lhs - ep * em * 2
    if reduce:
        out = {k: nf_fermat(v) for k, v in out.items()}
    return out


def verify_e1(eps=None) -> bool:
    return all(v.is_zero() for v in e1_differences(eps).values())


# ---------------------------------------------------------------------------
# conics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Conic:
    plane: MPoly = field(compare=False)
    quadric: MPoly = field(compare=False)
    parents: tuple[LineId, LineId]

    def __str__(self) -> str:
        return f"[{self.parents[0]}{self.parents[1]}]"


def conic_from_line_pair(a: LineId, b: LineId, eps=None) -> Conic:
    eps = default_eps() if eps is None else eps
    if b.family == "L":
        a, b = b, a
    if a.family != "L" or b.family not in ("M", "N"):
        raise ValueError(f"no conic formula for the pair ({a}, {b})")
    if not lines_meet_rule(a, b):
        raise ValueError(f"{a} and {b} are skew")
    x0, x1, x2, x3 = MPoly.gens(_one(eps))
    al, ga, de = a.mu, b.mu, b.nu
    E = lambda k: _e(eps, k)  # noqa: E731
    if b.family == "M":
        plane = f_form(al + 4, ga + 4, al + de, eps)
        quadric = (
            x0**2 + x0 * x3 * E(al + de) + x3**2 * E(2 * al + 2 * de)
            + x1**2 * E(2 * al) + x1 * x2 * E(al + ga) + x2**2 * E(2 * ga)
        )
    else:
        plane = f_form(al + 4, al + de, ga + 4, eps)
        quadric = (
            x0**2 + x0 * x2 * E(al + de) + x2**2 * E(2 * al + 2 * de)
            + x1**2 * E(2 * al) + x1 * x3 * E(al + ga) + x3**2 * E(2 * ga)
        )
    return Conic(plane, quadric, (a, b))


def _solve_x0(plane: MPoly) -> list[MPoly]:
    """Substitution eliminating x0 from a plane whose x0-coefficient is 1."""
    x0, x1, x2, x3 = MPoly.gens(plane.one)
    if plane.coeff((1, 0, 0, 0)) != plane.one:
        raise ValueError("plane is not monic in x0")
    return [x0 - plane, x1, x2, x3]


def verify_conic_on_x(conic: Conic, eps=None) -> bool:
    """Plane section of X = two parent lines + this conic, certified by exact division."""
    for line in conic.parents:
        if not form_vanishes_on_line(conic.plane, line, eps):
            return False
    sub = _solve_x0(conic.plane)
    quartic = fermat_quartic(conic.plane.one).substitute(sub)
    quad = conic.quadric.substitute(sub)
    if quad.is_zero():
        return False
    cofactor = poly_divide_exact(quartic, quad)
    if cofactor is None:
        return False
    # the cofactor must be the two parent lines inside the plane
    return all(
        cofactor.substitute(line_parametrization(line, eps)).is_zero()
        for line in conic.parents
    )


def constructible_conics(eps=None) -> list[Conic]:
    out = []
    for a in ALL_LINES:
        if a.family != "L":
            continue
        for b in ALL_LINES:
            if b.family != "L" and lines_meet_rule(a, b):
                out.append(conic_from_line_pair(a, b, eps))
    return out


# ---------------------------------------------------------------------------
# the sixteen skew curves
# ---------------------------------------------------------------------------

SIXTEEN_LINES = "M51 M33 M15 M77 N11 N37 N55 N73"
SIXTEEN_CONICS = (
    "L33 M11", "L33 M55", "L15 M37", "L15 M73",
    "L57 N15", "L57 N51", "L71 N33", "L71 N77",
)


def sixteen_curves(eps=None) -> list:
    lines = [LineId.parse(n) for n in SIXTEEN_LINES.split()]
    conics = []
    for pair in SIXTEEN_CONICS:
        a, b = (LineId.parse(n) for n in pair.split())
        conics.append(conic_from_line_pair(a, b, eps))
    return lines + conics


def line_conic_disjoint(line: LineId, conic: Conic, eps=None) -> bool:
    images = line_parametrization(line, eps)
    restricted = conic.plane.substitute(images)
    if restricted.is_zero():
        # a line inside the plane always meets a plane conic
        return False
    a = restricted.coeff((1, 0, 0, 0))
    b = restricted.coeff((0, 1, 0, 0))
    st = (b, -a, a * 0, a * 0)
    point = [img.evaluate(st) for img in images]
    return bool(conic.quadric.evaluate(point))


def _plane_intersection(p1: MPoly, p2: MPoly) -> list[MPoly]:
    """Parametrize the line p1 = p2 = 0 by (s, t) = (x0, x1)."""
    diff = p1 - p2
    if diff.is_zero() or diff.degree(0) > 0:
        raise ValueError("conic planes are proportional")
    one = p1.one
    s, t, _, _ = MPoly.gens(one)
    coeffs = [diff.coeff(tuple(1 if i == j else 0 for i in range(4))) for j in range(4)]
    j = next(k for k in (1, 2, 3) if coeffs[k])
    free = [k for k in (1, 2, 3) if k != j]
    images: list[MPoly | None] = [None] * 4
    images[free[0]], images[free[1]] = s, t
    images[j] = -(s * coeffs[free[0]] + t * coeffs[free[1]]) * (1 / coeffs[j])
    images[0] = MPoly.var(0, one)
    images[0] = _solve_x0(p1)[0].substitute(images)
    return images


def conic_conic_disjoint(c1: Conic, c2: Conic) -> bool:
    images = _plane_intersection(c1.plane, c2.plane)
    q1 = c1.quadric.substitute(images)
    q2 = c2.quadric.substitute(images)
    return bool(binary_resultant(q1, q2))


def curves_disjoint(u, v, eps=None) -> bool:
    if isinstance(u, LineId) and isinstance(v, LineId):
        return not lines_meet_rule(u, v)
    if isinstance(u, LineId):
        return line_conic_disjoint(u, v, eps)
    if isinstance(v, LineId):
        return line_conic_disjoint(v, u, eps)
    return conic_conic_disjoint(u, v)


def sixteen_skew_pairs(eps=None) -> list[tuple[str, str, bool]]:
    curves = sixteen_curves(eps)
    return [
        (str(u), str(v), curves_disjoint(u, v, eps))
        for u, v in itertools.combinations(curves, 2)
    ]


def verify_sixteen_skew(eps=None) -> bool:
    pairs = sixteen_skew_pairs(eps)
    return len(pairs) == 120 and all(ok for _, _, ok in pairs)
