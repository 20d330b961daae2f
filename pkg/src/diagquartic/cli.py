"""Command-line front end: ``analyze`` for a single diagonal quartic and
``verify`` for the identity suites."""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import elliptic, galois, geometry, mizukami
from .brauer import analyze_surface, BrauerReport
from .numbers import GaussInt, gauss_primary_split, is_prime, primes_below

SUITES = ("lines", "conics", "octads", "e1", "skew16", "mizukami", "torsion", "galois", "frobenius")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    coefficients: tuple | None = None
    suite: str | None = None
    mode: str = "exact"
    prime: int = mizukami.DEFAULT_PRIME
    trials: int = 100
    seed: int = 0
    fmt: str = "text"
    quick: bool = False


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise UsageError(f"not a rational p/q: {text!r}") from None
    if d == 0:
        raise UsageError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def parse_coeffs(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError("--coeffs needs exactly three values a1,a2,a3")
    coeffs = tuple(parse_rational(p) for p in parts)
    if any(c == 0 for c in coeffs):
        raise UsageError("coefficients must be nonzero")
    return coeffs


def emit_report(report: BrauerReport, fmt: str = "text") -> str:
    data = report.to_dict()
    if fmt == "json":
        return json.dumps(data, indent=2)
    hd = data["hd_contains"]
    unc = data["unconditional"]
    lines = [
        f"coefficients: {', '.join(data['coefficients'])}",
        f"hd_contains.2: {str(hd['2']).lower()}",
        f"hd_contains.3: {str(hd['3']).lower()}",
        f"hd_contains.5: {str(hd['5']).lower()}",
        f"transcendental_trivial: {str(data['transcendental_trivial']).lower()}",
        f"exponent_bound: {data['exponent_bound']}",
        f"order_bound_br_mod_br1: {data['order_bound_br_mod_br1']}",
        f"order_bound_br_mod_br0: {data['order_bound_br_mod_br0']}",
        f"unconditional.exponent: {unc['exponent']}",
        f"unconditional.order_br1: {unc['order_br1']}",
        f"unconditional.order_br0: {unc['order_br0']}",
    ]
    if not report.hd_contains_2:
        lines.append(f"# {report.two_part_citation}")
    return "\n".join(lines)


# suites: each returns a list of (check name, passed)

Checks = list[tuple[str, bool]]


def _suite_lines(cfg: CliConfig) -> Checks:
    on_x = all(geometry.line_on_x(l) for l in geometry.ALL_LINES)
    lines = geometry.ALL_LINES
    agree = all(
        geometry.lines_meet_rule(a, b) == geometry.lines_meet_oracle(a, b)
        for k, a in enumerate(lines)
        for b in lines[k + 1 :]
    )
    return [("all 48 lines lie on X", on_x), ("meet rule agrees with rank oracle on 1128 pairs", agree)]


def _suite_conics(cfg: CliConfig) -> Checks:
    conics = geometry.constructible_conics()
    return [(f"{len(conics)} constructible conics lie on X", all(geometry.verify_conic_on_x(c) for c in conics))]


def _suite_octads(cfg: CliConfig) -> Checks:
    return [(f"octad {f.tag}", geometry.verify_quadric_octad(f)) for f in geometry.all_octad_forms()]


def _suite_e1(cfg: CliConfig) -> Checks:
    return [(name, diff.is_zero()) for name, diff in geometry.e1_differences().items()]


def _suite_skew16(cfg: CliConfig) -> Checks:
    pairs = geometry.sixteen_skew_pairs()
    bad = [f"{a}/{b}" for a, b, ok in pairs if not ok]
    name = f"{len(pairs)} pairs among the 16 curves are disjoint"
    return [(name + (f" (meeting: {', '.join(bad)})" if bad else ""), not bad)]


def _suite_mizukami(cfg: CliConfig) -> Checks:
    checks: Checks = []
    if cfg.mode == "sampled":
        passed, total = mizukami.verify_kummer_sampled(cfg.prime, cfg.trials, cfg.seed)
        checks.append((f"Kummer equations at {passed}/{total} points of X(F_{cfg.prime})", passed == total))
        return checks
    for name, (a, b) in mizukami.dependence_relations().items():
        checks.append((name, mizukami.rf_equal_on_x(a, b)))
    for name, (a, b) in mizukami.square_identities().items():
        checks.append((name, mizukami.rf_equal_on_x(a, b)))
    checks += list(mizukami.verify_kummer_exact().items())
    return checks


def _suite_torsion(cfg: CliConfig) -> Checks:
    checks = list(elliptic.verify_torsion_fields(3).items())
    checks += list(elliptic.verify_torsion_fields(5).items())
    checks.append(("E[4] has 16 points closed under + and [i]", four_torsion_closed()))
    checks.append(
        ("#E(F_p) = 0 mod 16 for p = 1 mod 8 below 500",
         all(elliptic.count_points(elliptic.E, p) % 16 == 0 for p in primes_below(500) if p % 8 == 1))
    )
    return checks


def four_torsion_closed() -> bool:
    pts = elliptic.four_torsion_q8()
    keys = {(P.x, P.y) for P in pts}
    if len(keys) != 16:
        return False
    for P in pts:
        iP = elliptic.cm_apply(GaussInt(0, 1), P)
        if (iP.x, iP.y) not in keys:
            return False
        for Q in pts:
            R = elliptic.ec_add(P, Q, elliptic.E)
            if (R.x, R.y) not in keys:
                return False
    return True


def _suite_galois(cfg: CliConfig) -> Checks:
    return [
        ("terib kernel over all 2x2 matrices mod 16", galois.verify_terib_kernel()),
        ("odd square kill, ell = 3", galois.verify_odd_square_kill(3)),
        ("odd square kill, ell = 5", galois.verify_odd_square_kill(5)),
        ("Fr5^4 nonscalar mod ell for 7 <= ell <= 97",
         all(galois.check_nonscalar_fr5pow4(l) for l in primes_below(98) if l >= 7)),
        ("1+4i has order 8 mod 3", galois.mult_order_mod(GaussInt(1, 4), 3) == 8),
    ]


def _suite_frobenius(cfg: CliConfig) -> Checks:
    checks = [
        ("Fr_5 = -1+2i", elliptic.frobenius_primary(5) == GaussInt(-1, 2)),
        ("Fr_17 = 1+4i", elliptic.frobenius_primary(17) == GaussInt(1, 4)),
    ]
    ok = all(
        2 * gauss_primary_split(p).re == p + 1 - elliptic.count_points(elliptic.E, p)
        for p in primes_below(1000)
        if p % 4 == 1
    )
    checks.append(("2 Re(pi) = p + 1 - #E(F_p) for p = 1 mod 4 below 1000", ok))
    return checks


SUITE_RUNNERS: dict[str, Callable[[CliConfig], Checks]] = {
    "lines": _suite_lines,
    "conics": _suite_conics,
    "octads": _suite_octads,
    "e1": _suite_e1,
    "skew16": _suite_skew16,
    "mizukami": _suite_mizukami,
    "torsion": _suite_torsion,
    "galois": _suite_galois,
    "frobenius": _suite_frobenius,
}


def run_analyze(cfg: CliConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    report = analyze_surface(*cfg.coefficients)
    print(emit_report(report, cfg.fmt), file=out)
    return 0


def run_verify(cfg: CliConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    suites = sorted(SUITES) if cfg.suite == "all" else [cfg.suite]
    failed = 0
    for name in suites:
        for check, ok in SUITE_RUNNERS[name](cfg):
            print(f"[{'PASS' if ok else 'FAIL'}] {name}: {check}", file=out)
            failed += not ok
    print(f"{'all checks passed' if not failed else f'{failed} check(s) failed'}", file=out)
    return 1 if failed else 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="diagquartic", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    an = sub.add_parser("analyze", help="H_D memberships and Brauer bounds for one surface")
    an.add_argument("--coeffs", required=True, help="a1,a2,a3 as integers or p/q")
    an.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    ve = sub.add_parser("verify", help="run an identity suite")
    ve.add_argument("suite", choices=SUITES + ("all",))
    ve.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    ve.add_argument("--prime", type=int, default=mizukami.DEFAULT_PRIME)
    ve.add_argument("--trials", type=int, default=100)
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--quick", action="store_true", help="sampled mode for identity checks")
    return parser


def parse_config(argv: list[str]) -> CliConfig:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return CliConfig("analyze", coefficients=parse_coeffs(args.coeffs), fmt=args.fmt)
    mode = "sampled" if args.quick else args.mode
    if mode == "sampled" and not (is_prime(args.prime) and args.prime % 8 == 1):
        raise UsageError(f"--prime {args.prime} is not a prime congruent to 1 mod 8")
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    return CliConfig("verify", suite=args.suite, mode=mode, prime=args.prime,
                     trials=args.trials, seed=args.seed, quick=args.quick)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if cfg.command == "analyze":
        return run_analyze(cfg)
    return run_verify(cfg)


if __name__ == "__main__":
    sys.exit(main())
