"""Reproduction checks run by ``grosscalc check suite``.

Every check is exact.  Two displayed values in the source material are
arithmetically wrong (eta(-3, G) and the integral of x^2 - x); the suite
checks the correct values for those, marked "corrected".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from .expvalue import ev, ev_compare
from .integrals import GrossPolynomial, integrate
from .numerals import G, Order, gross
from .powersum import faulhaber, power_sum_state, standard_part_at_one
from .series import PatternSum, sum_alternating_linear, sum_arithmetic, sum_geometric, sum_pattern
from .sinpoly import coeff_mismatch
from .textio import format_value, parse_value
from .zetaeta import euler_factor_partial, euler_inequality_check, eta, relation_check, zeta


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _value_check(name: str, compute: Callable[[], object], expected: str) -> CheckResult:
    want = parse_value(expected)
    got = compute()
    ok = ev(got) == want
    return CheckResult(name, ok, f"{format_value(got)} (expected {expected})")


def _values() -> List[tuple]:
    S7 = sum_alternating_linear
    x2 = GrossPolynomial([0, 0, 1])
    return [
        ("sum 1..G", lambda: sum_arithmetic(1, 1, G), "0.5G^2+0.5G"),
        ("sum i/G", lambda: sum_arithmetic(1 / G, 1 / G, G), "0.5G+0.5"),
        ("S2(G)-S1(5G)", lambda: sum_arithmetic(3, 0, G) - sum_arithmetic(7, 0, 5 * G), "-32G"),
        ("S2(7G+2)-S1(3G)", lambda: sum_arithmetic(3, 0, 7 * G + 2) - sum_arithmetic(7, 0, 3 * G), "6"),
        ("S3(0.5G)", lambda: sum_arithmetic(2 * G, 0, G / 2), "G^2"),
        ("S4(0.5G)", lambda: sum_arithmetic(4 / G, 0, G / 2), "2"),
        ("S5(G)", lambda: sum_pattern(PatternSum((1, -1), G)), "0"),
        ("S5(2G+1)", lambda: sum_pattern(PatternSum((1, -1), 2 * G + 1)), "1"),
        ("S6(G)", lambda: sum_pattern(PatternSum((1, 1, -1), G)), "G/3"),
        ("S7(G)", lambda: S7(G), "-G/2"),
        ("S7(G-1)", lambda: S7(G - 1), "G/2"),
        ("S7(G+1)", lambda: S7(G + 1), "G/2+1"),
        ("S7(G^2)", lambda: S7(G**2), "-G^2/2"),
        ("geometric 3^i, i=0..G^2", lambda: sum_geometric(3, G**2), "0.5*3^(G^2+1)-0.5"),
        ("geometric 2^-i, i=1..G", lambda: sum_geometric(Fraction(1, 2), G, start=1), "1-2^(-G)"),
        ("zeta(0,G/2)", lambda: zeta(0, G / 2), "G/2"),
        ("zeta(0,G)", lambda: zeta(0, G), "G"),
        ("zeta(-1,G/2)", lambda: zeta(-1, G / 2), "(G/2+1)G/4"),
        ("zeta(-1,G)", lambda: zeta(-1, G), "(G+1)G/2"),
        ("eta(0,G)", lambda: eta(0, G), "0"),
        ("eta(0,G^2-1)", lambda: eta(0, G**2 - 1), "1"),
        ("eta(-1,G)", lambda: eta(-1, G), "-G/2"),
        ("eta(-2,G)", lambda: eta(-2, G), "-0.5G(G+1)"),
        ("eta(-3,G) corrected", lambda: eta(-3, G), "-0.5G^3-0.75G^2"),
        ("eta(-4,G)", lambda: eta(-4, G), "-0.5G(G+1)(G^2+G-1)"),
        ("int x^2 on [0,G]", lambda: integrate(x2, 0, G), "(1/3)G^3"),
        ("int x^2 on [0,G^2]", lambda: integrate(x2, 0, G**2), "(1/3)G^6"),
        ("int x^2 on [G,G^2]", lambda: integrate(x2, G, G**2), "(1/3)G^6-(1/3)G^3"),
        ("int x^2 on [G,G+G^-2]", lambda: integrate(x2, G, G + G**-2), "1+G^-3+(1/3)G^-6"),
        (
            "int x^2-x on [G,G+G^-2] corrected",
            lambda: integrate(GrossPolynomial([0, -1, 1]), G, G + G**-2),
            "1-G^-1+G^-3-(1/2)G^-4+(1/3)G^-6",
        ),
        ("int G x^2 on [G,G^2]", lambda: integrate(x2 * G, G, G**2), "(1/3)G^7-(1/3)G^4"),
        ("int G^-4 x^2 on [G,G^2]", lambda: integrate(x2 * G**-4, G, G**2), "(1/3)G^2-(1/3)G^-1"),
    ]


def _structural_checks(rng: random.Random) -> List[CheckResult]:
    out = []
    for m in range(9):
        ok = standard_part_at_one(power_sum_state(m)) == faulhaber(m)
        out.append(CheckResult(f"standard part = Faulhaber, m={m}", ok))
    ns = [G, G**2, 6 * G + 2, 6 * G + 3] + [gross(n) for n in range(2, 101)]
    bad = [(s, str(n)) for s in range(0, -9, -1) for n in ns if not relation_check(s, n)]
    out.append(CheckResult("eta/zeta relation, s=0..-8", not bad, f"{len(bad)} failures"))
    vals = [parse_value(c) for c in ("G/2", "G", "2G+1", "2^G", "10^G")]
    ok = all(ev_compare(a, b) is Order.LESS for a, b in zip(vals, vals[1:]))
    out.append(CheckResult("ordering G/2 < G < 2G+1 < 2^G < 10^G", ok))
    bad_euler = []
    for _ in range(200):
        s, n, r = rng.choice((2, 3, 4)), rng.randint(4, 500), rng.randint(1, 6)
        depths = [rng.randint(1, 20) for _ in range(r)]
        if not euler_inequality_check(s, n, depths):
            bad_euler.append((s, n, depths))
    out.append(CheckResult("truncated Euler product != partial zeta", not bad_euler, f"{len(bad_euler)} failures"))
    infinite = all(euler_factor_partial(p, s, G).terms for p in (2, 3, 5, 7) for s in (2, 3, 4))
    out.append(CheckResult("Euler factor with G items keeps an exponential term", infinite))
    ok = all(coeff_mismatch(k) and 3 in coeff_mismatch(k).degrees() for k in range(1, 13))
    out.append(CheckResult("sine polynomials mismatch, k=1..12", ok))
    return out


def run_suite(seed: Optional[int] = None) -> List[CheckResult]:
    rng = random.Random(seed)
    results = [_value_check(name, f, want) for name, f, want in _values()]
    results.extend(_structural_checks(rng))
    return results
