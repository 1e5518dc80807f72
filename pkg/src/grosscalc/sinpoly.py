"""Two polynomial approximations of sin(x) and why they never coincide.

``P1(x, 2k+1)`` is the Taylor polynomial; ``P2(x, 2n+1)`` is the product
``x (1 - x^2/pi^2) (1 - x^2/(2 pi)^2) ... (1 - x^2/(n pi)^2)``.  Coefficients
of P2 are kept exact as ``rational * pi^power``; P1 coefficients are
rational.  Curve emission uses binary64.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, TextIO, Tuple

import mpmath


@dataclass(frozen=True)
class PiCoefficient:
    """``rational * pi^pi_power``."""

    rational: Fraction
    pi_power: int

    def __post_init__(self):
        if self.pi_power % 2:
            raise ValueError("pi_power must be even")
        if not self.rational:
            object.__setattr__(self, "pi_power", 0)

    def __float__(self) -> float:
        return float(self.rational) * math.pi**self.pi_power

    def to_mpf(self, dps: int = 50):
        with mpmath.workdps(dps):
            return mpmath.mpf(self.rational.numerator) / self.rational.denominator * mpmath.pi ** self.pi_power

    def equals_rational(self, q: Fraction) -> bool:
        """Symbolic equality with a pi-free rational, taking pi^2 irrational."""
        if not self.rational:
            return q == 0
        return self.pi_power == 0 and self.rational == q


def p1_coeffs(k: int) -> Dict[int, Fraction]:
    """Taylor coefficients of sin up to degree 2k+1."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return {2 * j + 1: Fraction((-1) ** j, math.factorial(2 * j + 1)) for j in range(k + 1)}


def elementary_symmetric(values: Sequence[Fraction]) -> List[Fraction]:
    """[e_0, e_1, ..., e_len] of the given values."""
    e = [Fraction(1)] + [Fraction(0)] * len(values)
    for count, v in enumerate(values, start=1):
        for j in range(count, 0, -1):
            e[j] += v * e[j - 1]
    return e


def p2_coeffs(n: int) -> Dict[int, PiCoefficient]:
    """Coefficients of ``x * prod_{i=1}^{n} (1 - x^2/(i pi)^2)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    e = elementary_symmetric([Fraction(1, i * i) for i in range(1, n + 1)])
    return {2 * j + 1: PiCoefficient((-1) ** j * e[j], -2 * j) for j in range(n + 1)}


@dataclass(frozen=True)
class CoefficientMismatch:
    degree: int
    taylor: Fraction
    product: PiCoefficient
    # numeric size of the identity the equality would force, when one is checked
    numeric_gap: object = None
    note: str = ""


@dataclass
class MismatchReport:
    k: int
    entries: List[CoefficientMismatch] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def degrees(self) -> List[int]:
        return [e.degree for e in self.entries]

    def entry(self, degree: int) -> CoefficientMismatch:
        for e in self.entries:
            if e.degree == degree:
                return e
        raise KeyError(degree)


def basel_gap(k: int, dps: int = 50):
    """``pi^2/6 - sum_{i<=k} 1/i^2``: what equal x^3 coefficients would force to zero."""
    partial = sum((Fraction(1, i * i) for i in range(1, k + 1)), Fraction(0))
    with mpmath.workdps(dps):
        return mpmath.pi**2 / 6 - mpmath.mpf(partial.numerator) / partial.denominator


def top_degree_gap(k: int, dps: int = 50):
    """``pi^(2k)/(2k+1)! - 1/(k!)^2``: what equal x^(2k+1) coefficients would force to zero."""
    with mpmath.workdps(dps):
        return mpmath.pi ** (2 * k) / mpmath.factorial(2 * k + 1) - 1 / mpmath.factorial(k) ** 2


def coeff_mismatch(k: int, dps: int = 50) -> MismatchReport:
    """Compare P1(x, 2k+1) and P2(x, 2k+1) degree by degree."""
    if k < 1:
        raise ValueError("k must be at least 1")
    p1, p2 = p1_coeffs(k), p2_coeffs(k)
    report = MismatchReport(k)
    for degree in sorted(p1):
        taylor, product = p1[degree], p2[degree]
        if product.equals_rational(taylor):
            continue
        gap, notes = None, []
        if degree == 3:
            gap = basel_gap(k, dps)
            notes.append("equal x^3 coefficients need pi^2/6 = sum_{i<=k} 1/i^2")
        if degree == 2 * k + 1:
            gap = top_degree_gap(k, dps) if degree != 3 else gap
            notes.append("equal top coefficients need pi^(2k)/(2k+1)! = 1/(k!)^2")
        if not notes:
            notes.append("pi-free rational against a rational multiple of a negative power of pi")
        report.entries.append(CoefficientMismatch(degree, taylor, product, gap, "; ".join(notes)))
    return report


def _horner_odd(coeffs: Dict[int, float], x: float) -> float:
    """Evaluate ``sum c_d x^d`` over odd d as ``x * q(x^2)``."""
    top = max(coeffs)
    x2 = x * x
    acc = 0.0
    for d in range(top, 0, -2):
        acc = acc * x2 + coeffs.get(d, 0.0)
    return acc * x


def emit_curve(k: int, x_min: float, x_max: float, steps: int) -> List[Tuple[float, float, float, float]]:
    """Rows ``(x, sin x, P1(x, 2k+1), P2(x, 2k+1))`` on an evenly spaced grid."""
    if steps < 2:
        raise ValueError("steps must be at least 2")
    c1 = {d: float(c) for d, c in p1_coeffs(k).items()}
    c2 = {d: float(c) for d, c in p2_coeffs(k).items()}
    width = (x_max - x_min) / (steps - 1)
    rows = []
    for i in range(steps):
        x = x_min + i * width if i < steps - 1 else float(x_max)
        rows.append((x, math.sin(x), _horner_odd(c1, x), _horner_odd(c2, x)))
    return rows


def write_curve_csv(rows, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["x", "sin", "p1", "p2"])
    for row in rows:
        writer.writerow([repr(float(v)) for v in row])
