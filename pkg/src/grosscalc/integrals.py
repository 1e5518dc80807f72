"""Exact integrals of polynomials with grossone coefficients and endpoints."""

from __future__ import annotations

from typing import Sequence, Tuple

from .numerals import ZERO, GrossNumber, gross


class GrossPolynomial:
    """``c_0 + c_1 x + ... + c_k x^k`` with GrossNumber coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence):
        coeffs = [gross(c) for c in coefficients]
        while coeffs and coeffs[-1].is_zero:
            coeffs.pop()
        self.coefficients: Tuple[GrossNumber, ...] = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x) -> GrossNumber:
        x = gross(x)
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __mul__(self, g) -> "GrossPolynomial":
        return GrossPolynomial([c * g for c in self.coefficients])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrossPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __repr__(self) -> str:
        return f"GrossPolynomial({[str(c) for c in self.coefficients]})"


def integrate(p: GrossPolynomial, a, b) -> GrossNumber:
    """``sum_k c_k (b^(k+1) - a^(k+1)) / (k+1)``."""
    a, b = gross(a), gross(b)
    total = ZERO
    for k, c in enumerate(p.coefficients):
        if not c.is_zero:
            total = total + c * (b ** (k + 1) - a ** (k + 1)) / (k + 1)
    return total
