"""Grossone records extended with exponential terms ``c * b^E``.

Geometric sums and truncated Euler factors with an infinite number of items
produce values such as ``0.5*3^(G^2+1) - 0.5`` or ``1 - 2^(-G)``.  An
:class:`ExpValue` holds a :class:`GrossNumber` plus a tuple of
:class:`ExpTerm` in canonical form:

* the base is a rational ``> 1`` that is not a perfect power, so equal
  values always share a base (``4^G`` is stored as ``2^(2G)``);
* the exponent is integer-valued with a zero finite part; the finite part
  is folded into the coefficient (``3^(G+1)`` is ``3 * 3^G``);
* terms are combined per (base, exponent) and sorted by base, then exponent.

Only products the representation can hold are supported; anything else
(``G * 2^G``, ``2^G * 3^G``) raises :class:`UnrepresentableProduct`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational
from typing import Iterable, Optional, Tuple

from .errors import (
    DivisionByZero,
    NonIntegerGrosspower,
    NotExactlyDivisible,
    NotIntegerValued,
    ParityRequired,
    UnrepresentableProduct,
    UnrepresentableValue,
)
from .numerals import ONE, ZERO, GrossNumber, Order, Parity, as_fraction, gross


def _iroot(n: int, k: int) -> Optional[int]:
    """Exact integer k-th root of n >= 0, or None."""
    if n < 2:
        return n
    lo, hi = 1, 1 << (n.bit_length() // k + 1)
    while lo <= hi:
        mid = (lo + hi) // 2
        v = mid**k
        if v == n:
            return mid
        if v < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def _small_primes(limit: int) -> Iterable[int]:
    sieve = bytearray([1]) * (limit + 1)
    for i in range(2, limit + 1):
        if sieve[i]:
            yield i
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))


def perfect_power_root(b: Fraction) -> Tuple[Fraction, int]:
    """Return ``(r, e)`` with ``b == r**e`` and ``r`` not a perfect power."""
    num, den = b.numerator, b.denominator
    e = 1
    changed = True
    while changed and max(num, den) > 1:
        changed = False
        limit = max(num.bit_length(), den.bit_length())
        for k in _small_primes(limit):
            rn, rd = _iroot(num, k), _iroot(den, k)
            if rn is not None and rd is not None:
                num, den, e = rn, rd, e * k
                changed = True
                break
    return Fraction(num, den), e


@dataclass(frozen=True)
class ExpTerm:
    """``coeff * base^exponent`` in canonical form (see module docstring)."""

    coeff: Fraction
    base: Fraction
    exponent: GrossNumber

    @property
    def is_infinitesimal(self) -> bool:
        return self.exponent.leading_digit < 0

    def key(self) -> Tuple[Fraction, GrossNumber]:
        return (self.base, self.exponent)


def _compare_log_weights(d1: Fraction, b1: Fraction, d2: Fraction, b2: Fraction) -> int:
    """Sign of ``d1*ln(b1) - d2*ln(b2)`` for bases > 1, decided exactly."""
    s1, s2 = (d1 > 0) - (d1 < 0), (d2 > 0) - (d2 < 0)
    if s1 != s2:
        return (s1 > s2) - (s1 < s2)
    if s1 == 0:
        return 0
    # same sign: compare b1^|d1| with b2^|d2| at a common denominator
    a1, a2 = abs(d1), abs(d2)
    den = a1.denominator * a2.denominator // _gcd(a1.denominator, a2.denominator)
    x = b1 ** int(a1 * den)
    y = b2 ** int(a2 * den)
    c = (x > y) - (x < y)
    return c if s1 > 0 else -c


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _growth_cmp(t1: ExpTerm, t2: ExpTerm) -> int:
    """Compare ``b1^E1`` with ``b2^E2``, ignoring coefficients."""
    powers = sorted({p for p, _ in t1.exponent} | {p for p, _ in t2.exponent}, reverse=True)
    for p in powers:
        c = _compare_log_weights(t1.exponent.digit(p), t1.base, t2.exponent.digit(p), t2.base)
        if c:
            return c
    return 0


def _term_order(t1: ExpTerm, t2: ExpTerm) -> int:
    if t1.base != t2.base:
        return -1 if t1.base < t2.base else 1
    return t1.exponent.compare(t2.exponent).value


class ExpValue:
    """A GrossNumber plus canonical exponential terms."""

    __slots__ = ("_gross", "_terms")

    def __init__(self, gross_part=ZERO, terms: Iterable[ExpTerm] = ()):
        acc: dict = {}
        for t in terms:
            k = t.key()
            acc[k] = acc.get(k, Fraction(0)) + t.coeff
        merged = [ExpTerm(c, b, e) for (b, e), c in acc.items() if c]
        merged.sort(key=functools.cmp_to_key(_term_order))
        self._gross = gross(gross_part)
        self._terms: Tuple[ExpTerm, ...] = tuple(merged)

    @property
    def gross(self) -> GrossNumber:
        return self._gross

    @property
    def terms(self) -> Tuple[ExpTerm, ...]:
        return self._terms

    @property
    def is_gross(self) -> bool:
        return not self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms and self._gross.is_zero

    def as_gross(self) -> GrossNumber:
        if self._terms:
            raise UnrepresentableValue(f"{self} has exponential terms")
        return self._gross

    def normalized(self) -> "ExpValue":
        return ExpValue(self._gross, self._terms)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "ExpValue":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ExpValue(self._gross + other._gross, self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> "ExpValue":
        return ExpValue(-self._gross, (ExpTerm(-t.coeff, t.base, t.exponent) for t in self._terms))

    def __pos__(self) -> "ExpValue":
        return self

    def __sub__(self, other) -> "ExpValue":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ExpValue":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "ExpValue":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ev_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ExpValue":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ev_div(self, other)

    def __rtruediv__(self, other) -> "ExpValue":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return ev_div(other, self)

    def __pow__(self, k) -> "ExpValue":
        if not isinstance(k, Integral) or isinstance(k, bool):
            return NotImplemented
        k = int(k)
        base = self
        if k < 0:
            base, k = _reciprocal(self), -k
        result = ExpValue(ONE)
        while k:
            if k & 1:
                result = ev_mul(result, base)
            k >>= 1
            if k:
                base = ev_mul(base, base)
        return result

    # -- ordering ------------------------------------------------------

    def sign(self) -> int:
        big = [t for t in self._terms if not t.is_infinitesimal]
        if big:
            return 1 if _dominant(big).coeff > 0 else -1
        if not self._gross.is_zero:
            return self._gross.sign()
        if self._terms:
            return 1 if _dominant(self._terms).coeff > 0 else -1
        return 0

    def compare(self, other) -> Order:
        return Order.of_sign((self - other).sign())

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._gross == other._gross and self._terms == other._terms

    def __hash__(self) -> int:
        if not self._terms:
            return hash(self._gross)
        return hash((self._gross, self._terms))

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        return NotImplemented if other is None else (self - other).sign() < 0

    def __le__(self, other) -> bool:
        other = _coerce(other)
        return NotImplemented if other is None else (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        other = _coerce(other)
        return NotImplemented if other is None else (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        other = _coerce(other)
        return NotImplemented if other is None else (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        return f"ExpValue({str(self)!r})"

    def __str__(self) -> str:
        from .textio import format_value

        return format_value(self)


def _dominant(terms) -> ExpTerm:
    return max(terms, key=functools.cmp_to_key(_growth_cmp))


def _coerce(value) -> Optional[ExpValue]:
    if isinstance(value, ExpValue):
        return value
    if isinstance(value, GrossNumber):
        return ExpValue(value)
    if isinstance(value, (Integral, Rational)) and not isinstance(value, bool):
        return ExpValue(GrossNumber.scalar(value))
    return None


def ev(value) -> ExpValue:
    """Coerce an int, Fraction, GrossNumber or ExpValue to ExpValue."""
    v = _coerce(value)
    if v is None:
        raise TypeError(f"cannot interpret {value!r} as an ExpValue")
    return v


def exp_term(coeff, base, exponent) -> ExpValue:
    """Build ``coeff * base^exponent`` for a rational base, normalized.

    Negative bases take their sign from the parity of the exponent; a base
    in (0, 1) is stored as its reciprocal with the exponent negated.
    """
    coeff = as_fraction(coeff)
    base = as_fraction(base)
    exponent = gross(exponent)
    if not coeff:
        return ExpValue()
    if not exponent.is_integer_valued:
        if base < 0:
            raise ParityRequired(f"sign of ({base})^({exponent}) needs an integer exponent")
        raise NotIntegerValued(f"exponent {exponent} is not integer-valued")
    if base == 0:
        s = exponent.sign()
        if s < 0:
            raise DivisionByZero("zero raised to a negative power")
        return ExpValue(GrossNumber.scalar(coeff if s == 0 else 0))
    if base < 0:
        if exponent.parity() is Parity.ODD:
            coeff = -coeff
        base = -base
    if base == 1:
        return ExpValue(GrossNumber.scalar(coeff))
    if base < 1:
        base, exponent = 1 / base, -exponent
    root, e = perfect_power_root(base)
    if e > 1:
        base, exponent = root, exponent * e
    c0 = exponent.finite_digit
    coeff = coeff * base ** int(c0)
    rest = exponent - c0
    if rest.is_zero:
        return ExpValue(GrossNumber.scalar(coeff))
    return ExpValue(ZERO, (ExpTerm(coeff, base, rest),))


def ev_add(a, b) -> ExpValue:
    return ev(a) + ev(b)


def ev_mul(a, b) -> ExpValue:
    a, b = ev(a), ev(b)
    g = a.gross * b.gross
    terms = []
    for x, y in ((a, b), (b, a)):
        if not x.gross.is_zero and y.terms:
            if not x.gross.is_finite:
                raise UnrepresentableProduct(f"mixed term: ({x.gross}) * ({y.terms[0].base})^E")
            c = x.gross.finite_digit
            terms.extend(ExpTerm(c * t.coeff, t.base, t.exponent) for t in y.terms)
    for s in a.terms:
        for t in b.terms:
            if s.base != t.base:
                raise UnrepresentableProduct(
                    f"product of exponentials with different bases {s.base} and {t.base}"
                )
            e = s.exponent + t.exponent
            if e.is_zero:
                g = g + s.coeff * t.coeff
            else:
                terms.append(ExpTerm(s.coeff * t.coeff, s.base, e))
    return ExpValue(g, terms)


def _reciprocal(a: ExpValue) -> ExpValue:
    if a.is_zero:
        raise DivisionByZero("division by zero")
    if a.is_gross:
        return ExpValue(ONE / a.gross)
    if a.gross.is_zero and len(a.terms) == 1:
        t = a.terms[0]
        return ExpValue(ZERO, (ExpTerm(1 / t.coeff, t.base, -t.exponent),))
    raise NotExactlyDivisible(f"{a} has no exact reciprocal")


def ev_div(a, b) -> ExpValue:
    a, b = ev(a), ev(b)
    if b.is_zero:
        raise DivisionByZero("division by zero")
    if b.is_gross:
        if a.is_gross:
            return ExpValue(a.gross / b.gross)
        if not b.gross.is_finite:
            raise UnrepresentableProduct(f"({a}) / ({b}) would need a mixed term")
        c = b.gross.finite_digit
        return ExpValue(a.gross / c, (ExpTerm(t.coeff / c, t.base, t.exponent) for t in a.terms))
    return ev_mul(a, _reciprocal(b))


def ev_compare(a, b) -> Order:
    """Order two values.

    A term whose exponent has a positive leading digit outgrows every
    GrossNumber; one with a negative leading digit is infinitesimal.  Terms
    are ranked by comparing ``d*ln(b)`` grosspower by grosspower, decided by
    exact powering.  Canonical bases are never perfect powers, so two
    distinct terms are never tied and the order is total.
    """
    return ev(a).compare(b)


def raise_power(base, exponent) -> ExpValue:
    """``base ^ exponent`` for the shapes the representation supports."""
    base, exponent = ev(base), ev(exponent)
    if not exponent.is_gross:
        raise UnrepresentableValue("exponential exponents are not supported")
    e = exponent.gross
    if e.is_finite:
        k = e.finite_digit
        if k.denominator != 1:
            if base.is_gross and not base.gross.is_finite:
                raise NonIntegerGrosspower(f"G-record raised to non-integer power {k}")
            raise NotIntegerValued(f"exponent {k} is not an integer")
        return base ** int(k)
    if not base.is_gross or not base.gross.is_finite:
        raise UnrepresentableValue(f"({base})^({e}) is not representable")
    return exp_term(1, base.gross.finite_digit, e)
