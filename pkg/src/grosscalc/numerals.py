"""Positional grossone records with exact rational grossdigits.

A :class:`GrossNumber` is a finite sum ``c_k G^p_k + ... + c_0 + ... + c_j G^p_j``
with integer grosspowers and non-zero rational grossdigits, kept in
canonical (strictly decreasing power) order.  Values are immutable.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from numbers import Integral, Rational
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .errors import (
    DivisionByZero,
    NonIntegerGrosspower,
    NotExactlyDivisible,
    NotIntegerValued,
)

Scalar = Union[int, Fraction]
Term = Tuple[int, Fraction]


class Order(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of_sign(cls, sign: int) -> "Order":
        return cls((sign > 0) - (sign < 0))


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1

    def __add__(self, other: "Parity") -> "Parity":
        if not isinstance(other, Parity):
            return NotImplemented
        return Parity(self.value ^ other.value)


def as_fraction(value) -> Fraction:
    """Convert an exact scalar to ``Fraction``; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not grossdigits")
    if isinstance(value, (Integral, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def _as_power(value) -> int:
    if isinstance(value, bool):
        raise TypeError("booleans are not grosspowers")
    if isinstance(value, Integral):
        return int(value)
    if isinstance(value, Rational):
        if value.denominator == 1:
            return int(value.numerator)
        raise NonIntegerGrosspower(f"grosspower {value} is not an integer")
    if isinstance(value, GrossNumber):
        if value.is_finite and value.finite_digit.denominator == 1:
            return int(value.finite_digit)
        raise NonIntegerGrosspower(f"grosspower {value} is not a finite integer")
    raise TypeError(f"not a grosspower: {value!r}")


class GrossNumber:
    """Exact number written as a positional grossone record.

    ``GrossNumber({2: Fraction(1, 2), 1: Fraction(1, 2)})`` is ``0.5G^2 + 0.5G``.
    Terms may also be given as ``(power, digit)`` pairs; repeated powers are
    summed and zero digits dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, Iterable[Tuple[object, object]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for power, digit in items:
            p = _as_power(power)
            acc[p] = acc.get(p, Fraction(0)) + as_fraction(digit)
        self._terms: Tuple[Term, ...] = tuple(
            (p, acc[p]) for p in sorted(acc, reverse=True) if acc[p]
        )

    @classmethod
    def _from_canonical(cls, terms: Tuple[Term, ...]) -> "GrossNumber":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def scalar(cls, value) -> "GrossNumber":
        c = as_fraction(value)
        return cls._from_canonical(((0, c),) if c else ())

    @classmethod
    def monomial(cls, digit, power: int = 1) -> "GrossNumber":
        return cls({power: digit})

    # -- structure -----------------------------------------------------

    @property
    def terms(self) -> Tuple[Term, ...]:
        return self._terms

    def __iter__(self) -> Iterator[Term]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def digit(self, power: int) -> Fraction:
        for p, c in self._terms:
            if p == power:
                return c
        return Fraction(0)

    @property
    def finite_digit(self) -> Fraction:
        return self.digit(0)

    @property
    def leading_power(self) -> int:
        if not self._terms:
            raise ValueError("zero has no leading grosspower")
        return self._terms[0][0]

    @property
    def leading_digit(self) -> Fraction:
        return self._terms[0][1] if self._terms else Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_finite(self) -> bool:
        return all(p == 0 for p, _ in self._terms)

    @property
    def is_infinite(self) -> bool:
        return bool(self._terms) and self._terms[0][0] > 0

    @property
    def is_infinitesimal(self) -> bool:
        return bool(self._terms) and self._terms[0][0] < 0

    @property
    def is_integer_valued(self) -> bool:
        """No negative grosspowers and an integer finite part.

        Rational digits at positive powers are fine: G/m is an integer for
        every finite natural m.
        """
        return (not self._terms or self._terms[-1][0] >= 0) and (
            self.finite_digit.denominator == 1
        )

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def sign(self) -> int:
        if not self._terms:
            return 0
        return 1 if self._terms[0][1] > 0 else -1

    def to_fraction(self) -> Fraction:
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.finite_digit

    def parts(self) -> Tuple["GrossNumber", "GrossNumber", "GrossNumber"]:
        """Split into (infinite, finite, infinitesimal) parts."""
        cls = GrossNumber._from_canonical
        return (
            cls(tuple(t for t in self._terms if t[0] > 0)),
            cls(tuple(t for t in self._terms if t[0] == 0)),
            cls(tuple(t for t in self._terms if t[0] < 0)),
        )

    def require_integer_valued(self, what: str = "value") -> None:
        if not self.is_integer_valued:
            raise NotIntegerValued(f"{what} {self} is not integer-valued")

    def parity(self) -> Parity:
        # every c*G^p with p >= 1 is even, so only the finite digit decides
        self.require_integer_valued()
        return Parity(int(self.finite_digit) % 2)

    def divisible_by(self, m: int) -> bool:
        if m < 1:
            raise ValueError("divisor must be a positive integer")
        self.require_integer_valued()
        return int(self.finite_digit) % m == 0

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for p, c in other._terms:
            acc[p] = acc.get(p, 0) + c
        return GrossNumber._from_canonical(
            tuple((p, acc[p]) for p in sorted(acc, reverse=True) if acc[p])
        )

    __radd__ = __add__

    def __neg__(self) -> "GrossNumber":
        return GrossNumber._from_canonical(tuple((p, -c) for p, c in self._terms))

    def __pos__(self) -> "GrossNumber":
        return self

    def __sub__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        acc: dict[int, Fraction] = {}
        for p, c in self._terms:
            for q, d in other._terms:
                acc[p + q] = acc.get(p + q, 0) + c * d
        return GrossNumber._from_canonical(
            tuple((p, acc[p]) for p in sorted(acc, reverse=True) if acc[p])
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return div_exact(self, other)

    def __rtruediv__(self, other) -> "GrossNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return div_exact(other, self)

    def __pow__(self, k) -> "GrossNumber":
        if isinstance(k, GrossNumber):
            k = _as_power(k)
        if not isinstance(k, Integral) or isinstance(k, bool):
            return NotImplemented
        k = int(k)
        if k < 0:
            return div_exact(ONE, self ** (-k))
        if len(self._terms) == 1:
            p, c = self._terms[0]
            return GrossNumber._from_canonical(((p * k, c**k),)) if k else ONE
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- ordering and equality -----------------------------------------

    def compare(self, other) -> Order:
        diff = self - other
        return Order.of_sign(diff.sign())

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self.is_finite:
            return hash(self.finite_digit)
        return hash(self._terms)

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"GrossNumber({str(self)!r})"

    def __str__(self) -> str:
        from .textio import format_gross

        return format_gross(self)


def _coerce(value):
    if isinstance(value, GrossNumber):
        return value
    if isinstance(value, (Integral, Rational)) and not isinstance(value, bool):
        return GrossNumber.scalar(value)
    return None


def gross(value) -> GrossNumber:
    """Coerce an int, Fraction or GrossNumber to GrossNumber."""
    g = _coerce(value)
    if g is None:
        raise TypeError(f"cannot interpret {value!r} as a GrossNumber")
    return g


ZERO = GrossNumber()
ONE = GrossNumber.scalar(1)
G = GrossNumber({1: 1})


def add(a, b) -> GrossNumber:
    return gross(a) + gross(b)


def mul(a, b) -> GrossNumber:
    return gross(a) * gross(b)


def power(a, k: int) -> GrossNumber:
    return gross(a) ** k


def compare(a, b) -> Order:
    return gross(a).compare(b)


def parts(a) -> Tuple[GrossNumber, GrossNumber, GrossNumber]:
    return gross(a).parts()


def parity(a) -> Parity:
    return gross(a).parity()


def divisible_by(a, m: int) -> bool:
    return gross(a).divisible_by(m)


def div_exact(a, b) -> GrossNumber:
    """Return ``q`` with ``q * b == a`` exactly.

    Both operands are shifted to ordinary polynomials in G (lowest power
    zero) and divided; a non-zero remainder means the quotient has no
    finite record, e.g. ``1 / (G + 1)``.
    """
    a, b = gross(a), gross(b)
    if b.is_zero:
        raise DivisionByZero("division by zero")
    if a.is_zero:
        return ZERO
    if b.is_monomial():
        q, d = b.terms[0]
        return GrossNumber._from_canonical(tuple((p - q, c / d) for p, c in a.terms))

    a_low, b_low = a.terms[-1][0], b.terms[-1][0]
    rem = {p - a_low: c for p, c in a.terms}
    div = {p - b_low: c for p, c in b.terms}
    top_b = max(div)
    lead_b = div[top_b]
    quot: dict[int, Fraction] = {}
    while rem:
        top = max(rem)
        if top < top_b:
            raise NotExactlyDivisible(f"{a} is not exactly divisible by {b}")
        factor = rem[top] / lead_b
        shift = top - top_b
        quot[shift] = factor
        for p, c in div.items():
            v = rem.get(p + shift, 0) - factor * c
            if v:
                rem[p + shift] = v
            else:
                rem.pop(p + shift, None)
    return GrossNumber({p + a_low - b_low: c for p, c in quot.items()})
