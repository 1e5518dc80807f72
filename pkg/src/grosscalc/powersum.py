"""Power sums through the multiply-by-x-and-differentiate recurrence.

Starting from ``f(x) = sum_{i=0}^{n} x^i = (1 - x^(n+1)) / (1 - x)`` the
recurrence produces, after m steps, a closed form for
``sum_{i=1}^{n} i^m x^(i-1)`` with a symbolic item count ``n``:

    (sum_j S_j(n) x^(n+j) + sum_i P_i(n) x^i) / (1 - x)^(m+1)

Evaluating at ``x = -1`` gives alternating sums; at ``x = 1`` the
singularity is removed by putting ``x = 1 + d`` with an infinitesimal ``d``
and keeping the perturbation-free part.  Faulhaber's formula is provided as
an independent route to the same polynomials.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Dict, Mapping

from .errors import SingularityNotRemovable
from .numerals import GrossNumber, Parity, as_fraction, gross


class PolyN:
    """Polynomial in the formal item count ``n`` with rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, object] = None):
        clean: Dict[int, Fraction] = {}
        for deg, c in (coeffs or {}).items():
            if deg < 0:
                raise ValueError("PolyN degrees are non-negative")
            c = as_fraction(c)
            if c:
                clean[int(deg)] = c
        self._coeffs = clean

    @classmethod
    def const(cls, c) -> "PolyN":
        return cls({0: c})

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._coeffs)

    @property
    def degree(self) -> int:
        return max(self._coeffs, default=-1)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, deg: int) -> Fraction:
        return self._coeffs.get(deg, Fraction(0))

    def __add__(self, other) -> "PolyN":
        other = _poly(other)
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, 0) + c
        return PolyN(out)

    __radd__ = __add__

    def __neg__(self) -> "PolyN":
        return PolyN({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other) -> "PolyN":
        return self + (-_poly(other))

    def __rsub__(self, other) -> "PolyN":
        return _poly(other) - self

    def __mul__(self, other) -> "PolyN":
        other = _poly(other)
        out: Dict[int, Fraction] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return PolyN(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            other = _poly(other)
        except TypeError:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __call__(self, n):
        return self.evaluate(n)

    def evaluate(self, n):
        """Horner evaluation at an int, Fraction or GrossNumber."""
        if isinstance(n, GrossNumber):
            acc = GrossNumber()
            for d in range(self.degree, -1, -1):
                acc = acc * n + self[d]
            return acc
        n = as_fraction(n)
        acc = Fraction(0)
        for d in range(self.degree, -1, -1):
            acc = acc * n + self[d]
        return acc

    def __repr__(self) -> str:
        if not self._coeffs:
            return "PolyN(0)"
        parts = []
        for d in sorted(self._coeffs, reverse=True):
            c = self._coeffs[d]
            mono = "" if d == 0 else ("n" if d == 1 else f"n^{d}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{'*' + mono if mono else ''}")
        return "PolyN(" + " + ".join(parts).replace("+ -", "- ") + ")"


def _poly(value) -> PolyN:
    if isinstance(value, PolyN):
        return value
    return PolyN.const(as_fraction(value))


N = PolyN({1: 1})


def falling_binomial(shift: int, t: int) -> PolyN:
    """``C(n + shift, t)`` as a polynomial in n."""
    out = PolyN.const(1)
    for i in range(t):
        out = out * (N + (shift - i))
    return out * Fraction(1, math.factorial(t))


class RationalForm:
    """``(sum_j S_j x^(n+j) + sum_i P_i x^i) / (1 - x)^d`` with PolyN coefficients."""

    __slots__ = ("shifted", "pure", "den_power")

    def __init__(self, shifted: Mapping[int, PolyN], pure: Mapping[int, PolyN], den_power: int):
        self.shifted = {j: _poly(p) for j, p in shifted.items() if not _poly(p).is_zero()}
        self.pure = {i: _poly(p) for i, p in pure.items() if not _poly(p).is_zero()}
        if any(i < 0 for i in self.pure):
            raise ValueError("pure terms need non-negative powers of x")
        self.den_power = den_power

    @property
    def order(self) -> int:
        """Number of recurrence steps that produced this state."""
        return self.den_power - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalForm):
            return NotImplemented
        return (self.shifted, self.pure, self.den_power) == (
            other.shifted,
            other.pure,
            other.den_power,
        )

    def __repr__(self) -> str:
        return f"RationalForm(shifted={self.shifted}, pure={self.pure}, d={self.den_power})"

    def evaluate(self, n: int, x) -> Fraction:
        """Value at a finite item count n and a point x != 1."""
        x = as_fraction(x)
        if x == 1:
            raise ValueError("x = 1 is a removable singularity; use standard_part_at_one")
        num = sum(p.evaluate(n) * x ** (n + j) for j, p in self.shifted.items())
        num += sum(p.evaluate(n) * x**i for i, p in self.pure.items())
        return num / (1 - x) ** self.den_power


def geom_closed() -> RationalForm:
    """``(1 - x^(n+1)) / (1 - x)``, the sum of x^i for i = 0..n."""
    return RationalForm({1: PolyN.const(-1)}, {0: PolyN.const(1)}, 1)


def _add_into(acc: Dict[int, PolyN], key: int, p: PolyN) -> None:
    acc[key] = acc.get(key, PolyN()) + p


def differentiate(rf: RationalForm) -> RationalForm:
    """d/dx of N / (1-x)^d, recombined as (N'(1-x) + d N) / (1-x)^(d+1)."""
    d = rf.den_power
    shifted: Dict[int, PolyN] = {}
    pure: Dict[int, PolyN] = {}
    for j, s in rf.shifted.items():
        # d/dx x^(n+j) = (n+j) x^(n+j-1)
        ds = s * (N + j)
        _add_into(shifted, j - 1, ds)
        _add_into(shifted, j, -ds)
        _add_into(shifted, j, s * d)
    for i, p in rf.pure.items():
        if i:
            _add_into(pure, i - 1, p * i)
            _add_into(pure, i, p * (-i))
        _add_into(pure, i, p * d)
    return RationalForm(shifted, pure, d + 1)


def times_x(rf: RationalForm) -> RationalForm:
    return RationalForm(
        {j + 1: s for j, s in rf.shifted.items()},
        {i + 1: p for i, p in rf.pure.items()},
        rf.den_power,
    )


def step(rf: RationalForm) -> RationalForm:
    """One recurrence step: plain derivative from the geometric sum, then d/dx (x f)."""
    if rf.order == 0:
        return differentiate(rf)
    return differentiate(times_x(rf))


@functools.lru_cache(maxsize=None)
def _state(m: int) -> RationalForm:
    if m == 0:
        return geom_closed()
    return step(_state(m - 1))


def recurrence_state(m: int) -> RationalForm:
    """``step`` applied m times to :func:`geom_closed`."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return _state(m)


def power_sum_state(m: int) -> RationalForm:
    """Closed form of ``sum_{i=1}^{n} i^m x^(i-1)``.

    For m >= 1 this is the m-th recurrence state.  For m = 0 the geometric
    state sums i = 0..n, one item too many, so ``(1 - x^n)/(1 - x)`` is used.
    """
    if m == 0:
        return RationalForm({0: PolyN.const(-1)}, {0: PolyN.const(1)}, 1)
    return recurrence_state(m)


def eval_at_minus_one(rf: RationalForm, parity: Parity) -> PolyN:
    """Substitute x = -1, with (-1)^n fixed by the parity of n."""
    sign_n = -1 if parity is Parity.ODD else 1
    total = PolyN()
    for j, s in rf.shifted.items():
        total = total + s * (sign_n * (-1) ** (j % 2))
    for i, p in rf.pure.items():
        total = total + p * ((-1) ** (i % 2))
    return total * Fraction(1, 2**rf.den_power)


def standard_part_at_one(rf: RationalForm) -> PolyN:
    """Value at x = 1 + d with the infinitesimal contribution of d removed.

    Expands every x^(n+j) and x^i binomially in d up to order ``den_power``.
    The coefficients of d^0 .. d^(den_power - 1) must vanish identically in
    n; the d^den_power coefficient divided by (-1)^den_power is the answer.
    """
    d = rf.den_power
    coeffs = []
    for t in range(d + 1):
        c = PolyN()
        for j, s in rf.shifted.items():
            c = c + s * falling_binomial(j, t)
        for i, p in rf.pure.items():
            c = c + p * math.comb(i, t)
        coeffs.append(c)
    for t, c in enumerate(coeffs[:-1]):
        if not c.is_zero():
            raise SingularityNotRemovable(f"coefficient of d^{t} is {c}, not zero")
    return coeffs[d] * (-1) ** d


@functools.lru_cache(maxsize=None)
def bernoulli(j: int) -> Fraction:
    """Bernoulli number B_j with B_1 = +1/2.

    Recurrence: sum_{k=0}^{j} C(j+1, k) B_k = j + 1.
    """
    if j < 0:
        raise ValueError("j must be non-negative")
    if j == 0:
        return Fraction(1)
    acc = sum(math.comb(j + 1, k) * bernoulli(k) for k in range(j))
    return (Fraction(j + 1) - acc) / (j + 1)


@functools.lru_cache(maxsize=None)
def faulhaber(m: int) -> PolyN:
    """``sum_{i=1}^{n} i^m`` as a polynomial in n."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return PolyN(
        {m + 1 - j: Fraction(math.comb(m + 1, j)) * bernoulli(j) / (m + 1) for j in range(m + 1)}
    )


def alternating_power_sum(m: int, n) -> GrossNumber:
    """``sum_{i=1}^{n} (-1)^(i-1) i^m`` for a finite or infinite count n."""
    n = gross(n)
    poly = eval_at_minus_one(power_sum_state(m), n.parity())
    return gross(poly.evaluate(n))
