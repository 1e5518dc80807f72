"""Closed forms of sums whose number of items is fixed explicitly.

The item count may be finite or infinite (any integer-valued GrossNumber).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .expvalue import ExpValue, ev, exp_term
from .numerals import ZERO, GrossNumber, as_fraction, gross
from .powersum import alternating_power_sum


def _count(n, minimum: int = 0) -> GrossNumber:
    n = gross(n)
    n.require_integer_valued("item count")
    if n < minimum:
        raise ValueError(f"item count {n} is below {minimum}")
    return n


def sum_arithmetic(a1, d, n) -> GrossNumber:
    """``a1 + (a1 + d) + ... + (a1 + (n-1)d)`` with n items."""
    n = _count(n, 1)
    a1, d = gross(a1), gross(d)
    return n * (2 * a1 + (n - 1) * d) / 2


def sum_geometric(x, n, start: int = 0) -> ExpValue:
    """``sum_{i=start}^{n} x^i`` for a rational ratio x and start 0 or 1.

    For x != 1 this is ``1/(1-x) - x^(n+1)/(1-x)``; the last power is kept
    as an exponential term when n is infinite.
    """
    if start not in (0, 1):
        raise ValueError("start must be 0 or 1")
    x = as_fraction(x)
    n = _count(n, start)
    if x == 1:
        total = ev(n + 1)
    else:
        tail = exp_term(Fraction(1) / (1 - x), x, n + 1)
        total = ev(Fraction(1) / (1 - x)) - tail
    return total - 1 if start == 1 else total


@dataclass(frozen=True)
class PatternSum:
    """A finite pattern of items repeated cyclically for ``count`` items."""

    pattern: Tuple[Fraction, ...]
    count: GrossNumber

    def __init__(self, pattern: Sequence, count):
        if not pattern:
            raise ValueError("pattern must be non-empty")
        object.__setattr__(self, "pattern", tuple(as_fraction(p) for p in pattern))
        object.__setattr__(self, "count", _count(count))

    def split(self) -> Tuple[GrossNumber, int]:
        """(full periods q, leftover items r) with count = q*L + r.

        G is divisible by every finite natural, so r only depends on the
        finite digit of the count.
        """
        L = len(self.pattern)
        r = int(self.count.finite_digit) % L
        return (self.count - r) / L, r


def sum_pattern(ps: PatternSum) -> GrossNumber:
    q, r = ps.split()
    return q * sum(ps.pattern) + sum(ps.pattern[:r])


def rearrangement_count(ps: PatternSum) -> Tuple[GrossNumber, GrossNumber]:
    """Numbers of positive and of negative items among the ``count`` items."""
    q, r = ps.split()
    pos = sum(1 for p in ps.pattern if p > 0)
    neg = sum(1 for p in ps.pattern if p < 0)
    pos_r = sum(1 for p in ps.pattern[:r] if p > 0)
    neg_r = sum(1 for p in ps.pattern[:r] if p < 0)
    return q * pos + pos_r, q * neg + neg_r


def sum_alternating_linear(k) -> GrossNumber:
    """``1 - 2 + 3 - 4 + ...`` with k items."""
    k = _count(k)
    if k.is_zero:
        return ZERO
    return alternating_power_sum(1, k)


def sum_alternating_ones(k) -> GrossNumber:
    """``1 - 1 + 1 - ...`` with k items."""
    return sum_pattern(PatternSum((1, -1), k))

