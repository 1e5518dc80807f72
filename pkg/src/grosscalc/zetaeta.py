"""Partial zeta and eta sums ``zeta(s, n)``, ``eta(s, n)`` at s = 0, -1, -2, ...

The number of items n is explicit and may be infinite.  ``zeta`` uses the
Faulhaber polynomial; ``eta`` goes through the differentiation recurrence
evaluated at x = -1, so the two routes are independent of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .errors import UnsupportedExponent
from .expvalue import ExpValue, ev, exp_term
from .numerals import GrossNumber, Parity, gross
from .powersum import eval_at_minus_one, faulhaber, power_sum_state

DEFAULT_MAX_ORDER = 32


@dataclass(frozen=True)
class ZetaQuery:
    s: int
    n: GrossNumber
    max_order: int = DEFAULT_MAX_ORDER

    def __post_init__(self):
        if not isinstance(self.s, int) or self.s > 0:
            raise ValueError(f"s must be a non-positive integer, got {self.s!r}")
        if -self.s > self.max_order:
            raise UnsupportedExponent(f"s = {self.s} exceeds the bound m <= {self.max_order}")
        n = gross(self.n)
        n.require_integer_valued("item count")
        if n < 1:
            raise ValueError(f"item count {n} must be at least 1")
        object.__setattr__(self, "n", n)

    @property
    def m(self) -> int:
        return -self.s


def _query(q_or_s, n=None) -> ZetaQuery:
    if isinstance(q_or_s, ZetaQuery):
        return q_or_s
    return ZetaQuery(q_or_s, n)


def zeta(q, n=None) -> GrossNumber:
    """``sum_{u=1}^{n} u^m`` for s = -m; call as zeta(query) or zeta(s, n)."""
    q = _query(q, n)
    return faulhaber(q.m).evaluate(q.n)


def eta(q, n=None) -> GrossNumber:
    """``sum_{u=1}^{n} (-1)^(u-1) u^m`` for s = -m."""
    q = _query(q, n)
    parity = q.n.parity()
    if q.m == 0:
        return gross(parity.value)
    return eval_at_minus_one(power_sum_state(q.m), parity).evaluate(q.n)


def _zeta_from(m: int, n: GrossNumber) -> GrossNumber:
    # zeta(s, 0) = 0 is needed for the odd relation at n = 1
    return faulhaber(m).evaluate(n)


def relation_sides(s: int, n) -> tuple:
    """Both sides of eta(s,n) = zeta(s,2k[+1]) - 2^(1-s) zeta(s,k)."""
    q = ZetaQuery(s, n)
    k = (q.n - q.n.parity().value) / 2
    lhs = eta(q)
    rhs = _zeta_from(q.m, q.n) - 2 ** (1 + q.m) * _zeta_from(q.m, k)
    return lhs, rhs


def relation_check(s: int, n) -> bool:
    lhs, rhs = relation_sides(s, n)
    return lhs == rhs


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def first_primes(r: int) -> List[int]:
    out: List[int] = []
    p = 2
    while len(out) < r:
        if is_prime(p):
            out.append(p)
        p += 1
    return out


def euler_factor_partial(p: int, s: int, k) -> ExpValue:
    """``1 + p^-s + ... + p^(-s(k-1))``, i.e. the Euler factor cut at k items."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if s == 0:
        raise ValueError("s must be non-zero")
    k = gross(k)
    k.require_integer_valued("item count")
    if k < 1:
        raise ValueError("k must be at least 1")
    if not k.is_finite and s < 0:
        raise ValueError("an infinite number of items needs s > 0")
    ratio = Fraction(1, p**s) if s > 0 else Fraction(p ** (-s))
    return (ev(1) - exp_term(1, ratio, k)) / (1 - ratio)


def euler_factor_full(p: int, s: int) -> Fraction:
    return 1 / (1 - Fraction(1, p) ** s)


def partial_zeta_positive(s: int, n: int) -> Fraction:
    """``sum_{u=1}^{n} u^-s`` for finite n, exactly."""
    return sum((Fraction(1, u**s) for u in range(1, n + 1)), Fraction(0))


def euler_inequality_check(s: int, n: int, depths: Sequence[int]) -> bool:
    """True when the partial sum differs from the truncated Euler product.

    The product runs over the first ``len(depths)`` primes, the i-th factor
    cut at ``depths[i]`` items.  Each truncated factor is also required to
    differ from the full factor ``1/(1 - p^-s)``.
    """
    if s < 1 or n < 1 or not depths or any(k < 1 for k in depths):
        raise ValueError("need s >= 1, n >= 1 and at least one depth >= 1")
    product = Fraction(1)
    factors_differ = True
    for p, k in zip(first_primes(len(depths)), depths):
        factor = euler_factor_partial(p, s, k).as_gross().to_fraction()
        factors_differ &= factor != euler_factor_full(p, s)
        product *= factor
    return factors_differ and partial_zeta_positive(s, n) != product
