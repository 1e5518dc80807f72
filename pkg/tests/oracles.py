"""Brute-force oracles and random generators shared by the tests."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from grosscalc.numerals import GrossNumber

fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))

gross_numbers = st.dictionaries(st.integers(-3, 3), fractions, max_size=4).map(GrossNumber)


def random_gross(rng: random.Random, max_terms: int = 4, span: int = 3) -> GrossNumber:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rng.randint(-span, span)] = Fraction(rng.randint(-30, 30), rng.randint(1, 8))
    return GrossNumber(terms)


def brute_power_sum(m: int, n: int) -> int:
    return sum(i**m for i in range(1, n + 1))


def brute_alternating(m: int, n: int) -> int:
    return sum((-1) ** (i - 1) * i**m for i in range(1, n + 1))


def brute_weighted(m: int, n: int, x: Fraction) -> Fraction:
    """sum_{i=1}^{n} i^m x^(i-1)."""
    return sum((Fraction(i) ** m * x ** (i - 1) for i in range(1, n + 1)), Fraction(0))


def laurent_at(g: GrossNumber, value: Fraction) -> Fraction:
    """Substitute a finite number for G; a ring homomorphism used as an oracle."""
    return sum((c * value**p for p, c in g.terms), Fraction(0))


def random_value(rng: random.Random):
    """A GrossNumber plus up to two exponential terms."""
    from grosscalc.expvalue import ev, exp_term

    v = ev(random_gross(rng))
    for _ in range(rng.randint(0, 2)):
        exponent = GrossNumber({rng.randint(1, 2): rng.randint(-3, 3), 0: rng.randint(-4, 4)})
        base = rng.choice([2, 3, 5, 6, 10, Fraction(1, 2), Fraction(2, 3), 9])
        v = v + exp_term(Fraction(rng.randint(-20, 20), rng.randint(1, 7)), base, exponent)
    return v
