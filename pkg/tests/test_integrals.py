import random
from fractions import Fraction

from grosscalc.integrals import GrossPolynomial, integrate
from grosscalc.numerals import G, ZERO

from oracles import laurent_at, random_gross

x2 = GrossPolynomial([0, 0, 1])
third = Fraction(1, 3)


def test_examples():
    assert integrate(x2, 0, G) == G**3 / 3
    assert integrate(x2, 0, G**2) == G**6 / 3
    assert integrate(x2, G, G**2) == third * G**6 - third * G**3
    assert integrate(x2, G, G + G**-2) == 1 + G**-3 + third * G**-6
    assert integrate(x2 * G, G, G**2) == third * G**7 - third * G**4
    assert integrate(x2 * G, G, G**2) == G * integrate(x2, G, G**2)
    assert integrate(x2 * G**-4, G, G**2) == third * G**2 - third * G**-1


def test_x2_minus_x_short_interval():
    # the linear part contributes G^-1 + (1/2)G^-4, so a finite part survives
    value = integrate(GrossPolynomial([0, -1, 1]), G, G + G**-2)
    assert value == 1 - G**-1 + G**-3 - Fraction(1, 2) * G**-4 + third * G**-6
    assert integrate(GrossPolynomial([0, 1]), G, G + G**-2) == G**-1 + Fraction(1, 2) * G**-4


def test_polynomial_basics():
    p = GrossPolynomial([1, G, 0, 0])
    assert p.degree == 1
    assert p(G) == 1 + G**2
    assert GrossPolynomial([]) == GrossPolynomial([0])


def _random_poly(rng):
    return GrossPolynomial([random_gross(rng, 2, 2) for _ in range(rng.randint(1, 4))])


def test_properties_random():
    rng = random.Random(99)
    for _ in range(1000):
        p = _random_poly(rng)
        a, b, c = (random_gross(rng, 2, 2) for _ in range(3))
        g = random_gross(rng, 2, 2)
        assert integrate(p, a, c) == integrate(p, a, b) + integrate(p, b, c)
        assert integrate(p, a, b) == -integrate(p, b, a)
        assert integrate(p, a, a) == ZERO
        assert integrate(p * g, a, b) == g * integrate(p, a, b)


def test_substitution_oracle():
    # replacing G by a finite number commutes with exact integration
    rng = random.Random(3)
    for _ in range(100):
        p = _random_poly(rng)
        a, b = random_gross(rng, 2, 2), random_gross(rng, 2, 2)
        v = Fraction(37)
        coeffs = [laurent_at(c, v) for c in p.coefficients]
        A, B = laurent_at(a, v), laurent_at(b, v)
        direct = sum(c * (B ** (k + 1) - A ** (k + 1)) / (k + 1) for k, c in enumerate(coeffs))
        assert laurent_at(integrate(p, a, b), v) == direct
