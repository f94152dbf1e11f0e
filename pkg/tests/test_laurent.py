import random
from fractions import Fraction

import pytest

from territories.errors import ZeroScaleError
from territories.laurent import LaurentPoly


def rand_laurent(rng, span=(-3, 3)):
    return LaurentPoly(
        {e: Fraction(rng.randint(-4, 4)) for e in range(*span) if rng.random() < 0.5}
    )


def test_basic_arithmetic():
    p = LaurentPoly({-1: 1, 1: 2})
    q = LaurentPoly({0: 3})
    assert (p + q).coeffs == {-1: Fraction(1), 0: Fraction(3), 1: Fraction(2)}
    assert (p * q).coeffs == {-1: Fraction(3), 1: Fraction(6)}
    assert (p - p).is_zero()
    assert p.valuation() == -1 and p.degree() == 1
    assert p.shift(2).valuation() == 1


def test_evaluate_and_at_zero():
    p = LaurentPoly({0: 2, 2: 1})
    assert p.evaluate(Fraction(3)) == 11
    assert p.at_zero() == 2
    with pytest.raises(ZeroScaleError):
        p.evaluate(0)
    with pytest.raises(ValueError):
        LaurentPoly({-1: 1}).at_zero()


def test_exact_division_random():
    rng = random.Random(6)
    for _ in range(40):
        a = rand_laurent(rng)
        b = rand_laurent(rng)
        if a.is_zero() or b.is_zero():
            continue
        product = a * b
        assert product.exact_div(b) == a
        assert product.exact_div(a) == b


def test_inexact_division_raises():
    a = LaurentPoly({0: 1, 1: 1})
    b = LaurentPoly({0: 1, 2: 1})
    with pytest.raises(ValueError):
        b.exact_div(a)


def test_text():
    assert LaurentPoly({-1: 1, 2: -3}).text() == "a^-1 - 3*a^2"
    assert LaurentPoly({}).text() == "0"
