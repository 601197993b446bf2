import doctest
import numpy as np
import mldpy.io.text as tx

from mldpy.algebra.scalars import ExactScalar
from mldpy.algebra.polynomials import CoefficientField, BivariatePolynomial, PolynomialIdeal
from mldpy.invariants.multiideal import MultiIdeal, PolyMultiIdeal
from mldpy.lab.staircases import enumerate_staircases
from fractions import Fraction

import pytest


def _random_fraction(rng, zero=True):
    q = Fraction(int(rng.randint(-9, 10)), int(rng.randint(1, 7)))
    while not zero and q == 0:
        q = Fraction(int(rng.randint(-9, 10)), int(rng.randint(1, 7)))
    return q


def _random_polynomial(field, rng):
    f = BivariatePolynomial.zero(field)
    while f.is_zero:
        f = BivariatePolynomial.from_terms(field, {
            (int(rng.randint(4)), int(rng.randint(4))): _random_fraction(rng) if field.characteristic == 0
            else int(rng.randint(-5, 6)) for _ in range(int(rng.randint(1, 5)))})
    return f


def _random_poly_multiideal(field, rng):
    pairs = []
    for _ in range(int(rng.randint(1, 4))):
        ideal = PolynomialIdeal([_random_polynomial(field, rng) for _ in range(int(rng.randint(1, 4)))])
        exponent = ExactScalar(abs(_random_fraction(rng, zero=False)), abs(_random_fraction(rng)),
                               abs(_random_fraction(rng)))
        pairs.append((ideal, exponent))
    return PolyMultiIdeal(pairs)


def test_doctests():
    failures, _ = doctest.testmod(tx)
    assert failures == 0


def test_scalars_read_back():
    rng = np.random.RandomState(2021)
    for _ in range(200):
        x = ExactScalar(_random_fraction(rng), _random_fraction(rng), _random_fraction(rng))
        assert tx.parse_scalar(tx.format_scalar(x)) == x


@pytest.mark.parametrize("characteristic", [0, 3])
def test_multiideals_read_back(characteristic):
    rng = np.random.RandomState(characteristic)
    field = CoefficientField(characteristic)
    for _ in range(200):
        P = _random_poly_multiideal(field, rng)
        text = tx.format_multiideal(P)
        assert tx.parse_multiideal(text, characteristic) == P
        assert tx.format_multiideal(tx.parse_multiideal(text, characteristic)) == text


def test_staircase_multiideals_read_back():
    staircases = list(enumerate_staircases(3, include_trivial=True))
    for a, b in zip(staircases, reversed(staircases)):
        M = MultiIdeal([(a, ExactScalar("1/2")), (b, ExactScalar(0, 0, 2))])
        assert tx.parse_multiideal(tx.format_multiideal(M)).monomialized() == M


def test_positive_characteristic_reduces_coefficients():
    assert str(tx.parse_polynomial("3x + y", 3)) == "y"
    assert tx.parse_polynomial("(x + y)^3", 3) == tx.parse_polynomial("x^3 + y^3", 3)
    with pytest.raises(tx.ParseError):
        tx.parse_polynomial("x/3", 3)


def test_errors_are_located():
    with pytest.raises(tx.ParseError) as info:
        tx.parse_multiideal("x^2, y^3 @ 1 ;\nx @ -1")
    assert (info.value.line, info.value.column) == (2, 5)
    assert "not positive" in info.value.reason

    with pytest.raises(tx.ParseError) as info:
        tx.parse_polynomial("x $ y")
    assert (info.value.line, info.value.column) == (1, 3)

    with pytest.raises(tx.ParseError) as info:
        tx.parse_scalar("0.5")
    assert "fraction" in str(info.value)

    with pytest.raises(tx.ParseError):
        tx.parse_scalar("1/2 + pi^2")
    with pytest.raises(tx.ParseError):
        tx.parse_multiideal("x, 0 @ 1")
    with pytest.raises(tx.ParseError):
        tx.parse_monomial_ideal("x + y")
    with pytest.raises(tx.ParseError):
        tx.parse_multiideal("(x, y")


def test_implicit_products_and_default_exponents():
    P = tx.parse_multiideal("2xy + y^2 ; x")
    assert [str(e) for _, e in P.pairs] == ["1", "1"]
    assert tx.format_polynomial(P.pairs[0][0].generators[0]) == "2*x*y + y^2"


if __name__ == '__main__':
    doctest.testmod(tx, verbose=True)
