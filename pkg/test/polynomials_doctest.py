import doctest
import numpy as np
import mldpy.algebra.polynomials as po

from mldpy.geometry.newton import make_ideal
from fractions import Fraction


def _random_polynomial(field, rng, terms=4, degree=4):
    denominators = 3 if field.characteristic == 0 else 2
    return po.BivariatePolynomial.from_terms(field, {
        (int(rng.randint(degree + 1)), int(rng.randint(degree + 1))):
            Fraction(int(rng.randint(1, 5)), int(rng.randint(1, denominators)))
        for _ in range(terms)})


def test_doctests():
    failures, _ = doctest.testmod(po)
    assert failures == 0


def test_frobenius_monomialization():
    for p in [2, 3, 5]:
        for char in [p, 0]:
            field = po.CoefficientField(char)
            x, y = po.BivariatePolynomial.x(field), po.BivariatePolynomial.y(field)
            ideal = po.monomialize(po.PolynomialIdeal([(x + y) ** p]))
            if char:
                assert ideal == make_ideal([(p, 0), (0, p)])
            else:
                assert ideal == make_ideal([(i, p - i) for i in range(p + 1)])


def test_coefficients_are_reduced():
    field = po.CoefficientField(3)
    f = po.BivariatePolynomial.from_terms(field, {(1, 0): 4, (0, 1): 3, (0, 0): -1})
    assert f.terms() == {po.Monomial(1, 0): 1, po.Monomial(0, 0): 2}


def test_half_in_characteristic_two():
    try:
        po.BivariatePolynomial.constant(po.CoefficientField(2), Fraction(1, 2))
    except ZeroDivisionError:
        pass
    else:
        assert False, "1/2 does not exist in F_2"


def test_composite_characteristic():
    for char in [1, 4, 9, 15]:
        try:
            po.CoefficientField(char)
        except po.PreconditionError:
            pass
        else:
            assert False, "%d is not a prime" % char


def test_field_mismatch():
    f = po.BivariatePolynomial.x(po.CoefficientField(0))
    g = po.BivariatePolynomial.x(po.CoefficientField(5))
    try:
        f + g
    except po.FieldMismatchError:
        pass
    else:
        assert False, "polynomials over different fields were added"


def test_automorphisms_are_invertible():
    rng = np.random.RandomState(2021)
    for char in [0, 2, 3]:
        field = po.CoefficientField(char)
        autos = po.elementary_automorphisms(field, 2, [0, 1, -1, 2])
        for _ in range(20):
            f = _random_polynomial(field, rng)
            steps = [autos[int(i)].steps for i in rng.randint(len(autos), size=3)]
            phi = po.PlaneAutomorphism([s for step in steps for s in step], field)
            assert phi.inverse()(phi(f)) == f


def test_identity_automorphism():
    rng = np.random.RandomState(3)
    field = po.CoefficientField(0)
    identity = po.elementary_automorphisms(field, 1, [0, 1])[0]
    assert identity.is_identity
    for _ in range(10):
        f = _random_polynomial(field, rng)
        assert identity(f) == f
        assert po.substitute(f, po.BivariatePolynomial.x(field), po.BivariatePolynomial.y(field)) == f


def test_shear_monomializes_a_smooth_curve():
    field = po.CoefficientField(0)
    x, y = po.BivariatePolynomial.x(field), po.BivariatePolynomial.y(field)
    ideal = po.PolynomialIdeal([y + x ** 2])
    phi = po.PlaneAutomorphism([po.ShearY([0, -1], field)], field)
    assert po.monomialize(po.apply(phi, ideal)) == make_ideal([(0, 1)])


def test_monomialization_contains_the_support():
    rng = np.random.RandomState(11)
    field = po.CoefficientField(0)
    for _ in range(20):
        f = _random_polynomial(field, rng)
        ideal = po.monomialize(po.PolynomialIdeal([f]))
        for m in f.support():
            assert any(g.divides(m) for g in ideal.generators)


if __name__ == '__main__':
    doctest.testmod(po, verbose=True)
