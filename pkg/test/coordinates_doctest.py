import doctest
import numpy as np
import mldpy.invariants.coordinates as co

from mldpy.algebra.scalars import ExactScalar, Ordering
from mldpy.algebra.polynomials import (
    CoefficientField, BivariatePolynomial, PolynomialIdeal, PlaneAutomorphism, ShearY, elementary_automorphisms,
    monomialize)
from mldpy.invariants.multiideal import PolyMultiIdeal, compare_values
from mldpy.invariants.discrepancy import valuation
from mldpy.io.text import parse_multiideal


def _random_polynomial(field, rng, terms=3, degree=3):
    f = BivariatePolynomial.zero(field)
    while f.is_zero or f.weighted_order((1, 1)) == 0:
        f = BivariatePolynomial.from_terms(field, {
            (int(rng.randint(degree + 1)), int(rng.randint(degree + 1))): int(rng.randint(1, 4))
            for _ in range(terms)})
    return f


def _random_poly_multiideal(field, rng):
    pairs = []
    for e in rng.choice(["1", "1/2", "2/3"], size=int(rng.randint(1, 3))):
        pairs.append((PolynomialIdeal([_random_polynomial(field, rng) for _ in range(int(rng.randint(1, 3)))]), e))
    return PolyMultiIdeal(pairs)


def test_doctests():
    failures, _ = doctest.testmod(co)
    assert failures == 0


def test_monomial_valuations_see_only_the_support():
    rng = np.random.RandomState(2021)
    for char in [0, 2]:
        field = CoefficientField(char)
        for _ in range(20):
            ideal = PolynomialIdeal([_random_polynomial(field, rng) for _ in range(2)])
            for _ in range(20):
                p = (int(rng.randint(1, 8)), int(rng.randint(1, 8)))
                assert min(g.weighted_order(p) for g in ideal.generators) == valuation(p, monomialize(ideal))


def test_search_is_below_every_tested_change():
    rng = np.random.RandomState(5)
    for char in [0, 2]:
        field = CoefficientField(char)
        autos = elementary_automorphisms(field, 1, [0, 1, -1])
        for _ in range(8):
            P = _random_poly_multiideal(field, rng)
            best, phi = co.coordinate_search(P, degree_bound=1, pool=[0, 1, -1])
            assert best.upper_bound
            for i in rng.randint(len(autos), size=10):
                bound = co.monomialized_upper_bound(P.transformed(autos[int(i)]))
                assert compare_values(bound.value, best.value) != Ordering.LESS
            assert compare_values(co.monomialized_upper_bound(P.transformed(phi)).value, best.value) == Ordering.EQUAL


def test_shear_straightens_a_parabola():
    field = CoefficientField(0)
    P = parse_multiideal("y + x^2 @ 2")
    before = co.monomialized_upper_bound(P)
    after = co.monomialized_upper_bound(P.transformed(PlaneAutomorphism([ShearY([0, -1], field)], field)))
    assert str(before.value) == "-inf" and str(after.value) == "-inf"
    assert after.k <= before.k
    assert str(P.transformed(PlaneAutomorphism([ShearY([0, -1], field)], field))) == "y @ 2"


def test_identity_is_kept_on_a_tie():
    field = CoefficientField(0)
    P = parse_multiideal("y + x^2 @ 1")
    result, phi = co.coordinate_search(P, degree_bound=2, pool=[0, 1, -1])
    straightened = co.monomialized_upper_bound(P.transformed(PlaneAutomorphism([ShearY([0, -1], field)], field)))
    assert phi.is_identity
    assert result.value == straightened.value == ExactScalar(1)
    assert tuple(result.computing_divisor) == tuple(straightened.computing_divisor) == (1, 1)


def test_zero_steps_keep_the_identity():
    P = parse_multiideal("x^2 + y^3 @ 1")
    result, phi = co.coordinate_search(P, max_steps=0)
    assert phi.is_identity and result.monomialized


def test_parallel_search_agrees():
    P = parse_multiideal("x^2 + x*y + y^2, x^3 @ 1/2 ; y + x^3 @ 1/3")
    sequential = co.coordinate_search(P, degree_bound=2, pool=[0, 1, -1])
    parallel = co.coordinate_search(P, degree_bound=2, pool=[0, 1, -1], n_jobs=2)
    assert sequential[1] == parallel[1]
    assert compare_values(sequential[0].value, parallel[0].value) == Ordering.EQUAL


if __name__ == '__main__':
    doctest.testmod(co, verbose=True)
