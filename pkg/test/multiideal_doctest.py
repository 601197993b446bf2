import doctest
import mldpy.invariants.multiideal as mi

from mldpy.algebra.scalars import ExactScalar, Ordering
from mldpy.algebra.polynomials import CoefficientField
from mldpy.geometry.newton import make_ideal

import pickle


def test_doctests():
    failures, _ = doctest.testmod(mi)
    assert failures == 0


def test_minus_infinity_is_below_everything():
    assert mi.MINUS_INFINITY < ExactScalar(-10 ** 9)
    assert not mi.MINUS_INFINITY > ExactScalar(0, 0, -3)
    assert mi.compare_values(ExactScalar(0), mi.MINUS_INFINITY) == Ordering.GREATER
    assert not mi.is_finite(mi.MINUS_INFINITY)
    assert pickle.loads(pickle.dumps(mi.MINUS_INFINITY)) is mi.MINUS_INFINITY


def test_value_to_dict():
    assert mi.value_to_dict(mi.MINUS_INFINITY) == {"kind": "minus_infinity"}
    assert mi.value_to_dict(ExactScalar(1, 0, 2)) == {"kind": "finite", "scalar": {"a": "1", "b": "0", "c": "2"}}


def test_scaled_multiplies_every_exponent():
    M = mi.MultiIdeal([(make_ideal([(1, 0)]), 1), (make_ideal([(0, 2)]), ExactScalar(0, 0, 2))])
    assert M.scaled(ExactScalar("1/2")).exponents == (ExactScalar("1/2"), ExactScalar(0, 0, 1))


def test_padding_keeps_the_order_of_the_target():
    M = mi.MultiIdeal.single([(2, 0), (0, 3)], ExactScalar("1/2"))
    padded = mi.pad_multiideal(M, [ExactScalar("1/2"), 1, 1])
    assert padded.exponents == (ExactScalar("1/2"), ExactScalar(1), ExactScalar(1))
    assert padded.ideals[0] == M.ideals[0] and padded.ideals[1].is_trivial and padded.ideals[2].is_trivial
    try:
        mi.pad_multiideal(M, [1])
    except mi.PreconditionError:
        pass
    else:
        assert False, "1/2 is not among the target exponents"


def test_poly_multiideal_monomialization():
    M = mi.MultiIdeal.single([(2, 0), (0, 3)])
    P = mi.PolyMultiIdeal.from_multiideal(M, CoefficientField(3))
    assert P.is_monomial
    assert P.monomialized() == M


def test_results_to_dict():
    result = mi.MldResult(mi.MINUS_INFINITY, mi.WeightVector(3, 2), {"negative_ray": (3, 2)})
    assert result.to_dict() == {"value": {"kind": "minus_infinity"}, "divisor": {"p": [3, 2], "k": 4},
                                "certificate": {"negative_ray": [3, 2]}}
    assert result.as_upper_bound().to_dict()["upper_bound"]
    assert mi.LctResult().to_dict() == {"value": {"kind": "unbounded"}, "ray": None, "exceptional": False}


def test_lct_ratio_without_scalar_value():
    # 2 / (1 + 2/pi) is not of the form a + b*pi + c/pi
    r = mi.LctResult(2, ExactScalar(1, 0, 2), (1, 1))
    assert not r.has_scalar_value
    assert r.to_dict()["value"] == {"kind": "ratio"}
    assert str(r.value) == "2/(1 + 2/pi)" and r.quotient.scale(2).numerator == 4
    assert r.compare(mi.LctResult(1, ExactScalar(1), (1, 0))) == Ordering.GREATER


if __name__ == '__main__':
    doctest.testmod(mi, verbose=True)
