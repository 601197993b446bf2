import doctest
import numpy as np
import mldpy.algebra.scalars as sc

from fractions import Fraction
from math import pi


def _random_scalar(rng):
    return sc.ExactScalar(*[Fraction(int(rng.randint(-20, 21)), int(rng.randint(1, 7))) for _ in range(3)])


def _float(x):
    return float(x.a) + float(x.b) * pi + float(x.c) / pi


def test_doctests():
    failures, _ = doctest.testmod(sc)
    assert failures == 0


def test_pi_interval_encloses_pi():
    for digits in [1, 5, 16, 40]:
        lo, hi = sc.pi_interval(digits)
        assert lo < hi
        assert hi - lo <= Fraction(1, 10 ** digits)
        assert float(lo) <= pi <= float(hi)


def test_compare_agrees_with_floats():
    rng = np.random.RandomState(2021)
    for _ in range(1000):
        x, y = _random_scalar(rng), _random_scalar(rng)
        gap = _float(x) - _float(y)
        if abs(gap) < 1e-6:
            continue
        expected = sc.Ordering.GREATER if gap > 0 else sc.Ordering.LESS
        assert sc.compare(x, y) == expected
        assert sc.compare(y, x) == -expected


def test_compare_is_exact_on_equal_scalars():
    rng = np.random.RandomState(7)
    for _ in range(50):
        x = _random_scalar(rng)
        assert sc.compare(x, sc.ExactScalar(*x.components)) == sc.Ordering.EQUAL
        assert sc.compare(x - x, sc.ZERO) == sc.Ordering.EQUAL


def test_close_irrational_differences():
    # 355/113 approximates pi to 7 digits
    assert sc.compare(sc.ExactScalar(0, 1), sc.ExactScalar(Fraction(355, 113))) == sc.Ordering.LESS
    assert sc.compare(sc.ExactScalar(0, 1), sc.ExactScalar(Fraction(3141592, 1000000))) == sc.Ordering.GREATER


def test_reciprocal():
    for x in [sc.ExactScalar(Fraction(5, 6)), sc.ExactScalar(0, 3), sc.ExactScalar(0, 0, Fraction(2, 7))]:
        assert x * x.reciprocal() == sc.ExactScalar(1)


def test_reciprocal_of_mixed_scalar():
    try:
        sc.ExactScalar(1, 1).reciprocal()
    except sc.PreconditionError:
        pass
    else:
        assert False, "the reciprocal of 1 + pi is not representable"


def test_floats_are_rejected():
    try:
        sc.as_rational(0.5)
    except ValueError:
        pass
    else:
        assert False, "floats are not exact"


def test_minimum_keeps_the_first():
    values = [sc.ExactScalar(1), sc.ExactScalar(0, 0, 2), sc.ExactScalar(Fraction(2, 3))]
    assert sc.minimum(values) is values[1]
    assert sc.minimum([(0, sc.ExactScalar(1)), (1, sc.ExactScalar(1))], key=lambda p: p[1])[0] == 0


def test_quotients():
    t = sc.ExactQuotient(2, sc.ExactScalar(1, 0, 2))
    assert not t.is_scalar and str(t) == "2/(1 + 2/pi)"
    assert t.scale(Fraction(1, 2)) == sc.ExactQuotient(1, sc.ExactScalar(1, 0, 2))
    assert sc.ExactQuotient(3, sc.ExactScalar(0, 0, 2)).as_scalar() == sc.ExactScalar(0, Fraction(3, 2))
    assert t.to_dict() == {"numerator": "2", "denominator": {"a": "1", "b": "0", "c": "2"}}
    try:
        sc.ExactQuotient(1, sc.ExactScalar(1, -1))
    except sc.PreconditionError:
        pass
    else:
        assert False, "1 - pi is negative"


if __name__ == '__main__':
    doctest.testmod(sc, verbose=True)
