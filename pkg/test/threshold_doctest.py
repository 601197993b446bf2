import doctest
import numpy as np
import mldpy.invariants.threshold as th

from mldpy.algebra.scalars import ExactScalar, Ordering
from mldpy.invariants.multiideal import MultiIdeal
from mldpy.geometry.newton import make_ideal
from fractions import Fraction


def _random_multiideal(rng, exponents, box=4):
    pairs = []
    for _ in range(int(rng.randint(1, 3))):
        generators = [(int(rng.randint(box + 1)), int(rng.randint(box + 1))) for _ in range(int(rng.randint(1, 4)))]
        pairs.append((make_ideal(generators), exponents[int(rng.randint(len(exponents)))]))
    return MultiIdeal(pairs)


def test_doctests():
    failures, _ = doctest.testmod(th)
    assert failures == 0


def test_lct_mld_consistency():
    rng = np.random.RandomState(2021)
    tested = 0
    while tested < 200:
        multiideal = _random_multiideal(rng, [ExactScalar(1), ExactScalar("1/2"), ExactScalar("2/3")])
        if th.lct(multiideal).is_unbounded:
            continue
        assert th.lct_mld_consistency(multiideal)
        tested += 1


def test_lct_mld_consistency_with_pi():
    for generators in [[(2, 0), (0, 3)], [(3, 0), (0, 4)], [(1, 0)], [(2, 0), (1, 1), (0, 5)]]:
        assert th.lct_mld_consistency(MultiIdeal.single(generators, ExactScalar(0, 0, 2)))


def test_lct_mld_consistency_with_mixed_exponents():
    rng = np.random.RandomState(7)
    tested = 0
    while tested < 100:
        multiideal = _random_multiideal(rng, [ExactScalar(1), ExactScalar("1/2"), ExactScalar(0, 0, 2)])
        if th.lct(multiideal).is_unbounded:
            continue
        assert th.lct_mld_consistency(multiideal)
        tested += 1


def test_threshold_outside_the_scalars():
    # (x, y) * (x, y)^(2/pi): the threshold 2 / (1 + 2/pi) is not in Q + Q*pi + Q/pi
    m = make_ideal([(1, 0), (0, 1)])
    multiideal = MultiIdeal([(m, 1), (m, ExactScalar(0, 0, 2))])
    result = th.lct(multiideal)
    assert not result.has_scalar_value and result.exceptional
    assert str(result.value) == "2/(1 + 2/pi)"
    assert result.value.numerator == 2 and result.value.denominator == ExactScalar(1, 0, 2)
    assert th.lct_mld_consistency(multiideal)


def test_lct_scales_inversely():
    rng = np.random.RandomState(3)
    for _ in range(40):
        multiideal = _random_multiideal(rng, [ExactScalar(1), ExactScalar("1/2")])
        threshold = th.lct(multiideal)
        if threshold.is_unbounded:
            continue
        scaled = th.lct(multiideal.scaled(2))
        assert scaled.value == threshold.value.scale(Fraction(1, 2))


def test_exceptional_ray_wins_ties():
    # (x) * (x, y): the axis (1, 0) and the diagonal (1, 1) both give 1
    multiideal = MultiIdeal([(make_ideal([(1, 0)]), 1), (make_ideal([(1, 0), (0, 1)]), 1)])
    result = th.lct(multiideal)
    assert result.value == ExactScalar(1) and tuple(result.computing_ray) == (1, 1) and result.exceptional
    result = th.lct(MultiIdeal.single([(2, 0), (0, 2)]))
    assert result.value == ExactScalar(1) and tuple(result.computing_ray) == (1, 1)


def test_coordinate_line_threshold():
    result = th.lct(MultiIdeal.single([(1, 0)]))
    assert result.value == ExactScalar(1) and not result.exceptional
    assert result.compare(th.lct(MultiIdeal.single([(2, 0)]))) == Ordering.GREATER


if __name__ == '__main__':
    doctest.testmod(th, verbose=True)
