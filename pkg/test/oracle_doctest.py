import doctest
import numpy as np
import mldpy.invariants.oracle as oc

from mldpy.algebra.scalars import ExactScalar, Ordering
from mldpy.invariants.multiideal import MultiIdeal
from mldpy.invariants.discrepancy import log_discrepancy
from mldpy.invariants.threshold import lct
from mldpy.geometry.newton import make_ideal

from fractions import Fraction

import pytest


def _random_multiideal(rng, exponents, box=4):
    pairs = []
    for _ in range(int(rng.randint(1, 3))):
        nb_generators = int(rng.randint(1, 4))
        ideal = make_ideal([(int(rng.randint(box + 1)), int(rng.randint(box + 1))) for _ in range(nb_generators)])
        pairs.append((ideal, exponents[int(rng.randint(len(exponents)))]))
    return MultiIdeal(pairs)


def test_doctests():
    failures, _ = doctest.testmod(oc)
    assert failures == 0


def test_minimum_matches_a_direct_scan():
    rng = np.random.RandomState(2021)
    for _ in range(30):
        multiideal = _random_multiideal(rng, [ExactScalar(1), ExactScalar("1/2"), ExactScalar(0, 0, 2)])
        found = oc.brute_force_mld(multiideal, 6)
        best = None
        for s in range(2, 13):
            for p1 in range(max(1, s - 6), min(6, s - 1) + 1):
                a = log_discrepancy((p1, s - p1), multiideal)
                if best is None or a < best[1]:
                    best = ((p1, s - p1), a)
        assert found.value == best[1]
        assert tuple(found.divisor) == best[0]
        assert found.negative == (best[1] < 0)


def test_lct_agrees_with_brute_force():
    rng = np.random.RandomState(5)
    for _ in range(60):
        multiideal = _random_multiideal(rng, [ExactScalar(1), ExactScalar("1/2"), ExactScalar("3/2")])
        expected = lct(multiideal)
        found = oc.brute_force_lct(multiideal, 12)
        assert found.compare(expected) == Ordering.EQUAL


@pytest.mark.slow
def test_lct_agrees_with_brute_force_on_a_large_box():
    rng = np.random.RandomState(6)
    exponents = [ExactScalar(Fraction(a, b)) for a in range(1, 5) for b in range(1, 5)]
    for _ in range(200):
        multiideal = _random_multiideal(rng, exponents, box=8)
        expected = lct(multiideal)
        found = oc.brute_force_lct(multiideal, 30)
        assert found.compare(expected) == Ordering.EQUAL


def test_box_must_be_positive():
    try:
        oc.brute_force_mld(MultiIdeal.trivial(), 0)
    except oc.PreconditionError:
        pass
    else:
        assert False, "the box {1, ..., 0}^2 is empty"


if __name__ == '__main__':
    doctest.testmod(oc, verbose=True)
