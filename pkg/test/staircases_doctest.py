import doctest
import warnings
import mldpy.lab.staircases as st

from mldpy.lab.staircases import StaircaseEnumeration, enumerate_staircases, staircase_count
from mldpy.lab._helpers import PreconditionError

from scipy.special import comb

import pytest


def test_doctests():
    failures, _ = doctest.testmod(st)
    assert failures == 0


@pytest.mark.parametrize("box_bound", [0, 1, 2, 3, 4])
def test_counts_match_the_binomial_formula(box_bound):
    m = box_bound + 1
    assert staircase_count(box_bound, include_trivial=True) == comb(2 * m, m, exact=True) - 1
    assert staircase_count(box_bound) == comb(2 * m, m, exact=True) - 2
    assert len(list(enumerate_staircases(box_bound, include_trivial=True))) == comb(2 * m, m, exact=True) - 1
    assert len(list(enumerate_staircases(box_bound))) == comb(2 * m, m, exact=True) - 2


def test_staircases_are_distinct_antichains():
    ideals = list(enumerate_staircases(4))
    assert len(set(ideals)) == len(ideals)
    for ideal in ideals:
        gens = list(ideal.generators)
        assert all(max(ex, ey) <= 4 for ex, ey in gens)
        for a in gens:
            for b in gens:
                assert a == b or not (a[0] <= b[0] and a[1] <= b[1])


def test_enumeration_is_deterministic():
    assert list(enumerate_staircases(3)) == list(enumerate_staircases(3))
    enum = StaircaseEnumeration(3)
    assert list(enum) == list(enum)


def test_budget_truncates_with_a_warning():
    enum = StaircaseEnumeration(3, budget=10)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        ideals = list(enum)
    assert len(ideals) == 10
    assert enum.is_truncated
    assert any(issubclass(w.category, RuntimeWarning) for w in caught)
    assert ideals == list(enumerate_staircases(3))[:10]


def test_large_budget_is_silent():
    enum = StaircaseEnumeration(2, budget=1000)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        ideals = list(enum)
    assert not enum.is_truncated
    assert len(ideals) == enum.full_count == 18
    assert not caught


def test_negative_box_is_rejected():
    with pytest.raises(PreconditionError):
        StaircaseEnumeration(-1)
    with pytest.raises(PreconditionError):
        list(enumerate_staircases(-1))


if __name__ == '__main__':
    doctest.testmod(st, verbose=True)
