"""
Exhaustive enumeration of the staircase monomial ideals whose minimal generators lie in the box [0..M]^2.

A staircase is an antichain of the divisibility order, i.e. k generators with strictly ascending x-exponents and
strictly descending y-exponents. Choosing the k x-exponents and the k y-exponents independently gives every antichain
exactly once, so there are sum_k C(M + 1, k)^2 = C(2(M + 1), M + 1) of them, the empty one included.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import PreconditionError
from mldpy.geometry.newton import MonomialIdeal

from itertools import combinations, islice
from scipy.special import comb

import warnings


def staircase_count(box_bound, include_trivial=False):
    """
    The number of non-zero staircase ideals with generators in [0..M]^2.

    Examples
    --------
    >>> staircase_count(1), staircase_count(1, include_trivial=True)
    (4, 5)
    >>> staircase_count(3, include_trivial=True)
    69

    Parameters
    ----------
    box_bound: int
        the box size M >= 0.
    include_trivial: bool, optional
        if True, the whole ring is counted. Default is False.

    Returns
    -------
    int
    """
    m = int(box_bound) + 1
    return int(comb(2 * m, m, exact=True)) - (1 if include_trivial else 2)


def enumerate_staircases(box_bound, include_trivial=False):
    """
    Yields every non-zero staircase ideal with generators in [0..M]^2, without duplicates and in a deterministic order:
    by the number of generators, then by their x-exponents and then by their y-exponents.

    Examples
    --------
    >>> list(enumerate_staircases(0, include_trivial=True))
    [MonomialIdeal(1)]
    >>> list(enumerate_staircases(1))
    [MonomialIdeal(y), MonomialIdeal(x), MonomialIdeal(x*y), MonomialIdeal(y, x)]

    Parameters
    ----------
    box_bound: int
        the box size M >= 0.
    include_trivial: bool, optional
        if True, the whole ring is enumerated too. Default is False.

    Returns
    -------
    generator[MonomialIdeal]
    """
    box_bound = int(box_bound)
    if box_bound < 0:
        raise PreconditionError("The box size must be non-negative, got %d." % box_bound)
    exponents = range(box_bound + 1)
    for k in range(1, box_bound + 2):
        for xs in combinations(exponents, k):
            for ys in combinations(exponents, k):
                if k == 1 and xs[0] == 0 and ys[0] == 0 and not include_trivial:
                    continue
                yield MonomialIdeal(zip(xs, reversed(ys)))


class StaircaseEnumeration(object):

    def __init__(self, box_bound, include_trivial=False, budget=None):
        """
        The staircase ideals of a box, as a re-iterable collection. A budget caps the number of ideals and warns when
        the enumeration is truncated.

        Examples
        --------
        >>> len(StaircaseEnumeration(3))
        68
        >>> len(list(StaircaseEnumeration(3, budget=10)))
        10

        Parameters
        ----------
        box_bound: int
            the box size M >= 0.
        include_trivial: bool, optional
            if True, the whole ring is part of the enumeration. Default is False.
        budget: int, optional
            the maximum number of ideals. Default is no limit.
        """
        self._box_bound = int(box_bound)
        if self._box_bound < 0:
            raise PreconditionError("The box size must be non-negative, got %d." % self._box_bound)
        self._include_trivial = bool(include_trivial)
        self._budget = None if budget is None else int(budget)

    def __iter__(self):
        stream = enumerate_staircases(self._box_bound, self._include_trivial)
        if self.is_truncated:
            warnings.warn("The budget of %d ideals truncates the %d staircases of the box %d." % (
                self._budget, self.full_count, self._box_bound), RuntimeWarning)
            stream = islice(stream, self._budget)
        return stream

    def __len__(self):
        return self.full_count if self._budget is None else min(self._budget, self.full_count)

    def __repr__(self):
        return "StaircaseEnumeration(M=%d, include_trivial=%s, budget=%s)" % (
            self._box_bound, self._include_trivial, self._budget)

    @property
    def box_bound(self):
        return self._box_bound

    @property
    def include_trivial(self):
        return self._include_trivial

    @property
    def budget(self):
        return self._budget

    @property
    def full_count(self):
        """
        The number of ideals without the budget.

        Returns
        -------
        int
        """
        return staircase_count(self._box_bound, self._include_trivial)

    @property
    def is_truncated(self):
        return self._budget is not None and self._budget < self.full_count
