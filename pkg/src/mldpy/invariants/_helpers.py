"""
Helpers for the mldpy.invariants package.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from mldpy.geometry._helpers import *


def first_true(lo, hi, predicate):
    """
    The smallest integer n in [lo, hi] with predicate(n), for a predicate that is monotone (False, ..., False, True,
    ..., True) on the range and True at hi.

    Examples
    --------
    >>> first_true(1, 10, lambda n: n * n >= 20)
    5

    Parameters
    ----------
    lo: int
    hi: int
    predicate: callable

    Returns
    -------
    int
    """
    while lo < hi:
        mid = (lo + hi) // 2
        if predicate(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo
