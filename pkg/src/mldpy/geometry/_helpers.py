"""
Helpers for the mldpy.geometry package.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from mldpy.algebra._helpers import *

from functools import cmp_to_key


def by_slope(u, v):
    """
    Comparison of two directions of the closed first quadrant by their slope.

    Examples
    --------
    >>> sorted([(0, 1), (3, 2), (1, 0)], key=cmp_to_key(by_slope))
    [(1, 0), (3, 2), (0, 1)]

    Parameters
    ----------
    u: tuple[int]
    v: tuple[int]

    Returns
    -------
    int
        negative if u comes first, positive if v comes first and 0 if they are parallel.
    """
    return -det2(u, v)


slope_key = cmp_to_key(by_slope)
"""
Sorting key that orders directions by increasing slope.
"""
