"""
Brute force oracles for the invariants: the log discrepancies and the threshold ratios are evaluated on every lattice
point of a box, with numpy integer arrays. The exponents are brought to a common denominator, so every value on the
box is an integer triplet (A, B, C) standing for (A + B*pi + C/pi) / L.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import PreconditionError
from .multiideal import WeightVector, LctResult
from mldpy.algebra.scalars import ExactScalar, Ordering, compare, ZERO
from mldpy.geometry.fan import Ray

from collections import namedtuple
from fractions import Fraction
from functools import reduce
from math import gcd

import numpy as np


OracleResult = namedtuple('OracleResult', ['value', 'divisor', 'negative'])
"""
The minimum of the log discrepancy over a box, its argmin and whether a negative value was found.
"""


def _lcm(a, b):
    return a * b // gcd(a, b)


def _box(lo, hi):
    grid = np.stack(np.meshgrid(np.arange(lo, hi + 1), np.arange(lo, hi + 1), indexing='ij'), axis=-1)
    return grid.reshape((-1, 2)).astype(np.int64)


def _scaled_valuations(multiideal, points):
    """
    The integer triplets of L * sum_i e_i <p, G_i> for every point, with L the common denominator.
    """
    denominators = [q.denominator for e in multiideal.exponents for q in e.components]
    scale = reduce(_lcm, denominators, 1)
    total = np.zeros((points.shape[0], 3), dtype=np.int64)
    for polygon, e in zip(multiideal.polygons, multiideal.exponents):
        vertices = np.array(polygon.vertices, dtype=np.int64).reshape((-1, 2))
        sv = np.min(points.dot(vertices.T), axis=1)
        coefficients = np.array([int(q * scale) for q in e.components], dtype=np.int64)
        total += sv[:, np.newaxis] * coefficients[np.newaxis, :]
    return scale, total


def _scalar(row, scale):
    return ExactScalar(Fraction(int(row[0]), scale), Fraction(int(row[1]), scale), Fraction(int(row[2]), scale))


def _first_in_order(points, mask):
    # the (p1 + p2, p1) order of the divisors
    candidates = points[mask]
    order = np.lexsort((candidates[:, 0], candidates.sum(axis=1)))
    return candidates[order[0]]


def brute_force_mld(multiideal, bound):
    """
    The minimum of the log discrepancy over the weights in the box {1, ..., B}^2 and its first argmin in the
    (p1 + p2, p1) order. A negative minimum means the minimal log discrepancy is minus infinity, which is flagged
    separately.

    Examples
    --------
    >>> from mldpy.invariants.multiideal import MultiIdeal
    >>> brute_force_mld(MultiIdeal.trivial(), 5)
    OracleResult(value=ExactScalar(a=2, b=0, c=0), divisor=WeightVector(p1=1, p2=1), negative=False)
    >>> brute_force_mld(MultiIdeal.single([(2, 0), (0, 3)]), 5).negative
    True
    >>> brute_force_mld(MultiIdeal.single([(1, 0), (0, 1)]), 8).divisor
    WeightVector(p1=1, p2=1)

    Parameters
    ----------
    multiideal: MultiIdeal
    bound: int
        the box size B >= 1.

    Returns
    -------
    OracleResult
    """
    bound = int(bound)
    if bound < 1:
        raise PreconditionError("The box size must be at least 1, got %d." % bound)
    points = _box(1, bound)
    scale, valuations = _scaled_valuations(multiideal, points)
    values = -valuations
    values[:, 0] += points.sum(axis=1) * scale

    if not np.any(values[:, 1:]):
        best = (int(np.min(values[:, 0])), 0, 0)
    else:
        best = None
        for row in np.unique(values, axis=0):
            if best is None or compare(_scalar(row, scale), _scalar(best, scale)) == Ordering.LESS:
                best = tuple(int(v) for v in row)
    mask = np.all(values == np.array(best, dtype=np.int64)[np.newaxis, :], axis=1)
    p = _first_in_order(points, mask)
    value = _scalar(best, scale)
    return OracleResult(value, WeightVector(int(p[0]), int(p[1])), compare(value, ZERO) == Ordering.LESS)


def brute_force_lct(multiideal, bound):
    """
    The minimum of the ratio (p1 + p2) / sum_i e_i <p, G_i> over the box [0..B]^2 without the origin; points with zero
    valuation are skipped. The computing ray is the ray through the first argmin in the (p1 + p2, p1) order.

    Examples
    --------
    >>> from mldpy.invariants.multiideal import MultiIdeal
    >>> brute_force_lct(MultiIdeal.single([(2, 0), (0, 3)]), 30)
    LctResult(value=5/6, ray=(3, 2), exceptional=True)
    >>> brute_force_lct(MultiIdeal.trivial(), 3)
    LctResult(unbounded)

    Parameters
    ----------
    multiideal: MultiIdeal
    bound: int
        the box size B >= 1.

    Returns
    -------
    LctResult
    """
    bound = int(bound)
    if bound < 1:
        raise PreconditionError("The box size must be at least 1, got %d." % bound)
    points = _box(0, bound)[1:]
    scale, valuations = _scaled_valuations(multiideal, points)
    weights = points.sum(axis=1)

    best = LctResult()
    seen = set()
    for i in np.lexsort((points[:, 0], weights)):
        row = tuple(int(v) for v in valuations[i])
        key = (int(weights[i]),) + row
        if row == (0, 0, 0) or key in seen:
            continue
        seen.add(key)
        candidate = LctResult(int(weights[i]), _scalar(row, scale), Ray.through(points[i]))
        if candidate.compare(best) == Ordering.LESS:
            best = candidate
    return best
