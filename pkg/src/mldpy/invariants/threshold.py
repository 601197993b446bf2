"""
The log canonical threshold of monomial multiideals, including the coordinate lines as computing divisors.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import PreconditionError
from .multiideal import LctResult, MINUS_INFINITY
from .discrepancy import mld_sign_at, weighted_valuation
from mldpy.algebra.scalars import Ordering
from mldpy.geometry.fan import refined_fan

from fractions import Fraction

import logging

logger = logging.getLogger(__name__)

CONSISTENCY_STEPS = 5
"""
The thresholds t * (1 + 1/k), k = 1, ..., CONSISTENCY_STEPS, above the log canonical threshold that are checked for
minus infinity.
"""


def lct(multiideal):
    """
    The log canonical threshold, the minimum over the rays r of the refined fan of (r1 + r2) / sum_i e_i <r, G_i>.
    Rays with zero valuation are skipped and a multiideal without any other ray has an unbounded threshold. The ratio is
    a fractional-linear function along every cone, so its minimum over a cone is attained at a ray. The axes name the
    coordinate lines, which are not exceptional; among equal ratios an exceptional ray is preferred.

    Examples
    --------
    >>> from mldpy.invariants.multiideal import MultiIdeal
    >>> lct(MultiIdeal.single([(1, 0)]))
    LctResult(value=1, ray=(1, 0), exceptional=False)
    >>> lct(MultiIdeal.single([(2, 0), (0, 3)]))
    LctResult(value=5/6, ray=(3, 2), exceptional=True)
    >>> lct(MultiIdeal.trivial())
    LctResult(unbounded)

    Parameters
    ----------
    multiideal: MultiIdeal

    Returns
    -------
    LctResult
    """
    best = LctResult()
    for r in refined_fan(multiideal.polygons).rays:
        d = weighted_valuation(r, multiideal)
        if d.is_zero:
            continue
        candidate = LctResult(r[0] + r[1], d, r)
        order = candidate.compare(best)
        if order == Ordering.LESS or (order == Ordering.EQUAL and candidate.exceptional and not best.exceptional):
            best = candidate
    return best


def lct_mld_consistency(multiideal):
    """
    Checks the threshold against the minimal log discrepancy. At t = lct the pair (A, (a^e)^t) is log canonical: its
    minimal log discrepancy is 0 when an exceptional divisor computes the threshold and non-negative when only a
    coordinate line does. Above the threshold, at t * (1 + 1/k) for k = 1, ..., 5, the pair is not log canonical.
    The threshold is kept as an exact quotient, so only the signs of the scaled log discrepancies are evaluated.

    Examples
    --------
    >>> from mldpy.invariants.multiideal import MultiIdeal
    >>> from mldpy.algebra.scalars import ExactScalar
    >>> from mldpy.geometry.newton import make_ideal
    >>> lct_mld_consistency(MultiIdeal.single([(2, 0), (0, 3)]))
    True
    >>> lct_mld_consistency(MultiIdeal.single([(1, 0)]))
    True
    >>> m = make_ideal([(1, 0), (0, 1)])
    >>> lct_mld_consistency(MultiIdeal([(m, 1), (m, ExactScalar(0, 0, 2))]))
    True
    >>> lct_mld_consistency(MultiIdeal.trivial())
    Traceback (most recent call last):
        ...
    mldpy.__helpers.PreconditionError: The log canonical threshold of 1 @ 1 is not finite and positive.

    Parameters
    ----------
    multiideal: MultiIdeal
        a multiideal with finite and positive log canonical threshold.

    Returns
    -------
    bool
    """
    threshold = lct(multiideal)
    if threshold.is_unbounded:
        raise PreconditionError("The log canonical threshold of %s is not finite and positive." % multiideal)
    t = threshold.quotient
    at_t = mld_sign_at(multiideal, t)
    if at_t is MINUS_INFINITY:
        logger.debug("%s is not log canonical at its threshold %s", multiideal, t)
        return False
    if at_t == Ordering.LESS or (threshold.exceptional and at_t != Ordering.EQUAL):
        logger.debug("%s has mld of sign %s at its threshold %s", multiideal, at_t.name, t)
        return False
    for k in range(1, CONSISTENCY_STEPS + 1):
        above = t.scale(Fraction(k + 1, k))
        if mld_sign_at(multiideal, above) is not MINUS_INFINITY:
            logger.debug("%s is log canonical above its threshold, at %s", multiideal, above)
            return False
    return True
