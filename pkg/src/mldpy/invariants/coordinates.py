"""
Upper bounds of the minimal log discrepancy of polynomial multiideals. Monomializing the ideals can only lower the
valuations that matter, so the minimal log discrepancy of the monomialization bounds the true one from above, and a
search over coordinate changes tightens the bound.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import PreconditionError
from .multiideal import compare_values
from .discrepancy import mld
from mldpy.algebra.scalars import Ordering
from mldpy.algebra.polynomials import PlaneAutomorphism, elementary_automorphisms

from joblib import Parallel, delayed

import logging

logger = logging.getLogger(__name__)


def monomialized_upper_bound(poly_multiideal):
    """
    The minimal log discrepancy of the monomialization of a polynomial multiideal, flagged as an upper bound of the
    minimal log discrepancy in the given coordinates.

    Examples
    --------
    >>> from mldpy.io.text import parse_multiideal
    >>> monomialized_upper_bound(parse_multiideal("x^2 + y^3 @ 1"))
    MldResult(value=-inf, divisor=(3, 2), k=4, upper bound)
    >>> monomialized_upper_bound(parse_multiideal("y + x^2 @ 1"))
    MldResult(value=1, divisor=(1, 1), k=1, upper bound)

    Parameters
    ----------
    poly_multiideal: PolyMultiIdeal

    Returns
    -------
    MldResult
    """
    return mld(poly_multiideal.monomialized()).as_upper_bound(monomialized=not poly_multiideal.is_monomial)


def _bound_after(poly_multiideal, phi):
    return monomialized_upper_bound(poly_multiideal.transformed(phi))


def coordinate_search(poly_multiideal, degree_bound=1, pool=(0, 1, -1), max_steps=1, n_jobs=1):
    """
    Searches the coordinate changes composed of at most max_steps elementary automorphisms, breadth first and in a
    deterministic order, for the smallest monomialized upper bound. Minus infinity is below every finite value and the
    first automorphism that attains the minimum wins, so the identity is kept unless a change strictly improves it.

    Examples
    --------
    >>> from mldpy.io.text import parse_multiideal
    >>> result, phi = coordinate_search(parse_multiideal("y + x^2 @ 1"), degree_bound=2, pool=[0, 1, -1])
    >>> result
    MldResult(value=1, divisor=(1, 1), k=1, upper bound)
    >>> phi
    PlaneAutomorphism(identity)

    Straightening the parabola with y -> y - x^2 reaches the same bound, so the identity stays:

    >>> from mldpy.algebra.polynomials import CoefficientField, ShearY
    >>> F = CoefficientField(0)
    >>> straightened = parse_multiideal("y + x^2 @ 1").transformed(PlaneAutomorphism([ShearY([0, -1], F)], F))
    >>> print(straightened)
    y @ 1
    >>> after = monomialized_upper_bound(straightened)
    >>> after.value, tuple(after.computing_divisor)
    (ExactScalar(a=1, b=0, c=0), (1, 1))

    Parameters
    ----------
    poly_multiideal: PolyMultiIdeal
    degree_bound: int, optional
        the maximum degree of the shears. Default is 1.
    pool: list[int | Fraction], optional
        the coefficients of the elementary automorphisms. Default is {0, 1, -1}.
    max_steps: int, optional
        the maximum number of elementary steps. Default is 1.
    n_jobs: int, optional
        the number of parallel workers evaluating each breadth-first level. Default is 1.

    Returns
    -------
    result: MldResult
        the smallest upper bound found.
    phi: PlaneAutomorphism
        the coordinate change that attains it.
    """
    max_steps = int(max_steps)
    if max_steps < 0:
        raise PreconditionError("The number of steps must be non-negative, got %d." % max_steps)
    field = poly_multiideal.field
    identity = PlaneAutomorphism((), field)
    best, best_phi = monomialized_upper_bound(poly_multiideal), identity
    if max_steps == 0:
        return best, best_phi

    steps = [phi.steps[0] for phi in elementary_automorphisms(field, degree_bound, pool) if not phi.is_identity]
    level = [identity]
    for depth in range(1, max_steps + 1):
        level = [phi.then(step) for phi in level for step in steps]
        if n_jobs == 1:
            results = [_bound_after(poly_multiideal, phi) for phi in level]
        else:
            results = Parallel(n_jobs=n_jobs)(delayed(_bound_after)(poly_multiideal, phi) for phi in level)
        for phi, result in zip(level, results):
            if compare_values(result.value, best.value) == Ordering.LESS:
                best, best_phi = result, phi
        logger.debug("coordinate search depth %d: %d automorphisms, best bound %s", depth, len(level), best.value)
    return best, best_phi
