"""
Log discrepancies of the toric divisors and the minimal log discrepancy of monomial multiideals in the plane.

For a weight vector p the divisor E_p has log discrepancy

    a(E_p) = <p, 1> - sum_i e_i <p, G_i>,

where G_i is the Newton polygon of the i-th ideal. Toric divisors suffice for monomial multiideals, so the minimal log
discrepancy at the origin is the infimum of a over the weights p >= (1, 1). The function a is linear on every cone of
the refined fan of the polygons, which makes the infimum computable: it is minus infinity as soon as a ray has negative
log discrepancy and otherwise it is attained at (1, 1) or at a Hilbert basis element of a cone.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import first_true, PreconditionError
from .multiideal import MldResult, WeightVector, MINUS_INFINITY
from mldpy.algebra.scalars import ExactScalar, ExactQuotient, Ordering, compare, minimum, ZERO
from mldpy.geometry.newton import polygon_of, as_direction
from mldpy.geometry.fan import refined_fan, hilbert_basis

from itertools import count

import logging

logger = logging.getLogger(__name__)


def log_discrepancy(p, multiideal):
    """
    The log discrepancy a(E_p) = p1 + p2 - sum_i e_i <p, G_i>. Any non-zero vector of the closed quadrant is accepted,
    so the function can be evaluated on the rays of a fan; only p >= (1, 1) names a divisor centred at the origin.

    Examples
    --------
    >>> from mldpy.invariants.multiideal import MultiIdeal
    >>> log_discrepancy((3, 2), MultiIdeal.single([(2, 0), (0, 3)]))
    ExactScalar(a=-1, b=0, c=0)
    >>> log_discrepancy((1, 1), MultiIdeal.trivial([ExactScalar(0, 0, 2)]))
    ExactScalar(a=2, b=0, c=0)
    >>> log_discrepancy((1, 1), MultiIdeal.single([(1, 0)], 3))
    ExactScalar(a=-1, b=0, c=0)

    Parameters
    ----------
    p: tuple[int]
        a non-zero vector of the closed first quadrant.
    multiideal: MultiIdeal

    Returns
    -------
    ExactScalar
    """
    p = as_direction(p)
    value = ExactScalar(int(p[0]) + int(p[1]))
    for polygon, e in zip(multiideal.polygons, multiideal.exponents):
        sv = polygon.support_value(p)
        if sv:
            value = value - e.scale(sv)
    return value


def weighted_valuation(p, multiideal):
    """
    The weighted valuation sum_i e_i <p, G_i> of the multiideal along a direction.

    Parameters
    ----------
    p: tuple[int]
    multiideal: MultiIdeal

    Returns
    -------
    ExactScalar
    """
    total = ZERO
    for polygon, e in zip(multiideal.polygons, multiideal.exponents):
        sv = polygon.support_value(p)
        if sv:
            total = total + e.scale(sv)
    return total


def valuation(p, ideal):
    """
    The value of the monomial valuation with weights p on a monomial ideal, i.e. the support value of its polygon.

    Examples
    --------
    >>> from mldpy.geometry.newton import make_ideal, TRIVIAL_IDEAL
    >>> valuation((1, 1), make_ideal([(2, 0), (0, 3)]))
    2
    >>> valuation((7, 3), make_ideal([(3, 0), (0, 7)]))
    21
    >>> valuation((4, 9), TRIVIAL_IDEAL)
    0

    Parameters
    ----------
    p: tuple[int]
        a weight vector, p >= (1, 1).
    ideal: MonomialIdeal

    Returns
    -------
    int
    """
    p = WeightVector(*p)
    return polygon_of(ideal).support_value(p)


def _diagonal_points(s, rays):
    """
    The first weights p1 on the diagonal p1 + p2 = s where the restriction of a can attain its minimum: the end
    points and the integer neighbours of the crossings with the fan rays.
    """
    points = {1, s - 1}
    for r1, r2 in rays:
        q, rem = divmod(s * r1, r1 + r2)
        for p1 in (q, q + 1 if rem else q):
            points.add(min(max(p1, 1), s - 1))
    return sorted(points)


def _diagonal_minimum(s, multiideal, rays):
    # a is convex along every diagonal, since every support value is concave and the exponents are positive
    best, best_value = None, None
    for p1 in _diagonal_points(s, rays):
        value = log_discrepancy((p1, s - p1), multiideal)
        if best_value is None or compare(value, best_value) == Ordering.LESS:
            best, best_value = p1, value
    return best, best_value


def _fan_values(multiideal):
    fan = refined_fan(multiideal.polygons)
    return fan, [(r, log_discrepancy(r, multiideal)) for r in fan.rays]


def _candidates(fan):
    """
    The weight (1, 1) and the Hilbert basis elements >= (1, 1) of the cones, by k and then by p1.
    """
    candidates = {(1, 1)}
    for u, v in fan.cones:
        candidates |= set(h for h in hilbert_basis(u, v) if h[0] >= 1 and h[1] >= 1)
    return sorted(candidates, key=lambda h: (h[0] + h[1], h[0]))


def minus_infinity_witness(multiideal):
    """
    The divisor E_p with negative log discrepancy that minimises k = p1 + p2 - 1, ties broken by the smaller p1. The
    diagonals p1 + p2 = s are scanned upwards; on each of them a is convex, so its minimum is found among the crossings
    with the fan rays and the first negative weight by bisection. A ray with negative log discrepancy guarantees that
    the scan stops.

    Examples
    --------
    >>> from mldpy.invariants.multiideal import MultiIdeal
    >>> minus_infinity_witness(MultiIdeal.single([(2, 0), (0, 3)]))
    WeightVector(p1=3, p2=2)
    >>> minus_infinity_witness(MultiIdeal.single([(1, 0)], ExactScalar("3/2")))
    WeightVector(p1=3, p2=1)
    >>> minus_infinity_witness(MultiIdeal.single([(1, 0)], 3))
    WeightVector(p1=1, p2=1)
    >>> minus_infinity_witness(MultiIdeal.single([(1, 0)], 1))
    Traceback (most recent call last):
        ...
    mldpy.__helpers.PreconditionError: The multiideal x @ 1 is log canonical; it has no negative divisor.

    Parameters
    ----------
    multiideal: MultiIdeal
        a multiideal that is not log canonical.

    Returns
    -------
    WeightVector
    """
    fan, values = _fan_values(multiideal)
    if all(compare(a, ZERO) != Ordering.LESS for _, a in values):
        raise PreconditionError("The multiideal %s is log canonical; it has no negative divisor." % multiideal)
    return _first_on_diagonals(multiideal, fan.rays, lambda a: compare(a, ZERO) == Ordering.LESS)


def _first_on_diagonals(multiideal, rays, accept, max_sum=None):
    """
    The first weight vector in the (p1 + p2, p1) order whose log discrepancy is accepted, for an acceptance set that is
    a down-set of values.
    """
    for s in count(2):
        if max_sum is not None and s > max_sum:
            return None
        p_min, a_min = _diagonal_minimum(s, multiideal, rays)
        if accept(a_min):
            p1 = first_true(1, p_min, lambda n: accept(log_discrepancy((n, s - n), multiideal)))
            logger.debug("diagonal %d holds the first accepted weight (%d, %d)", s, p1, s - p1)
            return WeightVector(p1, s - p1)


def mld(multiideal):
    """
    The minimal log discrepancy at the origin of a monomial multiideal, with a computing toric divisor and its
    certificate.

    Every ray of the refined fan is evaluated first. If one of them has negative log discrepancy, the value is minus
    infinity and the divisor is the minus-infinity witness. Otherwise a is non-negative on the whole quadrant and, as it
    is linear on every cone, each weight p >= (1, 1) is dominated by (1, 1) or by an element of the Hilbert basis of its
    cone that is >= (1, 1); the minimum over these candidates is the value. Ties prefer the smaller k and then the
    smaller p1.

    Examples
    --------
    >>> from mldpy.invariants.multiideal import MultiIdeal
    >>> mld(MultiIdeal.single([(2, 0), (0, 3)]))
    MldResult(value=-inf, divisor=(3, 2), k=4)
    >>> mld(MultiIdeal.single([(3, 0), (0, 7)], ExactScalar("1/2")))
    MldResult(value=-inf, divisor=(7, 3), k=9)
    >>> mld(MultiIdeal.trivial())
    MldResult(value=2, divisor=(1, 1), k=1)
    >>> mld(MultiIdeal.single([(1, 0)]))
    MldResult(value=1, divisor=(1, 1), k=1)

    Parameters
    ----------
    multiideal: MultiIdeal

    Returns
    -------
    MldResult
    """
    fan, values = _fan_values(multiideal)
    certificate = {"rays": [{"p": r, "a": a} for r, a in values]}
    negative = [r for r, a in values if compare(a, ZERO) == Ordering.LESS]
    if negative:
        witness = minus_infinity_witness(multiideal)
        certificate["negative_ray"] = negative[0]
        certificate["witness"] = {"p": witness, "a": log_discrepancy(witness, multiideal)}
        return MldResult(MINUS_INFINITY, witness, certificate)

    evaluated = [(h, log_discrepancy(h, multiideal)) for h in _candidates(fan)]
    best, value = minimum(evaluated, key=lambda pair: pair[1])
    certificate["candidates"] = [{"p": h, "a": a} for h, a in evaluated]
    return MldResult(value, WeightVector(*best), certificate)


def min_k_computing_divisor(multiideal):
    """
    The toric divisor with the smallest k = p1 + p2 - 1 (then the smallest p1) that computes the minimal log
    discrepancy. For a finite value the diagonals are scanned up to the weight of the divisor found by mld; for minus
    infinity this is the minus-infinity witness.

    Examples
    --------
    >>> from mldpy.invariants.multiideal import MultiIdeal
    >>> min_k_computing_divisor(MultiIdeal.trivial())
    WeightVector(p1=1, p2=1)
    >>> min_k_computing_divisor(MultiIdeal.single([(2, 0), (0, 3)]))
    WeightVector(p1=3, p2=2)
    >>> min_k_computing_divisor(MultiIdeal.single([(1, 0), (0, 1)]))
    WeightVector(p1=1, p2=1)

    Parameters
    ----------
    multiideal: MultiIdeal

    Returns
    -------
    WeightVector
    """
    return min_k_of(multiideal, mld(multiideal))


def min_k_of(multiideal, result):
    """
    The minimal-k computing divisor, reusing an already computed MldResult of the multiideal.

    Parameters
    ----------
    multiideal: MultiIdeal
    result: MldResult

    Returns
    -------
    WeightVector
    """
    if result.is_minus_infinity:
        return result.computing_divisor
    rays = refined_fan(multiideal.polygons).rays
    v = result.value
    found = _first_on_diagonals(multiideal, rays, lambda a: compare(a, v) != Ordering.GREATER,
                                max_sum=result.computing_divisor.p1 + result.computing_divisor.p2)
    return found if found is not None else result.computing_divisor


def sign_at(p, multiideal, t):
    """
    The sign of the log discrepancy of E_p once every exponent is multiplied by the quotient t = q / d, i.e. the order
    of d * (p1 + p2) against q * sum_i e_i <p, G_i>. Scaled exponents may leave Q + Q*pi + Q/pi, their signs never do.

    Examples
    --------
    >>> from mldpy.invariants.multiideal import MultiIdeal
    >>> from mldpy.geometry.newton import make_ideal
    >>> m = make_ideal([(1, 0), (0, 1)])
    >>> M = MultiIdeal([(m, 1), (m, ExactScalar(0, 0, 2))])
    >>> t = ExactQuotient(2, ExactScalar(1, 0, 2))
    >>> sign_at((1, 1), M, t) == Ordering.EQUAL, sign_at((2, 1), M, t) == Ordering.GREATER
    (True, True)

    Parameters
    ----------
    p: tuple[int]
    multiideal: MultiIdeal
    t: ExactQuotient

    Returns
    -------
    Ordering
    """
    p = as_direction(p)
    return compare(t.denominator.scale(int(p[0]) + int(p[1])), weighted_valuation(p, multiideal).scale(t.numerator))


def mld_sign_at(multiideal, t):
    """
    The sign of the minimal log discrepancy of the multiideal with its exponents multiplied by the quotient t: minus
    infinity when the pair is not log canonical and otherwise the order of the value against zero. The divisors are
    those that mld evaluates.

    Examples
    --------
    >>> from mldpy.invariants.multiideal import MultiIdeal
    >>> from mldpy.geometry.newton import make_ideal
    >>> m = make_ideal([(1, 0), (0, 1)])
    >>> M = MultiIdeal([(m, 1), (m, ExactScalar(0, 0, 2))])
    >>> t = ExactQuotient(2, ExactScalar(1, 0, 2))
    >>> mld_sign_at(M, t) == Ordering.EQUAL
    True
    >>> mld_sign_at(M, t.scale(2))
    MinusInfinity
    >>> from fractions import Fraction
    >>> mld_sign_at(M, t.scale(Fraction(1, 2))) == Ordering.GREATER
    True

    Parameters
    ----------
    multiideal: MultiIdeal
    t: ExactQuotient

    Returns
    -------
    Ordering | MinusInfinity
    """
    fan = refined_fan(multiideal.polygons)
    if any(sign_at(r, multiideal, t) == Ordering.LESS for r in fan.rays):
        return MINUS_INFINITY
    signs = [sign_at(h, multiideal, t) for h in _candidates(fan)]
    return min(signs)
