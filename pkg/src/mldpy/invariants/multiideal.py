"""
Multiideals, weight vectors and the results of the invariant computations. The values of a minimal log discrepancy
are exact scalars or minus infinity, and the log canonical thresholds are kept as exact ratios.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import PreconditionError, FieldMismatchError
from mldpy.algebra.scalars import ExactScalar, ExactQuotient, Rational, Ordering, compare, ZERO
from mldpy.algebra.polynomials import PolynomialIdeal, monomialize, apply
from mldpy.geometry.newton import MonomialIdeal, polygon_of, make_ideal, TRIVIAL_IDEAL
from mldpy.geometry.fan import Ray

from collections import namedtuple


class _MinusInfinity(object):
    """
    The value of the minimal log discrepancy of a pair that is not log canonical. It is smaller than every finite value.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(_MinusInfinity, cls).__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("minus_infinity")

    def __repr__(self):
        return "MinusInfinity"

    def __str__(self):
        return "-inf"

    def __reduce__(self):
        return _MinusInfinity, ()


MINUS_INFINITY = _MinusInfinity()
"""
The minimal log discrepancy of a pair that is not log canonical.
"""


def is_finite(value):
    """
    True if a minimal log discrepancy value is a finite scalar.

    Parameters
    ----------
    value: ExactScalar | MinusInfinity

    Returns
    -------
    bool
    """
    return value is not MINUS_INFINITY


def compare_values(x, y):
    """
    The order of two minimal log discrepancy values, where minus infinity is below every finite value.

    Examples
    --------
    >>> compare_values(MINUS_INFINITY, ExactScalar(-5)) == Ordering.LESS
    True
    >>> compare_values(MINUS_INFINITY, MINUS_INFINITY) == Ordering.EQUAL
    True

    Parameters
    ----------
    x: ExactScalar | MinusInfinity
    y: ExactScalar | MinusInfinity

    Returns
    -------
    Ordering
    """
    if x is MINUS_INFINITY or y is MINUS_INFINITY:
        return Ordering((x is not MINUS_INFINITY) - (y is not MINUS_INFINITY))
    return compare(x, y)


def value_to_dict(value):
    """
    The JSON form of a minimal log discrepancy value.

    Parameters
    ----------
    value: ExactScalar | MinusInfinity

    Returns
    -------
    dict
    """
    if value is MINUS_INFINITY:
        return {"kind": "minus_infinity"}
    return {"kind": "finite", "scalar": value.to_dict()}


class WeightVector(namedtuple('WeightVector', ['p1', 'p2'])):
    """
    The weights of the toric divisor E_p centred at the origin. The divisor is obtained by the weighted blow up with
    weights p and its coefficient in the relative canonical divisor is k = p1 + p2 - 1.

    Examples
    --------
    >>> WeightVector(3, 2).k
    4
    >>> WeightVector(0, 1)
    Traceback (most recent call last):
        ...
    mldpy.__helpers.PreconditionError: A weight vector needs both weights at least 1, got (0, 1).
    """
    __slots__ = ()

    def __new__(cls, p1, p2):
        p1, p2 = int(p1), int(p2)
        if p1 < 1 or p2 < 1:
            raise PreconditionError("A weight vector needs both weights at least 1, got (%d, %d)." % (p1, p2))
        return super(WeightVector, cls).__new__(cls, p1, p2)

    @property
    def k(self):
        """
        The discrepancy coefficient k_E = p1 + p2 - 1.

        Returns
        -------
        int
        """
        return self.p1 + self.p2 - 1

    def to_dict(self):
        return {"p": [self.p1, self.p2], "k": self.k}


def _as_exponent(e):
    e = ExactScalar.from_value(e)
    if compare(e, ZERO) != Ordering.GREATER:
        raise PreconditionError("Exponents must be positive, got %s." % e)
    return e


class MultiIdeal(object):

    def __init__(self, pairs):
        """
        A multiideal a_1^e_1 ... a_s^e_s of monomial ideals with positive exponents.

        Examples
        --------
        >>> M = MultiIdeal([(make_ideal([(2, 0), (0, 3)]), 1)])
        >>> M
        MultiIdeal(y^3, x^2 @ 1)
        >>> MultiIdeal([(make_ideal([(1, 0)]), 0)])
        Traceback (most recent call last):
            ...
        mldpy.__helpers.PreconditionError: Exponents must be positive, got 0.

        Parameters
        ----------
        pairs: list[tuple[MonomialIdeal, ExactScalar]]
            the ideals with their exponents.
        """
        pairs = [(ideal, _as_exponent(e)) for ideal, e in pairs]
        if not pairs:
            raise PreconditionError("A multiideal needs at least one ideal.")
        for ideal, _ in pairs:
            if not isinstance(ideal, MonomialIdeal):
                raise TypeError("The ideals of a MultiIdeal must be monomial, got %r." % (ideal,))
        self._pairs = tuple(pairs)
        self._polygons = tuple(polygon_of(ideal) for ideal, _ in self._pairs)

    @classmethod
    def single(cls, generators, exponent=1):
        """
        The multiideal of one monomial ideal, given by its generator exponents.

        Parameters
        ----------
        generators: list[tuple[int]]
        exponent: ExactScalar | int | Fraction, optional

        Returns
        -------
        MultiIdeal
        """
        return cls([(make_ideal(generators), exponent)])

    @classmethod
    def trivial(cls, exponents=(1,)):
        """
        The multiideal whose ideals are all the whole ring.

        Parameters
        ----------
        exponents: list[ExactScalar], optional

        Returns
        -------
        MultiIdeal
        """
        return cls([(TRIVIAL_IDEAL, e) for e in exponents])

    def scaled(self, t):
        """
        The multiideal with every exponent multiplied by t, i.e. (a^e)^t.

        Parameters
        ----------
        t: ExactScalar | int | Fraction

        Returns
        -------
        MultiIdeal
        """
        t = ExactScalar.from_value(t)
        return MultiIdeal([(ideal, e * t) for ideal, e in self._pairs])

    def __eq__(self, other):
        return isinstance(other, MultiIdeal) and self._pairs == other.pairs

    def __hash__(self):
        return hash(self._pairs)

    def __repr__(self):
        return "MultiIdeal(%s)" % self

    def __str__(self):
        from mldpy.io.text import format_multiideal
        return format_multiideal(self)

    def __len__(self):
        return len(self._pairs)

    def __iter__(self):
        return iter(self._pairs)

    @property
    def pairs(self):
        """
        The (ideal, exponent) pairs.

        Returns
        -------
        tuple[tuple[MonomialIdeal, ExactScalar]]
        """
        return self._pairs

    @property
    def ideals(self):
        return tuple(ideal for ideal, _ in self._pairs)

    @property
    def exponents(self):
        return tuple(e for _, e in self._pairs)

    @property
    def polygons(self):
        """
        The Newton polygons of the ideals, in the order of the pairs.

        Returns
        -------
        tuple[NewtonPolygon]
        """
        return self._polygons

    @property
    def is_trivial(self):
        return all(ideal.is_trivial for ideal, _ in self._pairs)


def pad_multiideal(multiideal, exponents):
    """
    Embeds a multiideal with exponents e' into the exponent sequence e that contains e' as a sub-multiset; the extra
    slots get the whole ring, which changes no log discrepancy.

    Examples
    --------
    >>> M = MultiIdeal.single([(3, 0), (0, 7)], ExactScalar("1/2"))
    >>> pad_multiideal(M, [1, ExactScalar("1/2")])
    MultiIdeal(1 @ 1 ; y^7, x^3 @ 1/2)

    Parameters
    ----------
    multiideal: MultiIdeal
    exponents: list[ExactScalar]
        the target exponent sequence.

    Returns
    -------
    MultiIdeal
    """
    exponents = [ExactScalar.from_value(e) for e in exponents]
    remaining = list(multiideal.pairs)
    pairs = []
    for e in exponents:
        for i, (ideal, f) in enumerate(remaining):
            if f == e:
                pairs.append((ideal, e))
                del remaining[i]
                break
        else:
            pairs.append((TRIVIAL_IDEAL, e))
    if remaining:
        raise PreconditionError("The exponents %s do not contain those of %s." % (
            ", ".join(str(e) for e in exponents), multiideal))
    return MultiIdeal(pairs)


class PolyMultiIdeal(object):

    def __init__(self, pairs):
        """
        A multiideal of polynomial ideals over one coefficient field, with positive exponents.

        Parameters
        ----------
        pairs: list[tuple[PolynomialIdeal, ExactScalar]]
        """
        pairs = [(ideal, _as_exponent(e)) for ideal, e in pairs]
        if not pairs:
            raise PreconditionError("A multiideal needs at least one ideal.")
        field = pairs[0][0].field
        for ideal, _ in pairs:
            if not isinstance(ideal, PolynomialIdeal):
                raise TypeError("The ideals of a PolyMultiIdeal must be polynomial, got %r." % (ideal,))
            if ideal.field != field:
                raise FieldMismatchError("All the ideals of a multiideal must be over %r." % (field,))
        self._pairs = tuple(pairs)
        self._field = field

    @classmethod
    def from_multiideal(cls, multiideal, field):
        """
        The polynomial multiideal with the monomial generators of a multiideal, over the given field.

        Parameters
        ----------
        multiideal: MultiIdeal
        field: CoefficientField

        Returns
        -------
        PolyMultiIdeal
        """
        return cls([(PolynomialIdeal.from_monomials(field, ideal.generators), e) for ideal, e in multiideal.pairs])

    def monomialized(self):
        """
        The monomial multiideal of the monomializations of the ideals.

        Returns
        -------
        MultiIdeal
        """
        return MultiIdeal([(monomialize(ideal), e) for ideal, e in self._pairs])

    def transformed(self, phi):
        """
        The image of the multiideal under a coordinate change.

        Parameters
        ----------
        phi: PlaneAutomorphism

        Returns
        -------
        PolyMultiIdeal
        """
        return PolyMultiIdeal([(apply(phi, ideal), e) for ideal, e in self._pairs])

    @property
    def is_monomial(self):
        """
        True if every generator is a single monomial.

        Returns
        -------
        bool
        """
        return all(len(g.terms()) == 1 for ideal, _ in self._pairs for g in ideal.generators)

    def __eq__(self, other):
        return isinstance(other, PolyMultiIdeal) and self._pairs == other.pairs

    def __hash__(self):
        return hash(self._pairs)

    def __repr__(self):
        return "PolyMultiIdeal(%s, char=%d)" % (self, self._field.characteristic)

    def __str__(self):
        from mldpy.io.text import format_multiideal
        return format_multiideal(self)

    @property
    def pairs(self):
        return self._pairs

    @property
    def field(self):
        return self._field


class MldResult(object):

    def __init__(self, value, computing_divisor, certificate=None, upper_bound=False, monomialized=False):
        """
        A minimal log discrepancy with a divisor that computes it and the data that certify the value.

        Parameters
        ----------
        value: ExactScalar | MinusInfinity
            the minimal log discrepancy.
        computing_divisor: WeightVector
            a toric divisor that computes the value; for minus infinity it has a negative log discrepancy.
        certificate: dict, optional
            the fan rays with their log discrepancies, the evaluated candidates or the negative ray.
        upper_bound: bool, optional
            if True, the value is only an upper bound of the minimal log discrepancy in the given coordinates.
        monomialized: bool, optional
            if True, the value was computed from the monomialization of polynomial ideals.
        """
        self._value = value
        self._divisor = computing_divisor
        self._certificate = dict(certificate) if certificate is not None else {}
        self._upper_bound = bool(upper_bound)
        self._monomialized = bool(monomialized)

    def as_upper_bound(self, monomialized=True):
        """
        A copy of the result that is flagged as an upper bound.

        Returns
        -------
        MldResult
        """
        return MldResult(self._value, self._divisor, self._certificate, upper_bound=True, monomialized=monomialized)

    def to_dict(self):
        """
        The JSON form of the result.

        Returns
        -------
        dict
        """
        out = {
            "value": value_to_dict(self._value),
            "divisor": self._divisor.to_dict(),
            "certificate": _certificate_to_dict(self._certificate)
        }
        if self._upper_bound:
            out["upper_bound"] = True
        if self._monomialized:
            out["monomialized"] = True
        return out

    def __repr__(self):
        return "MldResult(value=%s, divisor=(%d, %d), k=%d%s)" % (
            self._value, self._divisor.p1, self._divisor.p2, self.k, ", upper bound" if self._upper_bound else "")

    @property
    def value(self):
        return self._value

    @property
    def computing_divisor(self):
        return self._divisor

    @property
    def k(self):
        return self._divisor.k

    @property
    def certificate(self):
        return self._certificate

    @property
    def is_minus_infinity(self):
        return self._value is MINUS_INFINITY

    @property
    def upper_bound(self):
        return self._upper_bound

    @property
    def monomialized(self):
        return self._monomialized


def _certificate_to_dict(value):
    if isinstance(value, dict):
        return {str(k): _certificate_to_dict(v) for k, v in value.items()}
    if isinstance(value, (ExactScalar, _MinusInfinity)):
        return value_to_dict(value)
    if isinstance(value, tuple) and hasattr(value, "_fields"):
        return [int(v) for v in value]
    if isinstance(value, (list, tuple)):
        return [_certificate_to_dict(v) for v in value]
    return value


UNBOUNDED = "unbounded"
"""
The log canonical threshold of a multiideal with no divisor of positive valuation, e.g. the trivial one.
"""


class LctResult(object):

    def __init__(self, numerator=None, denominator=None, computing_ray=None):
        """
        A log canonical threshold as the exact ratio (r1 + r2) / sum_i e_i <r, G_i> at the ray that computes it.

        Examples
        --------
        >>> r = LctResult(5, ExactScalar(6), Ray(3, 2))
        >>> r.value, r.exceptional
        (ExactScalar(a=5/6, b=0, c=0), True)
        >>> LctResult().is_unbounded
        True

        Parameters
        ----------
        numerator: int, optional
            the log discrepancy coefficient k + 1 = r1 + r2 of the ray.
        denominator: ExactScalar, optional
            the weighted valuation of the multiideal along the ray. None for an unbounded threshold.
        computing_ray: Ray, optional
            the ray of the computing divisor; axis rays name the coordinate lines.
        """
        self._num = Rational(numerator) if numerator is not None else None
        self._den = ExactScalar.from_value(denominator) if denominator is not None else None
        self._ray = computing_ray

    def compare(self, other):
        """
        The order of two thresholds; unbounded ones are above every finite threshold.

        Parameters
        ----------
        other: LctResult

        Returns
        -------
        Ordering
        """
        if self.is_unbounded or other.is_unbounded:
            return Ordering(self.is_unbounded - other.is_unbounded)
        # both denominators are positive
        return compare(other.denominator.scale(self._num), self._den.scale(other.numerator))

    @property
    def value(self):
        """
        The threshold: an exact scalar when the denominator of the ratio has a single non-zero component, and the exact
        quotient otherwise, e.g. 2 / (1 + 2/pi) for (x, y) * (x, y)^(2/pi).

        Examples
        --------
        >>> print(LctResult(2, ExactScalar(1, 0, 2), Ray(1, 1)).value)
        2/(1 + 2/pi)
        >>> LctResult(2, ExactScalar(0, 0, 2), Ray(1, 1)).value
        ExactScalar(a=0, b=1, c=0)

        Returns
        -------
        ExactScalar | ExactQuotient | str
        """
        if self.is_unbounded:
            return UNBOUNDED
        if self.has_scalar_value:
            return self.quotient.as_scalar()
        return self.quotient

    @property
    def quotient(self):
        """
        The threshold as the exact quotient of the ratio, or None when it is unbounded.

        Returns
        -------
        ExactQuotient | None
        """
        return None if self.is_unbounded else ExactQuotient(self._num, self._den)

    @property
    def has_scalar_value(self):
        return self.is_unbounded or self.quotient.is_scalar

    @property
    def numerator(self):
        return self._num

    @property
    def denominator(self):
        return self._den

    @property
    def computing_ray(self):
        return self._ray

    @property
    def exceptional(self):
        """
        False when the computing divisor is a coordinate line, i.e. the ray is an axis.

        Returns
        -------
        bool
        """
        return self._ray is not None and not Ray(*self._ray).is_axis

    @property
    def is_unbounded(self):
        return self._den is None

    def to_dict(self):
        """
        The JSON form of the result.

        Returns
        -------
        dict
        """
        if self.is_unbounded:
            return {"value": {"kind": UNBOUNDED}, "ray": None, "exceptional": False}
        out = {"ratio": {"numerator": str(self._num), "denominator": self._den.to_dict()},
               "ray": [int(self._ray[0]), int(self._ray[1])],
               "exceptional": self.exceptional}
        if self.has_scalar_value:
            out["value"] = {"kind": "finite", "scalar": self.value.to_dict()}
        else:
            out["value"] = {"kind": "ratio"}
        return out

    def __repr__(self):
        if self.is_unbounded:
            return "LctResult(unbounded)"
        return "LctResult(value=%s, ray=(%d, %d), exceptional=%s)" % (self.value, self._ray[0], self._ray[1],
                                                                       self.exceptional)
