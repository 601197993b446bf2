"""
Exact arithmetic for the exponents and the values of the invariants. Rationals are python fractions; the exponents
that involve the circular constant live in the field extension Q + Q*pi + Q/pi, whose order is decidable because pi is
transcendental. Comparisons refine a certified enclosure of pi until the sign of a difference is clear.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import PreconditionError

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from enum import IntEnum

import numpy as np

Rational = Fraction
"""
Arbitrary precision rationals in reduced form with a positive denominator.
"""

PI_START_DIGITS = 8
"""
The number of digits of pi used by the first attempt of a comparison.
"""
PI_MAX_DOUBLINGS = 10
"""
How many times the digits are doubled before a comparison is declared undecidable (an internal error).
"""


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class ScalarComparisonError(ArithmeticError):
    """
    The sign of a non-rational scalar could not be separated from zero within the iteration cap. Since pi is
    transcendental this signals a bug, never an equality.
    """
    pass


def as_rational(value):
    """
    Converts integers, fractions and their text forms into a Rational. Floating point values are rejected, because
    they are not exact.

    Examples
    --------
    >>> as_rational(3)
    Fraction(3, 1)
    >>> as_rational("5/6")
    Fraction(5, 6)

    Parameters
    ----------
    value: int | Fraction | str

    Returns
    -------
    Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float, np.floating)):
        raise PreconditionError("Value %r is not exact; use integers or fractions." % (value,))
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise PreconditionError("Cannot interpret %r as a rational number." % (value,))


def _arctan_inverse_bounds(m, tolerance):
    """
    Certified bounds of arctan(1/m) for an integer m >= 2.

    The series arctan(1/m) = sum_k (-1)^k / ((2k + 1) m^(2k + 1)) is alternating and its terms t_k decrease strictly
    to zero. For such a series the limit L lies strictly between consecutive partial sums: if the last term added was
    t_n then S_n - t_{n+1} < L < S_n for even n and S_n < L < S_n + t_{n+1} for odd n, because the tail
    t_{n+1} - t_{n+2} + t_{n+3} - ... is a series of the same kind, strictly between 0 and t_{n+1}. Summation stops
    once t_{n+1} <= tolerance, so the returned interval is open around L and its width is at most tolerance.
    """
    m = int(m)
    k = 0
    partial = Fraction(0)
    while True:
        term = Fraction(1, (2 * k + 1) * m ** (2 * k + 1))
        partial += term if k % 2 == 0 else -term
        nxt = Fraction(1, (2 * k + 3) * m ** (2 * k + 3))
        if nxt <= tolerance:
            if k % 2 == 0:
                return partial - nxt, partial
            return partial, partial + nxt
        k += 1


@lru_cache(maxsize=32)
def pi_interval(digits):
    """
    An interval (lo, hi) of rationals with lo < pi < hi and hi - lo <= 10^(-digits).

    Machin's formula pi = 16 arctan(1/5) - 4 arctan(1/239) is evaluated with both arctangents enclosed by
    `_arctan_inverse_bounds`. With A in (A_lo, A_hi) and B in (B_lo, B_hi) we get
    16 A_lo - 4 B_hi < pi < 16 A_hi - 4 B_lo, an open interval of width 16 w_A + 4 w_B. Choosing
    w_A <= 10^(-digits) / 32 and w_B <= 10^(-digits) / 8 bounds the width by 10^(-digits) / 2 + 10^(-digits) / 2.

    Examples
    --------
    >>> lo, hi = pi_interval(2)
    >>> Fraction(314, 100) <= lo < hi <= Fraction(315, 100)
    True
    >>> hi - lo <= Fraction(1, 100)
    True

    Parameters
    ----------
    digits: int
        the number of certified decimal digits, at least 1.

    Returns
    -------
    lo: Fraction
    hi: Fraction
    """
    digits = int(digits)
    if digits < 1:
        raise PreconditionError("pi_interval needs at least one digit, got %d." % digits)
    tolerance = Fraction(1, 10 ** digits)
    a_lo, a_hi = _arctan_inverse_bounds(5, tolerance / 32)
    b_lo, b_hi = _arctan_inverse_bounds(239, tolerance / 8)
    return 16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo


class ExactScalar(object):

    def __init__(self, a=0, b=0, c=0):
        """
        A number of the form a + b * pi + c / pi with rational a, b and c. The representation is canonical, so
        equality is componentwise.

        Examples
        --------
        >>> ExactScalar(1) + ExactScalar(0, 0, 2)
        ExactScalar(a=1, b=0, c=2)
        >>> print(ExactScalar("1/2", 0, 2))
        1/2 + 2/pi

        Parameters
        ----------
        a: int | Fraction | str, optional
            the rational part.
        b: int | Fraction | str, optional
            the coefficient of pi.
        c: int | Fraction | str, optional
            the coefficient of 1 / pi.
        """
        self._a = as_rational(a)
        self._b = as_rational(b)
        self._c = as_rational(c)

    @classmethod
    def from_value(cls, value):
        """
        Wraps rationals into scalars and leaves scalars untouched.

        Parameters
        ----------
        value: ExactScalar | int | Fraction | str

        Returns
        -------
        ExactScalar
        """
        if isinstance(value, ExactScalar):
            return value
        return cls(value)

    def __add__(self, other):
        other = ExactScalar.from_value(other)
        return ExactScalar(self._a + other.a, self._b + other.b, self._c + other.c)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self._a, -self._b, -self._c)

    def __sub__(self, other):
        return self + (-ExactScalar.from_value(other))

    def __rsub__(self, other):
        return ExactScalar.from_value(other) - self

    def scale(self, q):
        """
        The componentwise product with a rational.

        Examples
        --------
        >>> ExactScalar(0, 0, 2).scale(12)
        ExactScalar(a=0, b=0, c=24)
        >>> ExactScalar(1).scale(Fraction(5, 6))
        ExactScalar(a=5/6, b=0, c=0)

        Parameters
        ----------
        q: int | Fraction

        Returns
        -------
        ExactScalar
        """
        q = as_rational(q)
        return ExactScalar(self._a * q, self._b * q, self._c * q)

    def __mul__(self, other):
        """
        Products stay in Q + Q*pi + Q/pi unless both factors carry pi (or both carry 1/pi).

        Examples
        --------
        >>> ExactScalar(0, 0, 2) * ExactScalar(0, Fraction(1, 4))
        ExactScalar(a=1/2, b=0, c=0)
        """
        if not isinstance(other, ExactScalar):
            return self.scale(other)
        if self._b * other.b != 0 or self._c * other.c != 0:
            raise PreconditionError("The product of %s and %s involves pi^2 or 1/pi^2." % (self, other))
        return ExactScalar(self._a * other.a + self._b * other.c + self._c * other.b,
                           self._a * other.b + self._b * other.a,
                           self._a * other.c + self._c * other.a)

    __rmul__ = __mul__

    def reciprocal(self):
        """
        The multiplicative inverse, which stays in Q + Q*pi + Q/pi only for scalars with a single non-zero component.

        Examples
        --------
        >>> ExactScalar(0, 0, 2).reciprocal()
        ExactScalar(a=0, b=1/2, c=0)

        Returns
        -------
        ExactScalar
        """
        nonzero = [q != 0 for q in self.components]
        if sum(nonzero) != 1:
            raise PreconditionError("The reciprocal of %s is not of the form a + b*pi + c/pi." % self)
        if self._a != 0:
            return ExactScalar(1 / self._a)
        if self._b != 0:
            return ExactScalar(0, 0, 1 / self._b)
        return ExactScalar(0, 1 / self._c, 0)

    def interval(self, digits):
        """
        A rational enclosure of the value, using pi_interval(digits).

        Parameters
        ----------
        digits: int

        Returns
        -------
        lo: Fraction
        hi: Fraction
        """
        if self.is_rational:
            return self._a, self._a
        p_lo, p_hi = pi_interval(digits)
        lo = hi = self._a
        if self._b > 0:
            lo, hi = lo + self._b * p_lo, hi + self._b * p_hi
        elif self._b < 0:
            lo, hi = lo + self._b * p_hi, hi + self._b * p_lo
        if self._c > 0:
            lo, hi = lo + self._c / p_hi, hi + self._c / p_lo
        elif self._c < 0:
            lo, hi = lo + self._c / p_lo, hi + self._c / p_hi
        return lo, hi

    def sign(self):
        """
        The exact sign of the scalar.

        Returns
        -------
        Ordering
        """
        return compare(self, ZERO)

    def __eq__(self, other):
        if isinstance(other, (int, np.integer, Fraction)):
            other = ExactScalar(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        if self.is_rational:
            return hash(self._a)
        return hash(self.components)

    def _order(self, other):
        if not isinstance(other, (ExactScalar, int, np.integer, Fraction)):
            return NotImplemented
        return compare(self, other)

    def __lt__(self, other):
        o = self._order(other)
        return o if o is NotImplemented else o == Ordering.LESS

    def __le__(self, other):
        o = self._order(other)
        return o if o is NotImplemented else o != Ordering.GREATER

    def __gt__(self, other):
        o = self._order(other)
        return o if o is NotImplemented else o == Ordering.GREATER

    def __ge__(self, other):
        o = self._order(other)
        return o if o is NotImplemented else o != Ordering.LESS

    def __repr__(self):
        return "ExactScalar(a=%s, b=%s, c=%s)" % (self._a, self._b, self._c)

    def __str__(self):
        parts = []
        if self._a != 0:
            parts.append((self._a < 0, str(abs(self._a))))
        if self._b != 0:
            parts.append((self._b < 0, "pi" if abs(self._b) == 1 else "%s*pi" % abs(self._b)))
        if self._c != 0:
            parts.append((self._c < 0, "%s/pi" % abs(self._c)))
        if not parts:
            return "0"
        negative, text = parts[0]
        out = ("-" if negative else "") + text
        for negative, text in parts[1:]:
            out += (" - " if negative else " + ") + text
        return out

    def to_dict(self):
        """
        The JSON form of the scalar: its three components as fraction strings.

        Returns
        -------
        dict
        """
        return {"a": str(self._a), "b": str(self._b), "c": str(self._c)}

    @property
    def a(self):
        """
        The rational part.

        Returns
        -------
        Fraction
        """
        return self._a

    @property
    def b(self):
        """
        The coefficient of pi.

        Returns
        -------
        Fraction
        """
        return self._b

    @property
    def c(self):
        """
        The coefficient of 1 / pi.

        Returns
        -------
        Fraction
        """
        return self._c

    @property
    def components(self):
        """
        The triplet (a, b, c).

        Returns
        -------
        tuple[Fraction]
        """
        return self._a, self._b, self._c

    @property
    def is_rational(self):
        """
        True if the scalar has no pi components.

        Returns
        -------
        bool
        """
        return self._b == 0 and self._c == 0

    @property
    def is_zero(self):
        """
        True for the zero scalar.

        Returns
        -------
        bool
        """
        return self._a == 0 and self.is_rational


ZERO = ExactScalar(0)
"""
The zero scalar.
"""


def add(x, y):
    """
    The exact sum of two scalars.

    Examples
    --------
    >>> add(ExactScalar(Fraction(1, 2)), ExactScalar(Fraction(1, 2)))
    ExactScalar(a=1, b=0, c=0)
    """
    return ExactScalar.from_value(x) + ExactScalar.from_value(y)


def scale(x, q):
    """
    The exact product of a scalar with a rational.

    Examples
    --------
    >>> scale(ExactScalar(0, 0, 2), 0).is_zero
    True
    """
    return ExactScalar.from_value(x).scale(q)


def compare(x, y):
    """
    The exact order of two scalars. Rational differences are compared directly; otherwise the difference is non-zero
    (a + b*pi + c/pi = 0 with (b, c) != (0, 0) would make pi algebraic) and the enclosure of pi is refined, doubling its
    digits from PI_START_DIGITS, until the interval of the difference excludes zero.

    Examples
    --------
    >>> compare(ExactScalar(7, 0, -24), 0) == Ordering.LESS
    True
    >>> compare(ExactScalar(2, 0, -6), 0) == Ordering.GREATER
    True
    >>> compare(ExactScalar(1), ExactScalar(1)) == Ordering.EQUAL
    True

    Parameters
    ----------
    x: ExactScalar | int | Fraction
    y: ExactScalar | int | Fraction

    Returns
    -------
    Ordering
    """
    d = ExactScalar.from_value(x) - ExactScalar.from_value(y)
    if d.is_rational:
        return Ordering((d.a > 0) - (d.a < 0))
    digits = PI_START_DIGITS
    for _ in range(PI_MAX_DOUBLINGS + 1):
        lo, hi = d.interval(digits)
        if lo > 0:
            return Ordering.GREATER
        if hi < 0:
            return Ordering.LESS
        digits *= 2
    raise ScalarComparisonError("Could not separate %s from zero with %d digits of pi." % (d, digits // 2))


def minimum(values, key=None):
    """
    The first minimal element of a non-empty iterable under the exact order.

    Parameters
    ----------
    values: iterable
    key: callable, optional
        maps every element to the ExactScalar that is compared.

    Returns
    -------
    object
    """
    best, best_key = None, None
    for v in values:
        k = v if key is None else key(v)
        if best_key is None or compare(k, best_key) == Ordering.LESS:
            best, best_key = v, k
    if best_key is None:
        raise PreconditionError("The minimum of an empty collection is undefined.")
    return best


class ExactQuotient(namedtuple('ExactQuotient', ['numerator', 'denominator'])):
    """
    The exact quotient q / d of a rational q by a positive scalar d. Quotients like 2 / (1 + 2/pi) leave the field
    Q + Q*pi + Q/pi, so they are kept in this form; multiplying them by a rational stays exact.

    Examples
    --------
    >>> t = ExactQuotient(2, ExactScalar(1, 0, 2))
    >>> print(t)
    2/(1 + 2/pi)
    >>> print(t.scale(Fraction(3, 2)))
    3/(1 + 2/pi)
    >>> t.is_scalar, ExactQuotient(5, 6).as_scalar()
    (False, ExactScalar(a=5/6, b=0, c=0))
    """

    def __new__(cls, numerator, denominator):
        denominator = ExactScalar.from_value(denominator)
        if compare(denominator, ZERO) != Ordering.GREATER:
            raise PreconditionError("The denominator of a quotient must be positive, got %s." % denominator)
        return super(ExactQuotient, cls).__new__(cls, as_rational(numerator), denominator)

    def scale(self, q):
        """
        The product with a rational.

        Parameters
        ----------
        q: int | Fraction

        Returns
        -------
        ExactQuotient
        """
        return ExactQuotient(self.numerator * as_rational(q), self.denominator)

    def as_scalar(self):
        """
        The quotient as an exact scalar, which exists when the denominator has a single non-zero component.

        Returns
        -------
        ExactScalar
        """
        return self.denominator.reciprocal().scale(self.numerator)

    @property
    def is_scalar(self):
        return sum(q != 0 for q in self.denominator.components) == 1

    def to_dict(self):
        return {"numerator": str(self.numerator), "denominator": self.denominator.to_dict()}

    def __str__(self):
        if self.is_scalar:
            return str(self.as_scalar())
        return "%s/(%s)" % (self.numerator, self.denominator)
