"""
Bivariate polynomials over the prime fields Q and F_p, the coordinate changes of the plane that fix the origin and the
monomialization of an ideal, i.e. the monomial ideal generated by all the monomials that appear in its elements.

Only the pattern of zero and non-zero coefficients matters for the supports and the monomial valuations, so the
prime field stands in for its algebraic closure.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import is_prime, PreconditionError, FieldMismatchError

from collections import namedtuple
from fractions import Fraction
from itertools import product

import sympy as sp

X, Y = sp.symbols('x y')
"""
The coordinates of the plane.
"""


class CoefficientField(object):

    def __init__(self, characteristic=0):
        """
        The prime field of the given characteristic: Q for 0 and F_p for a prime p.

        Examples
        --------
        >>> CoefficientField(3)
        CoefficientField(char=3)
        >>> CoefficientField(4)
        Traceback (most recent call last):
            ...
        mldpy.__helpers.PreconditionError: The characteristic must be 0 or a prime, got 4.

        Parameters
        ----------
        characteristic: int, optional
            0 or a prime number. Default is 0.
        """
        characteristic = int(characteristic)
        if characteristic != 0 and not is_prime(characteristic):
            raise PreconditionError("The characteristic must be 0 or a prime, got %d." % characteristic)
        self._char = characteristic
        self._domain = sp.QQ if characteristic == 0 else sp.GF(characteristic)

    def element(self, value):
        """
        Converts an integer or a fraction into an element of the field.

        Parameters
        ----------
        value: int | Fraction

        Returns
        -------
        the domain element.
        """
        if isinstance(value, Fraction):
            den = self._domain.convert(value.denominator)
            if not den:
                raise ZeroDivisionError("%s is not defined in characteristic %d." % (value, self._char))
            return self._domain.convert(value.numerator) / den
        return self._domain.convert(int(value))

    def canonical(self, element):
        """
        The canonical python value of a field element: a Fraction for Q and an integer in {0, ..., p - 1} for F_p.

        Parameters
        ----------
        element
            a domain element.

        Returns
        -------
        Fraction | int
        """
        value = element if isinstance(element, sp.Basic) else self._domain.to_sympy(element)
        if self._char == 0:
            return Fraction(int(value.p), int(value.q))
        return int(value) % self._char

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and other.characteristic == self._char

    def __hash__(self):
        return hash(("CoefficientField", self._char))

    def __repr__(self):
        return "CoefficientField(char=%d)" % self._char

    @property
    def characteristic(self):
        """
        The characteristic of the field.

        Returns
        -------
        int
        """
        return self._char

    @property
    def domain(self):
        """
        The sympy domain of the coefficients (QQ or GF(p)).
        """
        return self._domain


class Monomial(namedtuple('Monomial', ['ex', 'ey'])):
    """
    The monomial x^ex * y^ey, identified with its exponent vector.

    Examples
    --------
    >>> Monomial(2, 1).divides(Monomial(3, 1))
    True
    >>> Monomial(2, 1) * Monomial(0, 2)
    Monomial(ex=2, ey=3)
    """
    __slots__ = ()

    def __new__(cls, ex, ey):
        ex, ey = int(ex), int(ey)
        if ex < 0 or ey < 0:
            raise ValueError("Monomial exponents must be non-negative, got (%d, %d)." % (ex, ey))
        return super(Monomial, cls).__new__(cls, ex, ey)

    def divides(self, other):
        """
        True if this monomial divides the other one.

        Parameters
        ----------
        other: Monomial

        Returns
        -------
        bool
        """
        return self.ex <= other.ex and self.ey <= other.ey

    def weight(self, p):
        """
        The p-weighted degree <p, m>.

        Parameters
        ----------
        p: tuple[int]

        Returns
        -------
        int
        """
        return int(p[0]) * self.ex + int(p[1]) * self.ey

    def __mul__(self, other):
        return Monomial(self.ex + other.ex, self.ey + other.ey)

    def __str__(self):
        if self.ex == 0 and self.ey == 0:
            return "1"
        parts = []
        for var, e in (("x", self.ex), ("y", self.ey)):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append("%s^%d" % (var, e))
        return "*".join(parts)


class BivariatePolynomial(object):

    def __init__(self, field, poly):
        """
        A polynomial in x and y over a prime field. It wraps a sympy Poly whose domain is the field's domain, so
        no zero coefficients are stored and coefficients of F_p are reduced.

        Examples
        --------
        >>> f = BivariatePolynomial.from_terms(CoefficientField(0), {(2, 0): 1, (0, 1): 3})
        >>> sorted(f.support())
        [Monomial(ex=0, ey=1), Monomial(ex=2, ey=0)]

        Parameters
        ----------
        field: CoefficientField
            the coefficient field.
        poly: sp.Poly
            the polynomial, over the domain of the field and with generators (x, y).
        """
        self._field = field
        if poly.domain != field.domain:
            poly = sp.Poly(poly.as_expr(), X, Y, domain=field.domain)
        self._poly = poly

    @classmethod
    def from_terms(cls, field, terms):
        """
        Creates a polynomial from a map of exponent pairs (or monomials) to coefficients.

        Parameters
        ----------
        field: CoefficientField
        terms: dict
            maps (ex, ey) to int or Fraction coefficients.

        Returns
        -------
        BivariatePolynomial
        """
        rep = {}
        for m, c in terms.items():
            key = (int(m[0]), int(m[1]))
            rep[key] = rep.get(key, field.domain.zero) + field.element(c)
        rep = {m: c for m, c in rep.items() if c}
        if not rep:
            return cls.zero(field)
        return cls(field, sp.Poly.from_dict(rep, X, Y, domain=field.domain))

    @classmethod
    def zero(cls, field):
        return cls(field, sp.Poly(0, X, Y, domain=field.domain))

    @classmethod
    def constant(cls, field, value):
        return cls.from_terms(field, {(0, 0): value})

    @classmethod
    def x(cls, field):
        return cls.from_terms(field, {(1, 0): 1})

    @classmethod
    def y(cls, field):
        return cls.from_terms(field, {(0, 1): 1})

    def _check(self, other):
        if not isinstance(other, BivariatePolynomial):
            other = BivariatePolynomial.constant(self._field, other)
        if other.field != self._field:
            raise FieldMismatchError("Cannot combine polynomials over %r and %r." % (self._field, other.field))
        return other

    def __add__(self, other):
        other = self._check(other)
        return BivariatePolynomial(self._field, self._poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial(self._field, -self._poly)

    def __sub__(self, other):
        other = self._check(other)
        return BivariatePolynomial(self._field, self._poly - other.poly)

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        return BivariatePolynomial(self._field, self._poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, n):
        return BivariatePolynomial(self._field, self._poly ** int(n))

    def __eq__(self, other):
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._field == other.field and self.terms() == other.terms()

    def __hash__(self):
        return hash((self._field, tuple(sorted(self.terms().items()))))

    def __repr__(self):
        return "BivariatePolynomial(%s, char=%d)" % (self, self._field.characteristic)

    def __str__(self):
        from mldpy.io.text import format_polynomial
        return format_polynomial(self)

    def terms(self):
        """
        The term map of the polynomial: monomials to canonical non-zero coefficients.

        Returns
        -------
        dict[Monomial, Fraction | int]
        """
        if self._poly.is_zero:
            return {}
        return {Monomial(*m): self._field.canonical(c) for m, c in self._poly.terms()}

    def support(self):
        """
        The monomials that appear with a non-zero coefficient.

        Examples
        --------
        >>> f = (BivariatePolynomial.x(CoefficientField(3)) + BivariatePolynomial.y(CoefficientField(3))) ** 3
        >>> sorted(f.support())
        [Monomial(ex=0, ey=3), Monomial(ex=3, ey=0)]

        Returns
        -------
        set[Monomial]
        """
        if self._poly.is_zero:
            raise PreconditionError("The zero polynomial has no support.")
        return set(Monomial(*m) for m in self._poly.monoms())

    def weighted_order(self, p):
        """
        The p-weighted order, min <p, m> over the support. Distinct monomials never cancel, so this is the value of the
        monomial valuation with weights p.

        Parameters
        ----------
        p: tuple[int]

        Returns
        -------
        int
        """
        return min(m.weight(p) for m in self.support())

    @property
    def field(self):
        """
        The coefficient field.

        Returns
        -------
        CoefficientField
        """
        return self._field

    @property
    def poly(self):
        """
        The underlying sympy polynomial.

        Returns
        -------
        sp.Poly
        """
        return self._poly

    @property
    def is_zero(self):
        return bool(self._poly.is_zero)


def substitute(f, img_x, img_y):
    """
    Substitutes x and y of f by the given polynomials and expands the result, with the coefficient arithmetic of the
    field (so binomial coefficients vanish modulo p where appropriate).

    Examples
    --------
    >>> F2, Q = CoefficientField(2), CoefficientField(0)
    >>> x, y = BivariatePolynomial.x(F2), BivariatePolynomial.y(F2)
    >>> print(substitute(x ** 2, x + y, y))
    x^2 + y^2
    >>> x, y = BivariatePolynomial.x(Q), BivariatePolynomial.y(Q)
    >>> print(substitute(x ** 2, x + y, y))
    x^2 + 2*x*y + y^2

    Parameters
    ----------
    f: BivariatePolynomial
    img_x: BivariatePolynomial
        the image of x.
    img_y: BivariatePolynomial
        the image of y.

    Returns
    -------
    BivariatePolynomial
    """
    field = f.field
    if img_x.field != field or img_y.field != field:
        raise FieldMismatchError("The substitution mixes %r, %r and %r." % (field, img_x.field, img_y.field))
    domain = field.domain
    result = sp.Poly(0, X, Y, domain=domain)
    if f.is_zero:
        return BivariatePolynomial(field, result)
    powers_x, powers_y = {}, {}
    for (ex, ey), c in f.poly.terms():
        if ex not in powers_x:
            powers_x[ex] = img_x.poly ** ex
        if ey not in powers_y:
            powers_y[ey] = img_y.poly ** ey
        result += (powers_x[ex] * powers_y[ey]).mul_ground(domain.convert(c))
    return BivariatePolynomial(field, result)


class PolynomialIdeal(object):

    def __init__(self, generators, field=None):
        """
        An ideal of k[x, y] given by a non-empty sequence of non-zero generators over one field.

        Parameters
        ----------
        generators: list[BivariatePolynomial]
        field: CoefficientField, optional
            the field of the generators; it is taken from the first generator when omitted.
        """
        generators = list(generators)
        if not generators:
            raise PreconditionError("An ideal needs at least one generator.")
        if field is None:
            field = generators[0].field
        for g in generators:
            if g.field != field:
                raise FieldMismatchError("Generator %s is over %r, not %r." % (g, g.field, field))
            if g.is_zero:
                raise PreconditionError("The zero polynomial cannot be a generator.")
        self._field = field
        self._generators = tuple(generators)

    @classmethod
    def from_monomials(cls, field, monomials):
        """
        The ideal generated by the given monomials, with coefficient 1.

        Parameters
        ----------
        field: CoefficientField
        monomials: list[tuple[int]]

        Returns
        -------
        PolynomialIdeal
        """
        return cls([BivariatePolynomial.from_terms(field, {tuple(m): 1}) for m in monomials], field)

    def __eq__(self, other):
        return isinstance(other, PolynomialIdeal) and self._generators == other.generators

    def __hash__(self):
        return hash(self._generators)

    def __repr__(self):
        return "PolynomialIdeal(%s, char=%d)" % (", ".join(str(g) for g in self._generators),
                                                self._field.characteristic)

    @property
    def field(self):
        return self._field

    @property
    def generators(self):
        """
        The generators of the ideal.

        Returns
        -------
        tuple[BivariatePolynomial]
        """
        return self._generators


class AutomorphismStep(object):
    """
    An elementary step of a coordinate change of the plane that fixes the origin.
    """

    def images(self, field):
        """
        The images of x and y under the step.

        Returns
        -------
        img_x: BivariatePolynomial
        img_y: BivariatePolynomial
        """
        raise NotImplementedError()

    def inverse(self, field):
        """
        The step that undoes this one.

        Returns
        -------
        AutomorphismStep
        """
        raise NotImplementedError()

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def _key(self):
        raise NotImplementedError()


class Linear(AutomorphismStep):

    def __init__(self, matrix, field):
        """
        The linear map x -> m00 x + m01 y, y -> m10 x + m11 y.

        Parameters
        ----------
        matrix: list[list[int | Fraction]]
            the 2x2 matrix, with non-zero determinant in the field.
        field: CoefficientField
        """
        m = tuple(tuple(field.canonical(field.element(v)) for v in row) for row in matrix)
        det = field.element(m[0][0]) * field.element(m[1][1]) - field.element(m[0][1]) * field.element(m[1][0])
        if not det:
            raise PreconditionError("The matrix %s is singular in characteristic %d." % (m, field.characteristic))
        self._matrix = m

    def images(self, field):
        (a, b), (c, d) = self._matrix
        x, y = BivariatePolynomial.x(field), BivariatePolynomial.y(field)
        return a * x + b * y, c * x + d * y

    def inverse(self, field):
        (a, b), (c, d) = [[field.element(v) for v in row] for row in self._matrix]
        det = a * d - b * c
        inv = [[d / det, -b / det], [-c / det, a / det]]
        return Linear([[field.canonical(v) for v in row] for row in inv], field)

    def _key(self):
        return self._matrix

    def __repr__(self):
        return "Linear(%s)" % ([list(row) for row in self._matrix],)

    @property
    def matrix(self):
        return self._matrix


class _Shear(AutomorphismStep):

    def __init__(self, coefficients, field):
        """
        A shear along one coordinate by a univariate polynomial h without constant term, given by the coefficients
        of t, t^2, ..., t^d.

        Parameters
        ----------
        coefficients: list[int | Fraction]
        field: CoefficientField
        """
        coefficients = [field.canonical(field.element(c)) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self._coefficients = tuple(coefficients)

    def h(self, field, variable):
        """
        The polynomial h evaluated at the given coordinate polynomial.
        """
        out = BivariatePolynomial.zero(field)
        for i, c in enumerate(self._coefficients, start=1):
            if c != 0:
                out = out + BivariatePolynomial.constant(field, c) * variable ** i
        return out

    def _key(self):
        return self._coefficients

    def _text(self, variable):
        terms = []
        for i, c in enumerate(self._coefficients, start=1):
            if c == 0:
                continue
            mono = variable if i == 1 else "%s^%d" % (variable, i)
            terms.append(mono if c == 1 else "%s*%s" % (c, mono))
        return " + ".join(terms) if terms else "0"

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def is_identity(self):
        return len(self._coefficients) == 0


class ShearX(_Shear):
    """
    The shear x -> x + h(y).
    """

    def images(self, field):
        x, y = BivariatePolynomial.x(field), BivariatePolynomial.y(field)
        return x + self.h(field, y), y

    def inverse(self, field):
        return ShearX([field.canonical(-field.element(c)) for c in self._coefficients], field)

    def __repr__(self):
        return "ShearX(%s)" % self._text("y")


class ShearY(_Shear):
    """
    The shear y -> y + h(x).
    """

    def images(self, field):
        x, y = BivariatePolynomial.x(field), BivariatePolynomial.y(field)
        return x, y + self.h(field, x)

    def inverse(self, field):
        return ShearY([field.canonical(-field.element(c)) for c in self._coefficients], field)

    def __repr__(self):
        return "ShearY(%s)" % self._text("x")


class PlaneAutomorphism(object):

    def __init__(self, steps=(), field=None):
        """
        A coordinate change of the plane fixing the origin, as a sequence of elementary steps. Applying it to a
        polynomial substitutes the steps in order.

        Examples
        --------
        >>> F = CoefficientField(0)
        >>> phi = PlaneAutomorphism([ShearY([0, 1], F)], F)
        >>> y = PolynomialIdeal.from_monomials(F, [(0, 1)])
        >>> print(apply(phi, y).generators[0])
        x^2 + y

        Parameters
        ----------
        steps: list[AutomorphismStep], optional
            the elementary steps. The empty sequence is the identity.
        field: CoefficientField, optional
        """
        self._steps = tuple(steps)
        self._field = field if field is not None else CoefficientField(0)

    def inverse(self):
        """
        The inverse automorphism: the reversed sequence of inverted steps.

        Returns
        -------
        PlaneAutomorphism
        """
        return PlaneAutomorphism([s.inverse(self._field) for s in reversed(self._steps)], self._field)

    def then(self, step):
        """
        The automorphism extended by one more step.

        Parameters
        ----------
        step: AutomorphismStep

        Returns
        -------
        PlaneAutomorphism
        """
        return PlaneAutomorphism(self._steps + (step,), self._field)

    def __call__(self, f):
        if f.field != self._field:
            raise FieldMismatchError("Automorphism over %r applied to a polynomial over %r." % (self._field, f.field))
        for step in self._steps:
            img_x, img_y = step.images(self._field)
            f = substitute(f, img_x, img_y)
        return f

    def __eq__(self, other):
        return isinstance(other, PlaneAutomorphism) and self._steps == other.steps and self._field == other.field

    def __hash__(self):
        return hash((self._steps, self._field))

    def __repr__(self):
        if not self._steps:
            return "PlaneAutomorphism(identity)"
        return "PlaneAutomorphism(%s)" % ", ".join(repr(s) for s in self._steps)

    @property
    def steps(self):
        return self._steps

    @property
    def field(self):
        return self._field

    @property
    def is_identity(self):
        return len(self._steps) == 0


def apply(phi, ideal):
    """
    The generator-wise image of an ideal under a coordinate change.

    Examples
    --------
    >>> F = CoefficientField(0)
    >>> swap = PlaneAutomorphism([Linear([[0, 1], [1, 0]], F)], F)
    >>> I = PolynomialIdeal.from_monomials(F, [(2, 0), (0, 3)])
    >>> [str(g) for g in apply(swap, I).generators]
    ['y^2', 'x^3']

    Parameters
    ----------
    phi: PlaneAutomorphism
    ideal: PolynomialIdeal

    Returns
    -------
    PolynomialIdeal
    """
    if phi.field != ideal.field:
        raise FieldMismatchError("Automorphism over %r applied to an ideal over %r." % (phi.field, ideal.field))
    return PolynomialIdeal([phi(g) for g in ideal.generators], ideal.field)


def support(f):
    """
    The set of monomials of a non-zero polynomial.

    Parameters
    ----------
    f: BivariatePolynomial

    Returns
    -------
    set[Monomial]
    """
    return f.support()


def monomialize(ideal):
    """
    The monomial ideal generated by all the monomials that appear in the elements of the ideal. Every element is a
    combination sum g_i f_i of the generators, and every monomial of g_i f_i is a multiple of a monomial of g_i, so the
    supports of the generators already generate it.

    Examples
    --------
    >>> F2, Q = CoefficientField(2), CoefficientField(0)
    >>> x, y = BivariatePolynomial.x(F2), BivariatePolynomial.y(F2)
    >>> monomialize(PolynomialIdeal([(x + y) ** 2]))
    MonomialIdeal(y^2, x^2)
    >>> x, y = BivariatePolynomial.x(Q), BivariatePolynomial.y(Q)
    >>> monomialize(PolynomialIdeal([(x + y) ** 2]))
    MonomialIdeal(y^2, x*y, x^2)
    >>> monomialize(PolynomialIdeal([x ** 2 + y ** 3 + x ** 5]))
    MonomialIdeal(y^3, x^2)

    Parameters
    ----------
    ideal: PolynomialIdeal

    Returns
    -------
    MonomialIdeal
    """
    from mldpy.geometry.newton import make_ideal

    monomials = set()
    for g in ideal.generators:
        monomials |= g.support()
    return make_ideal(monomials)


def elementary_automorphisms(field, degree_bound, coefficient_pool):
    """
    All single-step coordinate changes with coefficients in the pool: the identity first, then every invertible 2x2
    matrix with entries in the pool and every non-zero shear x -> x + h(y), y -> y + h(x) with deg h <= degree_bound.
    The order is deterministic; maps with identical action may repeat.

    Examples
    --------
    >>> F2 = CoefficientField(2)
    >>> autos = elementary_automorphisms(F2, 1, [0, 1])
    >>> PlaneAutomorphism([Linear([[1, 1], [0, 1]], F2)], F2) in autos
    True
    >>> PlaneAutomorphism([ShearY([1], F2)], F2) in autos
    True
    >>> elementary_automorphisms(F2, 1, [0])
    [PlaneAutomorphism(identity)]

    Parameters
    ----------
    field: CoefficientField
    degree_bound: int
        the maximum degree of the shear polynomials, at least 1.
    coefficient_pool: list[int | Fraction]
        the allowed coefficients; they are reduced in the field and deduplicated.

    Returns
    -------
    list[PlaneAutomorphism]
    """
    degree_bound = int(degree_bound)
    if degree_bound < 1:
        raise PreconditionError("The degree bound must be at least 1, got %d." % degree_bound)
    pool = []
    for c in coefficient_pool:
        c = field.canonical(field.element(c))
        if c not in pool:
            pool.append(c)
    if not pool:
        raise PreconditionError("The coefficient pool is empty.")

    autos = [PlaneAutomorphism((), field)]
    for a, b, c, d in product(pool, repeat=4):
        if field.element(a) * field.element(d) - field.element(b) * field.element(c):
            autos.append(PlaneAutomorphism([Linear([[a, b], [c, d]], field)], field))
    for shear in (ShearX, ShearY):
        for coefficients in product(pool, repeat=degree_bound):
            step = shear(coefficients, field)
            if not step.is_identity:
                autos.append(PlaneAutomorphism([step], field))
    return autos
