"""
The text forms of scalars, polynomials, ideals and multiideals.

Scalars are sums of products of integers and pi, e.g. `3`, `5/6`, `2/pi`, `3*pi` or `1/2 + 2/pi`; every product must be
a rational multiple of pi, 1 or 1/pi. Polynomials in x and y are sums of products of rational coefficients, the
variables and parenthesised polynomials, each with an optional power `^n`; the `*` may be left out. Ideals are
polynomials separated by `,` and multiideals are ideals separated by `;`, each with an optional exponent `@ <scalar>`
that defaults to 1.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import PreconditionError
from mldpy.algebra.scalars import ExactScalar, Ordering, compare
from mldpy.algebra.polynomials import CoefficientField, BivariatePolynomial, PolynomialIdeal, Monomial
from mldpy.geometry.newton import MonomialIdeal, make_ideal
from mldpy.invariants.multiideal import PolyMultiIdeal, MultiIdeal

from collections import namedtuple
from fractions import Fraction

import re


class ParseError(ValueError):

    def __init__(self, message, line=1, column=1):
        """
        Malformed input text, located by its line and column (both starting from 1).

        Parameters
        ----------
        message: str
        line: int, optional
        column: int, optional
        """
        super(ParseError, self).__init__("line %d, column %d: %s" % (line, column, message))
        self.line = line
        self.column = column
        self.reason = message


Token = namedtuple('Token', ['kind', 'text', 'line', 'column'])

_TOKENS = re.compile(r"(?P<number>\d+(?:\.\d*)?)|(?P<name>pi|[A-Za-z])|(?P<op>[-+*/^(),;@])|(?P<newline>\n)"
                     r"|(?P<space>[ \t\r]+)|(?P<error>.)")


def tokenize(text):
    """
    Splits a text into number, name and operator tokens, tracking their positions.

    Examples
    --------
    >>> [t.text for t in tokenize("x^2 + 3*y")]
    ['x', '^', '2', '+', '3', '*', 'y']

    Parameters
    ----------
    text: str

    Returns
    -------
    list[Token]
    """
    tokens = []
    line, start = 1, 0
    for match in _TOKENS.finditer(text):
        kind = match.lastgroup
        column = match.start() - start + 1
        if kind == "newline":
            line, start = line + 1, match.end()
        elif kind == "space":
            continue
        elif kind == "error":
            raise ParseError("unexpected character %r" % match.group(), line, column)
        elif kind == "number" and "." in match.group():
            raise ParseError("decimal number %s is not exact; use a fraction" % match.group(), line, column)
        else:
            tokens.append(Token(kind, match.group(), line, column))
    tokens.append(Token("end", "", line, len(text) - start + 1))
    return tokens


class _Parser(object):

    def __init__(self, text, field=None):
        self._tokens = tokenize(text)
        self._pos = 0
        self._field = field

    @property
    def current(self):
        return self._tokens[self._pos]

    def _advance(self):
        token = self._tokens[self._pos]
        self._pos += 1
        return token

    def _accept(self, text):
        if self.current.kind == "op" and self.current.text == text:
            return self._advance()
        return None

    def _expect(self, text):
        token = self._accept(text)
        if token is None:
            self.error("expected %r" % text)
        return token

    def error(self, message, token=None):
        token = self.current if token is None else token
        found = "end of input" if token.kind == "end" else repr(token.text)
        raise ParseError("%s, found %s" % (message, found), token.line, token.column)

    def _leading_sign(self):
        if self._accept("-"):
            return -1
        self._accept("+")
        return 1

    def expect_end(self):
        if self.current.kind != "end":
            self.error("unexpected input")

    # scalars

    def scalar(self):
        total = ExactScalar(0)
        sign = self._leading_sign()
        while True:
            total = total + self._scalar_term().scale(sign)
            if self._accept("+"):
                sign = 1
            elif self._accept("-"):
                sign = -1
            else:
                return total

    def _scalar_term(self):
        start = self.current
        q, power = self._scalar_factor(Fraction(1), 0, divide=False)
        while True:
            if self._accept("*"):
                q, power = self._scalar_factor(q, power, divide=False)
            elif self._accept("/"):
                q, power = self._scalar_factor(q, power, divide=True)
            else:
                break
        if power == 0:
            return ExactScalar(q)
        if power == 1:
            return ExactScalar(0, q)
        if power == -1:
            return ExactScalar(0, 0, q)
        self.error("the term is not of the form a, b*pi or c/pi", start)

    def _scalar_factor(self, q, power, divide):
        token = self.current
        if token.kind == "number":
            self._advance()
            value = int(token.text)
            if divide:
                if value == 0:
                    self.error("division by zero", token)
                return q / value, power
            return q * value, power
        if token.kind == "name" and token.text == "pi":
            self._advance()
            return q, power - 1 if divide else power + 1
        if self._accept("("):
            inner = self.scalar()
            self._expect(")")
            if not inner.is_rational:
                self.error("only rational sub-expressions may be parenthesised", token)
            if divide:
                if inner.a == 0:
                    self.error("division by zero", token)
                return q / inner.a, power
            return q * inner.a, power
        self.error("expected a number or pi")

    # polynomials

    def polynomial(self):
        field = self._field
        total = BivariatePolynomial.zero(field)
        sign = self._leading_sign()
        while True:
            term = self._poly_term()
            total = total + term if sign > 0 else total - term
            if self._accept("+"):
                sign = 1
            elif self._accept("-"):
                sign = -1
            else:
                return total

    def _starts_factor(self):
        token = self.current
        return token.kind in ("number", "name") or (token.kind == "op" and token.text == "(")

    def _poly_term(self):
        value = self._poly_power()
        while True:
            if self._accept("*"):
                value = value * self._poly_power()
            elif self.current.kind == "op" and self.current.text == "/":
                self._advance()
                number = self.current
                if number.kind != "number":
                    self.error("only division by an integer is supported")
                self._advance()
                if int(number.text) == 0:
                    self.error("division by zero", number)
                value = value * self._constant(Fraction(1, int(number.text)), number)
            elif self._starts_factor():
                value = value * self._poly_power()
            else:
                return value

    def _constant(self, q, token):
        try:
            return BivariatePolynomial.constant(self._field, q)
        except ZeroDivisionError:
            self.error("the coefficient %s is not defined in characteristic %d" % (q, self._field.characteristic),
                       token)

    def _poly_power(self):
        base = self._poly_atom()
        if self._accept("^"):
            token = self.current
            if token.kind != "number":
                self.error("expected a non-negative integer power")
            self._advance()
            base = base ** int(token.text)
        return base

    def _poly_atom(self):
        token = self.current
        field = self._field
        if token.kind == "number":
            self._advance()
            return self._constant(Fraction(int(token.text)), token)
        if token.kind == "name":
            self._advance()
            if token.text == "x":
                return BivariatePolynomial.x(field)
            if token.text == "y":
                return BivariatePolynomial.y(field)
            self.error("unknown variable; only x and y are allowed", token)
        if self._accept("("):
            inner = self.polynomial()
            self._expect(")")
            return inner
        self.error("expected a coefficient, x, y or '('")

    def ideal(self):
        generators = []
        while True:
            token = self.current
            f = self.polynomial()
            if f.is_zero:
                self.error("the zero polynomial cannot be a generator", token)
            generators.append(f)
            if not self._accept(","):
                return PolynomialIdeal(generators, self._field)

    def multiideal(self):
        pairs = []
        while True:
            ideal = self.ideal()
            exponent = ExactScalar(1)
            if self._accept("@"):
                token = self.current
                exponent = self.scalar()
                if compare(exponent, 0) != Ordering.GREATER:
                    self.error("the exponent %s is not positive" % exponent, token)
            pairs.append((ideal, exponent))
            if not self._accept(";"):
                return PolyMultiIdeal(pairs)


def _field_of(characteristic):
    if isinstance(characteristic, CoefficientField):
        return characteristic
    return CoefficientField(characteristic)


def parse_scalar(text):
    """
    Parses a scalar of Q + Q*pi + Q/pi.

    Examples
    --------
    >>> parse_scalar("1/2 + 2/pi")
    ExactScalar(a=1/2, b=0, c=2)
    >>> parse_scalar("3*pi")
    ExactScalar(a=0, b=3, c=0)
    >>> parse_scalar("pi*pi")
    Traceback (most recent call last):
        ...
    mldpy.io.text.ParseError: line 1, column 1: the term is not of the form a, b*pi or c/pi, found 'pi'

    Parameters
    ----------
    text: str

    Returns
    -------
    ExactScalar
    """
    parser = _Parser(text)
    value = parser.scalar()
    parser.expect_end()
    return value


def parse_polynomial(text, characteristic=0):
    """
    Parses a polynomial in x and y; the coefficients are reduced in the field.

    Examples
    --------
    >>> print(parse_polynomial("(x + y)^2", 2))
    x^2 + y^2
    >>> print(parse_polynomial("3/2*x - 2xy"))
    -2*x*y + 3/2*x

    Parameters
    ----------
    text: str
    characteristic: int | CoefficientField, optional

    Returns
    -------
    BivariatePolynomial
    """
    parser = _Parser(text, _field_of(characteristic))
    f = parser.polynomial()
    parser.expect_end()
    return f


def parse_ideal(text, characteristic=0):
    """
    Parses an ideal given by comma separated generators.

    Parameters
    ----------
    text: str
    characteristic: int | CoefficientField, optional

    Returns
    -------
    PolynomialIdeal
    """
    parser = _Parser(text, _field_of(characteristic))
    ideal = parser.ideal()
    parser.expect_end()
    return ideal


def parse_monomial_ideal(text):
    """
    Parses a monomial ideal; every generator must be a single monomial and the coefficients are ignored.

    Examples
    --------
    >>> parse_monomial_ideal("x^2, y^3, x^5")
    MonomialIdeal(y^3, x^2)

    Parameters
    ----------
    text: str

    Returns
    -------
    MonomialIdeal
    """
    ideal = parse_ideal(text)
    monomials = []
    for g in ideal.generators:
        terms = g.terms()
        if len(terms) != 1:
            raise ParseError("the generator %s is not a monomial" % g)
        monomials.extend(terms)
    return make_ideal(monomials)


def parse_multiideal(text, characteristic=0):
    """
    Parses a multiideal: ideals separated by ';', each followed by an optional '@ <scalar>' exponent (default 1).

    Examples
    --------
    >>> parse_multiideal("x^2, y^3 @ 1")
    PolyMultiIdeal(x^2, y^3 @ 1, char=0)
    >>> parse_multiideal("x+y @ 1/2 ; y^3 @ 2/pi", 2).pairs[1][1]
    ExactScalar(a=0, b=0, c=2)
    >>> parse_multiideal("x @ 0")
    Traceback (most recent call last):
        ...
    mldpy.io.text.ParseError: line 1, column 5: the exponent 0 is not positive, found '0'

    Parameters
    ----------
    text: str
    characteristic: int | CoefficientField, optional
        0 or a prime. Default is 0.

    Returns
    -------
    PolyMultiIdeal
    """
    parser = _Parser(text, _field_of(characteristic))
    multiideal = parser.multiideal()
    parser.expect_end()
    return multiideal


def format_scalar(value):
    """
    The text form of a scalar, which parse_scalar reads back.

    Parameters
    ----------
    value: ExactScalar

    Returns
    -------
    str
    """
    return str(ExactScalar.from_value(value))


def _term_key(monomial):
    return -(monomial.ex + monomial.ey), -monomial.ex


def format_polynomial(f):
    """
    The text form of a polynomial, by descending total degree and then descending x-exponent.

    Examples
    --------
    >>> f = BivariatePolynomial.from_terms(CoefficientField(0), {(0, 1): 1, (2, 0): -1, (0, 0): 3})
    >>> print(format_polynomial(f))
    -x^2 + y + 3

    Parameters
    ----------
    f: BivariatePolynomial

    Returns
    -------
    str
    """
    terms = f.terms()
    if not terms:
        return "0"
    out = ""
    for i, m in enumerate(sorted(terms, key=_term_key)):
        c = terms[m]
        negative = c < 0
        c = abs(c)
        if m == Monomial(0, 0):
            text = str(c)
        elif c == 1:
            text = str(m)
        else:
            text = "%s*%s" % (c, m)
        if i == 0:
            out = ("-" if negative else "") + text
        else:
            out += (" - " if negative else " + ") + text
    return out


def format_ideal(ideal):
    """
    The text form of a polynomial or monomial ideal.

    Parameters
    ----------
    ideal: PolynomialIdeal | MonomialIdeal

    Returns
    -------
    str
    """
    if isinstance(ideal, MonomialIdeal):
        return ", ".join(str(m) for m in ideal.generators)
    return ", ".join(format_polynomial(g) for g in ideal.generators)


def format_multiideal(multiideal):
    """
    The text form of a multiideal, which parse_multiideal reads back.

    Examples
    --------
    >>> format_multiideal(MultiIdeal.single([(2, 0), (0, 3)], ExactScalar(0, 0, 2)))
    'y^3, x^2 @ 2/pi'

    Parameters
    ----------
    multiideal: MultiIdeal | PolyMultiIdeal

    Returns
    -------
    str
    """
    return " ; ".join("%s @ %s" % (format_ideal(ideal), format_scalar(e)) for ideal, e in multiideal.pairs)
