"""
Python package for the exact arithmetic of the toolkit. It contains the scalars of the form a + b*pi + c/pi with
rational components, which house the exponents of the multiideals and every finite invariant, and the bivariate
polynomial algebra over Q and F_p, with the coordinate changes of the plane and the monomialization of ideals.
"""

from .scalars import (
    Rational, ExactScalar, ExactQuotient, Ordering, ScalarComparisonError, pi_interval, compare, add, scale, minimum)
from .polynomials import (
    CoefficientField, Monomial, BivariatePolynomial, PolynomialIdeal, PlaneAutomorphism, Linear, ShearX, ShearY,
    substitute, apply, support, monomialize, elementary_automorphisms)
