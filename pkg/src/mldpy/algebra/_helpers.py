"""
Helpers for the mldpy.algebra package. Contains integer helpers shared by the exact arithmetic, the polynomial
algebra and the lattice geometry.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from mldpy.__helpers import *

from sympy import isprime
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex
from math import gcd


def extended_gcd(a, b):
    """
    The extended Euclidean algorithm.

    Examples
    --------
    >>> g, s, t = extended_gcd(10, 12)
    >>> g, 10 * s + 12 * t
    (2, 2)

    Parameters
    ----------
    a: int
    b: int

    Returns
    -------
    g: int
        the greatest common divisor of a and b.
    s: int
    t: int
        integers with a * s + b * t = g.
    """
    s, t, g = igcdex(int(a), int(b))
    return int(g), int(s), int(t)


def primitive(v):
    """
    Divides an integer vector by the gcd of its components.

    Examples
    --------
    >>> primitive((6, 4))
    (3, 2)
    >>> primitive((0, 5))
    (0, 1)

    Parameters
    ----------
    v: tuple[int]
        a non-zero integer vector.

    Returns
    -------
    tuple[int]
    """
    g = 0
    for vi in v:
        g = gcd(g, int(vi))
    if g == 0:
        raise PreconditionError("The zero vector has no primitive direction.")
    return tuple(int(vi) // g for vi in v)


def is_prime(n):
    """
    Primality test, used to validate the characteristic of the coefficient fields.

    Parameters
    ----------
    n: int

    Returns
    -------
    bool
    """
    return bool(isprime(int(n)))


def det2(u, v):
    """
    The determinant of the 2x2 matrix with columns u and v.

    Examples
    --------
    >>> det2((1, 0), (2, 3))
    3

    Parameters
    ----------
    u: tuple[int]
    v: tuple[int]

    Returns
    -------
    int
    """
    return u[0] * v[1] - u[1] * v[0]
