"""
Rays, fans and Hilbert bases of two dimensional cones in the closed first quadrant. The refined fan of a set of Newton
polygons is the coarsest subdivision of the quadrant on which every support value is linear, and the Hilbert bases of
its cones hold the candidate weights of the toric divisors.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import extended_gcd, primitive, det2, slope_key, PreconditionError

from collections import namedtuple

import numpy as np


class Ray(namedtuple('Ray', ['r1', 'r2'])):
    """
    A primitive non-zero integer direction of the closed first quadrant.

    Examples
    --------
    >>> Ray(3, 2)
    Ray(r1=3, r2=2)
    >>> Ray(6, 4)
    Traceback (most recent call last):
        ...
    mldpy.__helpers.PreconditionError: The direction (6, 4) is not a primitive vector of the closed first quadrant.
    """
    __slots__ = ()

    def __new__(cls, r1, r2):
        r1, r2 = int(r1), int(r2)
        if r1 < 0 or r2 < 0 or (r1, r2) == (0, 0) or primitive((r1, r2)) != (r1, r2):
            raise PreconditionError("The direction (%d, %d) is not a primitive vector of the closed first quadrant." % (
                r1, r2))
        return super(Ray, cls).__new__(cls, r1, r2)

    @classmethod
    def through(cls, v):
        """
        The ray through a non-zero vector of the closed first quadrant.

        Parameters
        ----------
        v: tuple[int]

        Returns
        -------
        Ray
        """
        return cls(*primitive(v))

    @property
    def dir(self):
        """
        The direction as a plain integer pair.

        Returns
        -------
        tuple[int]
        """
        return int(self.r1), int(self.r2)

    @property
    def is_axis(self):
        """
        True for the coordinate directions (1, 0) and (0, 1).

        Returns
        -------
        bool
        """
        return self.r1 == 0 or self.r2 == 0


X_AXIS = Ray(1, 0)
Y_AXIS = Ray(0, 1)


class Fan(object):

    def __init__(self, rays):
        """
        A complete fan of the closed first quadrant given by its rays; the cones are the pairs of consecutive rays.
        The coordinate directions are always rays of the fan.

        Examples
        --------
        >>> Fan([Ray(0, 1), Ray(3, 2), Ray(3, 2)])
        Fan((1, 0), (3, 2), (0, 1))

        Parameters
        ----------
        rays: list[Ray]
            the rays, in any order and possibly repeated.
        """
        rays = set(Ray(*r) for r in rays) | {X_AXIS, Y_AXIS}
        self._rays = tuple(sorted(rays, key=slope_key))

    def __eq__(self, other):
        return isinstance(other, Fan) and self._rays == other.rays

    def __hash__(self):
        return hash(self._rays)

    def __repr__(self):
        return "Fan(%s)" % ", ".join("(%d, %d)" % r for r in self._rays)

    def __iter__(self):
        return iter(self._rays)

    def __len__(self):
        return len(self._rays)

    @property
    def rays(self):
        """
        The rays sorted by increasing slope, from (1, 0) to (0, 1).

        Returns
        -------
        tuple[Ray]
        """
        return self._rays

    @property
    def cones(self):
        """
        The two dimensional cones as pairs of consecutive rays.

        Returns
        -------
        list[tuple[Ray]]
        """
        return list(zip(self._rays[:-1], self._rays[1:]))

    def cone_of(self, p):
        """
        The first cone that contains the given direction.

        Parameters
        ----------
        p: tuple[int]

        Returns
        -------
        tuple[Ray]
        """
        for u, v in self.cones:
            if det2(u, p) >= 0 and det2(p, v) >= 0:
                return u, v
        raise PreconditionError("The direction %s is not in the closed first quadrant." % (tuple(p),))


def refined_fan(polygons):
    """
    The common refinement of the normal fans of the Newton polygons: the coordinate directions together with the inner
    normals of all the bounded edges. Every support value is linear on every cone of this fan.

    Examples
    --------
    >>> from mldpy.geometry.newton import make_ideal, polygon_of
    >>> refined_fan([polygon_of(make_ideal([(2, 0), (0, 3)]))])
    Fan((1, 0), (3, 2), (0, 1))
    >>> refined_fan([polygon_of(make_ideal([(0, 0)]))])
    Fan((1, 0), (0, 1))
    >>> refined_fan([polygon_of(make_ideal([(3, 0), (0, 7)])), polygon_of(make_ideal([(2, 0), (0, 3)]))])
    Fan((1, 0), (7, 3), (3, 2), (0, 1))

    Parameters
    ----------
    polygons: list[NewtonPolygon]

    Returns
    -------
    Fan
    """
    rays = []
    for polygon in polygons:
        rays.extend(Ray(*n) for n in polygon.normals)
    return Fan(rays)


def hilbert_basis(u, v):
    """
    The Hilbert basis of the cone spanned by two rays, i.e. the irreducible lattice points of the cone, sorted from u
    to v. The cone is split by unimodular steps: w is the lattice point with det(u, w) = 1 closest to v, so the cone of
    u and w holds no other irreducible point and the rest of the basis is the basis of the cone of w and v.

    Examples
    --------
    >>> hilbert_basis(Ray(1, 0), Ray(0, 1))
    [(1, 0), (0, 1)]
    >>> hilbert_basis(Ray(1, 0), Ray(1, 1))
    [(1, 0), (1, 1)]
    >>> hilbert_basis(Ray(1, 0), Ray(2, 3))
    [(1, 0), (1, 1), (2, 3)]
    >>> hilbert_basis(Ray(2, 3), Ray(1, 0))
    [(1, 0), (1, 1), (2, 3)]

    Parameters
    ----------
    u: tuple[int]
    v: tuple[int]
        two non-parallel primitive directions of the closed first quadrant.

    Returns
    -------
    list[tuple[int]]
    """
    u, v = Ray(*u).dir, Ray(*v).dir
    d = det2(u, v)
    if d == 0:
        raise PreconditionError("The rays %s and %s are parallel." % (u, v))
    if d < 0:
        u, v, d = v, u, -d
    basis = [u]
    while d > 1:
        _, s, t = extended_gcd(u[0], u[1])
        w = (-t, s)  # det(u, w) = 1
        shift = -(det2(w, v) // d)
        w = (w[0] + shift * u[0], w[1] + shift * u[1])
        basis.append(w)
        u, d = w, det2(w, v)
    basis.append(v)
    return basis


def brute_force_hilbert_basis(u, v, bound=None):
    """
    The irreducible lattice points of the cone spanned by u and v inside the box [0..bound]^2, found by exhaustive
    search. A point is irreducible when it is not the sum of two non-zero lattice points of the cone.

    Examples
    --------
    >>> brute_force_hilbert_basis((1, 0), (2, 3), 6)
    [(1, 0), (1, 1), (2, 3)]

    Parameters
    ----------
    u: tuple[int]
    v: tuple[int]
        two non-parallel primitive directions of the closed first quadrant.
    bound: int, optional
        the box size. Default is the largest component of u + v.

    Returns
    -------
    list[tuple[int]]
        sorted by increasing slope.
    """
    u, v = Ray(*u).dir, Ray(*v).dir
    if det2(u, v) < 0:
        u, v = v, u
    if bound is None:
        bound = max(u[0] + v[0], u[1] + v[1])

    grid = np.stack(np.meshgrid(np.arange(bound + 1), np.arange(bound + 1), indexing='ij'), axis=-1).reshape((-1, 2))
    inside = (u[0] * grid[:, 1] - u[1] * grid[:, 0] >= 0) & (grid[:, 0] * v[1] - grid[:, 1] * v[0] >= 0)
    points = grid[inside & np.any(grid > 0, axis=1)]

    def in_cone(q):
        return ((u[0] * q[:, 1] - u[1] * q[:, 0] >= 0) & (q[:, 0] * v[1] - q[:, 1] * v[0] >= 0) &
                np.all(q >= 0, axis=1) & np.any(q > 0, axis=1))

    basis = []
    for w in points:
        rest = w[np.newaxis, :] - points
        if not np.any(in_cone(rest)):
            basis.append((int(w[0]), int(w[1])))
    return sorted(basis, key=slope_key)
