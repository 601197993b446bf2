"""
Staircase monomial ideals of k[x, y] and their Newton polygons, the convex hulls of the generator exponents plus the
positive quadrant. The support values of the polygons are the monomial valuations of the ideals.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import primitive, PreconditionError
from mldpy.algebra.polynomials import Monomial

import numpy as np


class MonomialIdeal(object):

    def __init__(self, generators):
        """
        A monomial ideal given by the antichain of its minimal generators. The generators are kept sorted by ascending
        x-exponent, so the y-exponents are strictly descending. Use make_ideal to build one from any set of monomials.

        Examples
        --------
        >>> MonomialIdeal([Monomial(0, 3), Monomial(2, 0)])
        MonomialIdeal(y^3, x^2)
        >>> MonomialIdeal([Monomial(2, 0), Monomial(3, 0)])
        Traceback (most recent call last):
            ...
        ValueError: The generators of a monomial ideal must be an antichain sorted by the x-exponent.

        Parameters
        ----------
        generators: list[Monomial]
            the minimal generators, sorted by the x-exponent.
        """
        generators = tuple(Monomial(*m) for m in generators)
        if not generators:
            raise PreconditionError("A monomial ideal needs at least one generator.")
        for m0, m1 in zip(generators[:-1], generators[1:]):
            if not (m0.ex < m1.ex and m0.ey > m1.ey):
                raise ValueError("The generators of a monomial ideal must be an antichain sorted by the x-exponent.")
        self._generators = generators

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self._generators == other.generators

    def __lt__(self, other):
        return self._generators < other.generators

    def __hash__(self):
        return hash(self._generators)

    def __repr__(self):
        return "MonomialIdeal(%s)" % ", ".join(str(m) for m in self._generators)

    def __str__(self):
        return ", ".join(str(m) for m in self._generators)

    @property
    def generators(self):
        """
        The minimal generators, sorted by ascending x-exponent.

        Returns
        -------
        tuple[Monomial]
        """
        return self._generators

    @property
    def is_trivial(self):
        """
        True for the whole ring, i.e. the ideal generated by 1.

        Returns
        -------
        bool
        """
        return self._generators == (Monomial(0, 0),)


TRIVIAL_IDEAL = MonomialIdeal([Monomial(0, 0)])
"""
The whole ring k[x, y].
"""


def make_ideal(generators):
    """
    The monomial ideal generated by the given monomials: they are deduplicated, the non-minimal ones are dropped and
    the rest are sorted.

    Examples
    --------
    >>> make_ideal([(2, 0), (0, 3), (5, 0)])
    MonomialIdeal(y^3, x^2)
    >>> make_ideal([(0, 0), (1, 0)]).is_trivial
    True
    >>> make_ideal([(1, 1)])
    MonomialIdeal(x*y)

    Parameters
    ----------
    generators: list[tuple[int]] | set[Monomial]
        a non-empty collection of monomials or exponent pairs.

    Returns
    -------
    MonomialIdeal
    """
    monomials = sorted(set(Monomial(*m) for m in generators))
    if not monomials:
        raise PreconditionError("A monomial ideal needs at least one generator.")
    # sorted by (ex, ey): a monomial is minimal iff its ey is below every ey seen before it
    minimal = []
    for m in monomials:
        if not minimal or m.ey < minimal[-1].ey:
            minimal.append(m)
    return MonomialIdeal(minimal)


def contains(ideal_i, ideal_j):
    """
    True if J is a subset of I, i.e. every generator of J is divisible by a generator of I.

    Examples
    --------
    >>> contains(make_ideal([(1, 0)]), make_ideal([(2, 0), (1, 1)]))
    True
    >>> contains(make_ideal([(2, 0)]), make_ideal([(1, 0)]))
    False

    Parameters
    ----------
    ideal_i: MonomialIdeal
    ideal_j: MonomialIdeal

    Returns
    -------
    bool
    """
    return all(any(g.divides(m) for g in ideal_i.generators) for m in ideal_j.generators)


class NewtonPolygon(object):

    def __init__(self, vertices):
        """
        The Newton polygon of a monomial ideal, stored by its vertices: the polygon is their convex hull plus the
        positive quadrant. Consecutive vertices define the bounded edges, whose primitive inner normals have both
        components positive.

        Examples
        --------
        >>> G = NewtonPolygon([Monomial(0, 3), Monomial(2, 0)])
        >>> G.edges
        [(Monomial(ex=0, ey=3), Monomial(ex=2, ey=0), (3, 2))]

        Parameters
        ----------
        vertices: list[Monomial]
            the vertices in strictly convex position, sorted by the x-exponent.
        """
        vertices = tuple(Monomial(*v) for v in vertices)
        if not vertices:
            raise PreconditionError("A Newton polygon needs at least one vertex.")
        for v0, v1, v2 in zip(vertices[:-2], vertices[1:-1], vertices[2:]):
            if _turn(v0, v1, v2) <= 0:
                raise ValueError("The vertex %s is not in strictly convex position." % (v1,))
        self._vertices = vertices
        self._array = np.array(vertices, dtype=np.int64).reshape((-1, 2))
        self._edges = []
        for v0, v1 in zip(vertices[:-1], vertices[1:]):
            if not (v0.ex < v1.ex and v0.ey > v1.ey):
                raise ValueError("The vertices must be sorted by the x-exponent with descending y-exponents.")
            self._edges.append((v0, v1, primitive((v0.ey - v1.ey, v1.ex - v0.ex))))

    def support_value(self, p):
        """
        The minimum of <p, q> over the polygon, which is attained at a vertex.

        Parameters
        ----------
        p: tuple[int]
            a non-zero vector of the closed first quadrant.

        Returns
        -------
        int
        """
        return int(np.min(self._array.dot(as_direction(p))))

    def minimizing_vertex(self, p):
        """
        The first vertex (in x-order) where <p, q> attains the support value.

        Parameters
        ----------
        p: tuple[int]

        Returns
        -------
        Monomial
        """
        return self._vertices[int(np.argmin(self._array.dot(as_direction(p))))]

    def __eq__(self, other):
        return isinstance(other, NewtonPolygon) and self._vertices == other.vertices

    def __hash__(self):
        return hash(self._vertices)

    def __repr__(self):
        return "NewtonPolygon(%s)" % ", ".join("(%d, %d)" % tuple(v) for v in self._vertices)

    @property
    def vertices(self):
        """
        The vertices, sorted by ascending x-exponent.

        Returns
        -------
        tuple[Monomial]
        """
        return self._vertices

    @property
    def edges(self):
        """
        The bounded edges as (vertex, next vertex, primitive inner normal).

        Returns
        -------
        list[tuple]
        """
        return list(self._edges)

    @property
    def normals(self):
        """
        The primitive inner normals of the bounded edges.

        Returns
        -------
        list[tuple[int]]
        """
        return [n for _, _, n in self._edges]


def _turn(a, b, c):
    return (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0])


def as_direction(p):
    p = np.asarray(tuple(p), dtype=np.int64)
    if p.shape != (2,) or np.any(p < 0) or not np.any(p > 0):
        raise PreconditionError("The direction %s must be a non-zero vector of the closed first quadrant." % (
            tuple(int(pi) for pi in p),))
    return p


def polygon_of(ideal):
    """
    The Newton polygon of a monomial ideal. Its vertices are the generators on the lower-left convex hull; generators
    on an edge or inside the polygon are dropped.

    Examples
    --------
    >>> polygon_of(make_ideal([(2, 0), (0, 3)]))
    NewtonPolygon((0, 3), (2, 0))
    >>> polygon_of(make_ideal([(2, 0), (1, 1), (0, 2)]))
    NewtonPolygon((0, 2), (2, 0))
    >>> polygon_of(TRIVIAL_IDEAL)
    NewtonPolygon((0, 0))

    Parameters
    ----------
    ideal: MonomialIdeal

    Returns
    -------
    NewtonPolygon
    """
    hull = []
    for m in ideal.generators:
        while len(hull) >= 2 and _turn(hull[-2], hull[-1], m) <= 0:
            hull.pop()
        hull.append(m)
    return NewtonPolygon(hull)


def support_value(polygon, p):
    """
    The support value <p, G> = min{<p, q> | q in G} of a Newton polygon.

    Examples
    --------
    >>> G = polygon_of(make_ideal([(2, 0), (0, 3)]))
    >>> support_value(G, (3, 2)), support_value(G, (1, 1))
    (6, 2)
    >>> support_value(polygon_of(TRIVIAL_IDEAL), (5, 7))
    0
    >>> support_value(G, (0, 0))
    Traceback (most recent call last):
        ...
    mldpy.__helpers.PreconditionError: The direction (0, 0) must be a non-zero vector of the closed first quadrant.

    Parameters
    ----------
    polygon: NewtonPolygon
    p: tuple[int]
        a non-zero vector of the closed first quadrant.

    Returns
    -------
    int
    """
    return polygon.support_value(p)
