"""
Python package for the polyhedral geometry of monomial ideals in the plane. It contains the staircase ideals and their
Newton polygons, the support values of the polygons, the refined normal fans and the Hilbert bases of their cones.
"""

from .newton import MonomialIdeal, NewtonPolygon, TRIVIAL_IDEAL, make_ideal, polygon_of, support_value, contains
from .fan import Ray, Fan, X_AXIS, Y_AXIS, refined_fan, hilbert_basis, brute_force_hilbert_basis
