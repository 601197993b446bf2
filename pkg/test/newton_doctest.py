import doctest
import numpy as np
import mldpy.geometry.newton as nw

from mldpy.lab.staircases import enumerate_staircases


def _random_ideal(rng, box=6, nb_generators=4):
    return nw.make_ideal([(int(rng.randint(box + 1)), int(rng.randint(box + 1))) for _ in range(nb_generators)])


def _random_direction(rng, bound=9):
    p = (0, 0)
    while p == (0, 0):
        p = (int(rng.randint(bound + 1)), int(rng.randint(bound + 1)))
    return p


def test_doctests():
    failures, _ = doctest.testmod(nw)
    assert failures == 0


def test_support_value_is_the_minimum_over_the_generators():
    rng = np.random.RandomState(2021)
    for _ in range(200):
        ideal = _random_ideal(rng)
        polygon = nw.polygon_of(ideal)
        p = _random_direction(rng)
        expected = min(p[0] * m.ex + p[1] * m.ey for m in ideal.generators)
        assert nw.support_value(polygon, p) == expected


def test_vertices_are_generators_in_convex_position():
    for ideal in enumerate_staircases(4):
        polygon = nw.polygon_of(ideal)
        assert set(polygon.vertices) <= set(ideal.generators)
        for _, _, (n1, n2) in polygon.edges:
            assert n1 > 0 and n2 > 0 and np.gcd(n1, n2) == 1


def test_minimizing_vertex_attains_the_support_value():
    rng = np.random.RandomState(5)
    for _ in range(100):
        polygon = nw.polygon_of(_random_ideal(rng))
        p = _random_direction(rng)
        v = polygon.minimizing_vertex(p)
        assert p[0] * v.ex + p[1] * v.ey == polygon.support_value(p)


def test_containment_lowers_the_support_values():
    rng = np.random.RandomState(17)
    for _ in range(100):
        ideal_i, ideal_j = _random_ideal(rng), _random_ideal(rng)
        if not nw.contains(ideal_i, ideal_j):
            continue
        p = _random_direction(rng)
        assert nw.support_value(nw.polygon_of(ideal_i), p) <= nw.support_value(nw.polygon_of(ideal_j), p)


def test_make_ideal_keeps_the_minimal_generators():
    ideal = nw.make_ideal([(3, 0), (2, 2), (1, 3), (3, 3), (0, 5), (1, 4)])
    assert [tuple(m) for m in ideal.generators] == [(0, 5), (1, 3), (2, 2), (3, 0)]
    assert nw.contains(ideal, nw.make_ideal([(3, 3), (1, 4)]))


if __name__ == '__main__':
    doctest.testmod(nw, verbose=True)
