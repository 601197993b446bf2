import doctest
import numpy as np
import mldpy.geometry.fan as fn

from mldpy.geometry.newton import make_ideal, polygon_of
from mldpy.algebra._helpers import primitive


def _random_ray(rng, bound=12):
    while True:
        p = (int(rng.randint(bound + 1)), int(rng.randint(bound + 1)))
        if p != (0, 0) and primitive(p) == p:
            return fn.Ray(*p)


def _random_polygon(rng, box=6, nb_generators=4):
    return polygon_of(make_ideal([(int(rng.randint(box + 1)), int(rng.randint(box + 1)))
                                  for _ in range(nb_generators)]))


def test_doctests():
    failures, _ = doctest.testmod(fn)
    assert failures == 0


def test_hilbert_basis_agrees_with_brute_force():
    rng = np.random.RandomState(2021)
    tested = 0
    while tested < 200:
        u, v = _random_ray(rng), _random_ray(rng)
        if u[0] * v[1] - u[1] * v[0] == 0:
            continue
        assert fn.hilbert_basis(u, v) == fn.brute_force_hilbert_basis(u, v)
        tested += 1


def test_hilbert_basis_steps_are_unimodular():
    rng = np.random.RandomState(3)
    for _ in range(100):
        u, v = _random_ray(rng, 30), _random_ray(rng, 30)
        if u[0] * v[1] - u[1] * v[0] == 0:
            continue
        basis = fn.hilbert_basis(u, v)
        for a, b in zip(basis[:-1], basis[1:]):
            assert a[0] * b[1] - a[1] * b[0] == 1


def test_support_values_are_linear_on_the_cones():
    rng = np.random.RandomState(11)
    for _ in range(50):
        polygons = [_random_polygon(rng) for _ in range(int(rng.randint(1, 4)))]
        fan = fn.refined_fan(polygons)
        for u, v in fan.cones:
            a, b = int(rng.randint(4)), int(rng.randint(1, 4))
            p = (a * u[0] + b * v[0], a * u[1] + b * v[1])
            for polygon in polygons:
                assert polygon.support_value(p) == a * polygon.support_value(u) + b * polygon.support_value(v)


def test_refined_fan_holds_every_normal():
    rng = np.random.RandomState(7)
    for _ in range(50):
        polygons = [_random_polygon(rng) for _ in range(2)]
        fan = fn.refined_fan(polygons)
        assert fan.rays[0] == fn.X_AXIS and fan.rays[-1] == fn.Y_AXIS
        for polygon in polygons:
            for n in polygon.normals:
                assert fn.Ray(*n) in fan.rays


def test_cone_of():
    fan = fn.refined_fan([polygon_of(make_ideal([(2, 0), (0, 3)]))])
    assert fan.cone_of((5, 1)) == (fn.Ray(1, 0), fn.Ray(3, 2))
    assert fan.cone_of((1, 1)) == (fn.Ray(3, 2), fn.Ray(0, 1))


if __name__ == '__main__':
    doctest.testmod(fn, verbose=True)
