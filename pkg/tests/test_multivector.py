import random

import pytest
from gmpy2 import mpq

from spinorfact.blades import BLADE_NAMES, DIM
from spinorfact.multivector import (EPS, FieldMismatchError, IdealPointError,
                                    Multivector, QI, QJ, QK, decode_point,
                                    encode_plane, encode_point, encode_sphere,
                                    exp_bivector, sandwich)
from spinorfact.scalars import FLOAT, RATIONAL


def rand_mv(rng, n=6):
    terms = {}
    for b in rng.sample(range(DIM), n):
        terms[BLADE_NAMES[b]] = mpq(rng.randint(-8, 8), rng.randint(1, 4))
    return Multivector.from_terms(terms)


@pytest.fixture
def rng():
    return random.Random(42)


def test_ring_axioms(rng):
    for _ in range(150):
        a, b, c = rand_mv(rng), rand_mv(rng), rand_mv(rng)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_reversion(rng):
    for _ in range(100):
        a, b = rand_mv(rng), rand_mv(rng)
        assert (a * b).reverse() == b.reverse() * a.reverse()
        assert a.reverse().reverse() == a
    assert ~QK == -QK


def test_quaternion_relations():
    assert QI * QJ == QK
    assert QJ * QK == QI
    assert QK * QI == QJ
    assert QI * QJ * QK == Multivector.scalar(-1)
    assert (EPS * EPS).is_zero()
    for q in (QI, QJ, QK):
        assert EPS * q == q * EPS


def test_grade_projection(rng):
    for _ in range(30):
        a = rand_mv(rng, 10)
        total = Multivector.zero()
        for k in range(6):
            total = total + a.grade_project(k)
        assert total == a


def test_outer_product_on_vectors(rng):
    for _ in range(40):
        u = encode_point((mpq(rng.randint(-5, 5)), mpq(rng.randint(-5, 5)),
                          mpq(rng.randint(-5, 5)))).mv
        v = encode_point((mpq(rng.randint(-5, 5)), mpq(rng.randint(-5, 5)),
                          mpq(rng.randint(-5, 5)))).mv
        assert u ^ v == -(v ^ u)
        assert (u ^ u).is_zero()


def test_sphere_encoding_norm(rng):
    for _ in range(200):
        c = tuple(mpq(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
        r = mpq(rng.randint(1, 9), rng.randint(1, 4))
        s = encode_sphere(c, r).mv
        assert s * s.reverse() == Multivector.scalar(r * r)
        assert s.reverse() * s == Multivector.scalar(r * r)


def test_point_is_zero_radius_sphere():
    p = (mpq(1, 2), mpq(-2), mpq(3))
    x = encode_point(p).mv
    assert (x * x.reverse()).is_zero()
    assert decode_point(x) == p


def test_plane_unit_norm():
    pl = encode_plane((mpq(3, 5), mpq(4, 5), 0), mpq(7, 2)).mv
    assert pl * pl.reverse() == Multivector.scalar(1)


def test_decode_ideal_point():
    # e+ + e- has equal weight coefficients: the point at infinity
    inf = Multivector.blade("e+") + Multivector.blade("e-")
    with pytest.raises(IdealPointError):
        decode_point(inf)


def test_sandwich_reflects_sphere_in_plane():
    mirror = encode_plane((1, 0, 0), 0).mv  # plane x = 0
    s = encode_sphere((mpq(2), mpq(1), mpq(-1)), mpq(3, 2)).mv
    image = sandwich(mirror, s)
    expected = encode_sphere((mpq(-2), mpq(1), mpq(-1)), mpq(3, 2)).mv
    assert image.projectively_equal(expected)


def test_inverse(rng):
    assert (EPS * QJ).is_singular()
    assert (EPS * QJ).inverse() is None
    found = 0
    while found < 20:
        a = rand_mv(rng, 4)
        inv = a.inverse()
        if inv is None:
            continue
        found += 1
        assert a * inv == Multivector.scalar(1)
        assert inv * a == Multivector.scalar(1)


def test_study_violation(rng):
    # products of two sphere/plane vectors satisfy both conditions
    for _ in range(10):
        u = encode_sphere((rng.randint(-3, 3), 0, 1), 2).mv
        v = encode_plane((0, 0, 1), mpq(rng.randint(-3, 3))).mv
        g = u * v
        bad_scalar, bad_grade4 = g.study_violation()
        assert bad_scalar.is_zero() and bad_grade4.is_zero()
    violator = Multivector.scalar(1) + Multivector.blade("e123+", mpq(1, 3))
    assert not violator.study_violation()[0].is_zero()


def test_field_mismatch():
    a = Multivector.scalar(1)
    b = Multivector.scalar(1.0, FLOAT)
    with pytest.raises(FieldMismatchError):
        a + b


def test_exp_bivector_is_rotation():
    import math
    # the sandwich doubles the angle: exp at pi/4 rotates by pi/2
    g = exp_bivector(Multivector.blade("e12", 1.0, FLOAT), math.pi / 4)
    p = encode_point((1.0, 0.0, 0.0), FLOAT).mv
    image = sandwich(g, p)
    x, y, z = decode_point(image)
    assert abs(x) < 1e-12 and abs(abs(y) - 1.0) < 1e-12 and abs(z) < 1e-12
