import random

import pytest
from gmpy2 import mpq

from spinorfact.scalars import (COMPLEX, CRat, FLOAT, I, RATIONAL, rat,
                                scalar_from_str, scalar_to_str)


def test_rat_parsing():
    assert rat("3/4") == mpq(3, 4)
    assert rat(2) == 2
    assert rat(5, 10) == mpq(1, 2)
    with pytest.raises(ValueError):
        rat(0.3)


def test_crat_field_axioms():
    rng = random.Random(11)

    def rnd():
        return CRat(mpq(rng.randint(-9, 9), rng.randint(1, 5)),
                    mpq(rng.randint(-9, 9), rng.randint(1, 5)))

    for _ in range(100):
        a, b, c = rnd(), rnd(), rnd()
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        if b != CRat(0, 0):
            assert (a / b) * b == a


def test_imaginary_unit():
    assert I * I == CRat(-1, 0)
    assert I.conjugate() == CRat(0, -1)
    z = CRat(mpq(2, 3), mpq(-1, 2))
    assert z * z.conjugate() == CRat(z.re * z.re + z.im * z.im, 0)


def test_scalar_str_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        q = mpq(rng.randint(-50, 50), rng.randint(1, 20))
        assert scalar_from_str(scalar_to_str(q, RATIONAL), RATIONAL) == q
        z = CRat(q, mpq(rng.randint(-9, 9), 7))
        assert scalar_from_str(scalar_to_str(z, COMPLEX), COMPLEX) == z
    x = -0.1234567890123456789
    assert scalar_from_str(scalar_to_str(x, FLOAT), FLOAT) == x
