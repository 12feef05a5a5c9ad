import random

import pytest
from gmpy2 import mpq

from spinorfact import motions
from spinorfact.multivector import (EPS, Multivector, QI, QJ, QK,
                                    encode_plane, encode_sphere)
from spinorfact.polynomials import (DegenerateRemainderError, MVPolynomial,
                                    NotSpinorError, RealPolynomial,
                                    generic_right_zero)


def rand_spinor_linear(rng):
    """t - h with h a product of two sphere/plane vectors (always a spinor)."""
    def vec():
        if rng.random() < 0.5:
            return encode_sphere([mpq(rng.randint(-4, 4), rng.randint(1, 3))
                                  for _ in range(3)],
                                 mpq(rng.randint(1, 5), rng.randint(1, 3))).mv
        return encode_plane((1, 0, 0), mpq(rng.randint(-3, 3))).mv
    return MVPolynomial.t_minus(vec() * vec())


def test_real_polynomial_basics():
    p = RealPolynomial([1, 0, 1])
    assert p * p == RealPolynomial([1, 0, 2, 0, 1])
    assert (p * p).monic_sqrt() == p
    assert RealPolynomial([2, 1]).monic_sqrt() is None
    assert p.evaluate(mpq(1, 2)) == mpq(5, 4)


def test_norm_multiplicative():
    rng = random.Random(17)
    for _ in range(40):
        p, q = rand_spinor_linear(rng), rand_spinor_linear(rng)
        assert p.is_spinor() and q.is_spinor()
        assert (p * q).norm_poly() == p.norm_poly() * q.norm_poly()
        assert (p * q).reverse() == q.reverse() * p.reverse()


def test_not_spinor():
    # h*~h = 1 + b^2 + 2b for the grade-4 blade b: not a real polynomial
    bad = MVPolynomial.t_minus(Multivector.scalar(1)
                               + Multivector.blade("e123-"))
    with pytest.raises(NotSpinorError):
        bad.norm_poly()


def test_divmod_reconstruction():
    rng = random.Random(23)
    for _ in range(20):
        c = rand_spinor_linear(rng) * rand_spinor_linear(rng)
        m = RealPolynomial([mpq(rng.randint(-3, 3)), mpq(rng.randint(-3, 3)), 1])
        q, r = c.divmod_real(m)
        assert q * MVPolynomial.from_real(m) + r == c
        assert r.degree() < 2


def test_right_zero_iff_right_factor():
    rng = random.Random(29)
    for _ in range(20):
        left, right = rand_spinor_linear(rng), rand_spinor_linear(rng)
        c = left * right
        h = -right.coeff(0)  # right is t - h
        assert c.evaluate_right(h).is_zero()
        assert c.extract_right_factor(h) == left


def test_generic_right_zero_toy():
    toy = (MVPolynomial.t_minus(Multivector.blade("e12"))
           * MVPolynomial.t_minus(Multivector.blade("e13")))
    _, r = toy.divmod_real(toy.norm_poly().monic_sqrt())
    assert generic_right_zero(r) == Multivector.blade("e13")


def test_degenerate_remainders():
    m = RealPolynomial([1, 0, 1])
    for name in motions.MOTION_NAMES:
        _, r = motions.by_name(name).divmod_real(m)
        assert r.coeff(1).is_singular()
        with pytest.raises(DegenerateRemainderError):
            generic_right_zero(r)


def test_flagship_norms_and_remainders():
    m = RealPolynomial([1, 0, 1])
    msq = m * m
    c = motions.circular_translation()
    v = motions.villarceau()
    for poly in (c, v):
        assert poly.norm_poly() == msq
        assert poly.reverse() * poly == poly * poly.reverse()
    _, rc = c.divmod_real(m)
    assert rc.coeff(1) == -(EPS * QJ)
    assert rc.coeff(0) == -(EPS * QI)
    _, rv = v.divmod_real(m)
    assert rv.coeff(1) == -(motions.B_MINUS + motions.B_PLUS)
    assert rv.coeff(0) == Multivector.blade("e123+") - Multivector.scalar(1)


def test_evaluate_right_is_right_division_remainder():
    # right evaluation must use the non-commutative substitution t -> h
    c = motions.villarceau()
    h = motions.B_PLUS
    assert c.evaluate_right(h).is_zero()
    # the commuting partner e12 is also a right zero; e13 is not
    assert c.evaluate_right(motions.B_MINUS).is_zero()
    assert not c.evaluate_right(Multivector.blade("e13")).is_zero()


def test_complex_evaluation():
    from spinorfact.scalars import I
    v = motions.villarceau().to_complex()
    n1 = v.evaluate_scalar(I)
    assert n1.null_value() == 0
    assert n1.conjugate_complex() == v.evaluate_scalar(-I)
