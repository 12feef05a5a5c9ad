import random

import pytest
from gmpy2 import mpq

from spinorfact import factor, motions
from spinorfact.mpoly import MPoly
from spinorfact.multivector import EPS, Multivector, QI, QJ, QK


@pytest.fixture(scope="module")
def circular_cs():
    return factor.build_constraint_system(motions.circular_translation())


@pytest.fixture(scope="module")
def villarceau_cs():
    return factor.build_constraint_system(motions.villarceau())


def test_equation_counts(circular_cs, villarceau_cs):
    # merging scale-proportional duplicates gives 13 linear equations;
    # keeping equations that agree only up to a rational factor separate
    # gives 17.  Both systems have 26 distinct quadratic equations.
    assert circular_cs.counts == (13, 26)
    assert villarceau_cs.counts == (13, 26)
    assert circular_cs.counts_verbatim == (17, 26)
    assert villarceau_cs.counts_verbatim == (17, 26)


def test_scale_merge_accounting(circular_cs, villarceau_cs):
    # the 17 -> 13 reduction is a bijection up to scale: each merge keeps
    # one of a pair of equations with proportional coefficient vectors
    for cs in (circular_cs, villarceau_cs):
        n_linear, _ = cs.counts
        n_verbatim, _ = cs.counts_verbatim
        assert n_verbatim - n_linear == 4
        assert len(cs.scale_merged_pairs) >= 4
        for kept, dropped in cs.scale_merged_pairs:
            assert kept != dropped


def test_circular_variety(circular_cs):
    lin, residuals = factor.solve_variety(circular_cs)
    assert lin.dimension == 2
    assert residuals == []
    chart = factor.reparametrize(lin, -QK, [EPS * QI, EPS * QJ],
                                 ("lambda", "mu"))
    assert factor.reduce_quadratics(circular_cs, chart) == []
    lam, mu = mpq(3, 7), mpq(-2, 5)
    _, h2 = factor.circular_translation_family(lam, mu)
    assert chart.h2([lam, mu]) == h2


def test_villarceau_variety(villarceau_cs):
    lin, residuals = factor.solve_variety(villarceau_cs)
    assert lin.dimension == 3
    assert len(residuals) == 1
    chart = factor.reparametrize(
        lin, Multivector.blade("e12"),
        [motions.S_X, motions.S_Y, motions.S_Z], ("x", "y", "z"))
    res = factor.reduce_quadratics(villarceau_cs, chart)
    assert len(res) == 1
    x, y, z = MPoly.var(0), MPoly.var(1), MPoly.var(2)
    quarter = MPoly.const(mpq(1, 4))
    sphere = (x * x + y * y + (z - quarter) * (z - quarter)
              - MPoly.const(mpq(1, 16)))
    assert res[0].normalized() == sphere.normalized()


def test_circular_family_exact():
    rng = random.Random(31)
    c = motions.circular_translation()
    for _ in range(25):
        lam = mpq(rng.randint(-20, 20), rng.randint(1, 9))
        mu = mpq(rng.randint(-20, 20), rng.randint(1, 9))
        h1, h2 = factor.circular_translation_family(lam, mu)
        rep = factor.verify_factorization(c, h1, h2)
        assert rep["pass"]


def test_villarceau_family_exact():
    rng = random.Random(37)
    v = motions.villarceau()
    two_m = motions.M_CENTER.scale(2)
    for _ in range(25):
        u = mpq(rng.randint(-20, 20), rng.randint(1, 9))
        w = mpq(rng.randint(-20, 20), rng.randint(1, 9))
        p = factor.villarceau_sphere_point(u, w)
        assert factor.on_villarceau_sphere(*p)
        h1, h2 = factor.villarceau_family(*p)
        rep = factor.verify_factorization(v, h1, h2)
        assert rep["pass"] and rep["commutator_zero"]
        assert h1 + h2 == two_m


def test_villarceau_poles():
    h1, h2 = factor.villarceau_family(0, 0, mpq(1, 2))
    assert (h1, h2) == (motions.B_MINUS, motions.B_PLUS)
    h1, h2 = factor.villarceau_family(0, 0, 0)
    assert (h1, h2) == (motions.B_PLUS, motions.B_MINUS)


def test_off_sphere_rejected():
    assert not factor.on_villarceau_sphere(1, 1, 1)
    with pytest.raises(ValueError):
        factor.villarceau_family(1, 1, 1)


def test_reflection_structure():
    pts = [factor.villarceau_sphere_point(u, w)
           for u, w in ((0, 0), (1, 0), (2, 3), (mpq(1, 2), mpq(-1, 3)))]
    rep = factor.reflection_structure_check(pts)
    assert rep["pass"]


def test_linear_solutions_are_right_zeros():
    # every multivector in the solved variety is a right zero of the motion
    rng = random.Random(41)
    c = motions.circular_translation()
    cs = factor.build_constraint_system(c)
    lin, _ = factor.solve_variety(cs)
    for _ in range(10):
        params = [mpq(rng.randint(-6, 6), rng.randint(1, 4))
                  for _ in range(lin.dimension)]
        assert c.evaluate_right(lin.h2(params)).is_zero()
