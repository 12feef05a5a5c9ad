import itertools
import math
import random

import numpy as np
import pytest
from gmpy2 import mpq

from spinorfact import factor, kinematics, motions
from spinorfact.multivector import EPS, Multivector, QI, QJ, QK
from spinorfact.polynomials import MVPolynomial, RealPolynomial


def test_classify_elementary():
    one = Multivector.scalar(1)
    rot = kinematics.classify_elementary(one, -Multivector.blade("e12"))
    assert rot.kind == kinematics.ROTATION and rot.witness == 1
    trans = kinematics.classify_elementary(one, -(EPS * QI))
    assert trans.kind == kinematics.TRANSVERSION and trans.witness == 0
    scal = kinematics.classify_elementary(one, -Multivector.blade("e+-"))
    assert scal.kind == kinematics.SCALING and scal.witness == -1
    with pytest.raises(ValueError):
        kinematics.classify_elementary(EPS * QJ, one)


def test_trajectory_matches_published_curve():
    c = motions.circular_translation()
    for lam, mu in ((0, 0), (mpq(3), mpq(4)), (mpq(-1, 2), mpq(2, 3))):
        traj = kinematics.trajectory_curve(c, (-mu, lam, 0))
        num_x = RealPolynomial([-mu + 2, 0, -mu])
        num_y = RealPolynomial([lam, 2, lam])
        assert kinematics.curve_matches_rational(
            traj, (num_x, num_y, RealPolynomial([0])),
            RealPolynomial([1, 0, 1]))


def test_fixed_axis_point_constant():
    rot = MVPolynomial.t_minus(Multivector.blade("e12"))
    traj = kinematics.trajectory_curve(rot, (0, 0, mpq(5, 2)))
    assert kinematics.is_projectively_constant(traj)
    moving = kinematics.trajectory_curve(rot, (1, 0, 0))
    assert not kinematics.is_projectively_constant(moving)


def test_rotation_centers():
    for lam, mu in ((0, 0), (3, 4), (mpq(1, 3), mpq(-5, 7))):
        h1, h2 = factor.circular_translation_family(lam, mu)
        c1, c2 = kinematics.circular_rotation_centers(lam, mu)
        assert kinematics.rotation_center_check(h1, c1)["pass"]
        assert kinematics.rotation_center_check(h2, c2)["pass"]
    h1, _ = factor.circular_translation_family(0, 0)
    assert not kinematics.rotation_center_check(h1, (1, 1, 1))["pass"]


def test_parallelogram_distances():
    ts = [mpq(k, 5) for k in range(-5, 5)]
    rep = kinematics.parallelogram_distance_check((0, 0), (3, 4), ts)
    assert rep["pass"]
    rep = kinematics.parallelogram_distance_check(
        (mpq(1, 2), mpq(1, 3)), (mpq(1, 2), mpq(1, 3)), ts)
    assert rep["pass"]


def test_cocircular():
    on_circle = [(1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0)]
    on_circle = [tuple(mpq(v) for v in p) for p in on_circle]
    assert kinematics.cocircular(on_circle)
    off = on_circle[:3] + [(mpq(1), mpq(1), mpq(1))]
    assert not kinematics.cocircular(off)
    # collinear points count as a circle through infinity
    line = [(mpq(k), mpq(0), mpq(0)) for k in range(4)]
    assert kinematics.cocircular(line)
    floats = [(math.cos(a) + 2, math.sin(a), 3.0)
              for a in (0.1, 0.7, 2.2, 4.0)]
    assert kinematics.cocircular(floats)


def test_villarceau_trajectories_cocircular():
    rng = random.Random(13)
    v = motions.villarceau()
    ts = [mpq(k) for k in (-2, -1, 0, 1, 2, 3)]
    for _ in range(5):
        p = tuple(mpq(rng.randint(-6, 6), rng.randint(1, 4))
                  for _ in range(3))
        traj = kinematics.trajectory_curve(v, p)
        samples = [traj.sample(t) for t in ts]
        for quad in itertools.combinations(samples, 4):
            assert kinematics.cocircular(list(quad))


def test_surface_diagonal_is_trajectory():
    h1, h2 = factor.villarceau_family(*factor.villarceau_sphere_point(1, 1))
    traj = kinematics.trajectory_curve(motions.villarceau(), (2, 0, 0))
    for t in (mpq(0), mpq(1), mpq(-1, 2)):
        grid = kinematics.surface_grid(h1, h2, (2, 0, 0), [t], [t])
        assert grid.nodes[0][0] == traj.sample(t)


def test_second_fundamental_form():
    h1, h2 = factor.villarceau_family(0, 0, mpq(1, 2))
    grid = np.linspace(-1.0, 1.0, 15)
    res = kinematics.second_fundamental_offdiag(
        kinematics.surface_sampler(h1, h2, (2, 0, 0)), grid, grid)
    assert res["max_offdiag"] < 1e-6
    assert res["skipped"] == 0
    bad = kinematics.second_fundamental_offdiag(
        kinematics.monkey_saddle_sampler, grid, grid)
    assert bad["max_offdiag"] > 1e-6
    flat = kinematics.second_fundamental_offdiag(
        kinematics.plane_sampler, grid, grid)
    assert flat["max_offdiag"] < 1e-6


def test_same_trajectory_circle():
    v = motions.villarceau()
    p = (mpq(2), mpq(0), mpq(0))
    traj = kinematics.trajectory_curve(v, p)
    q = traj.sample(mpq(3, 2))
    assert kinematics.same_trajectory_circle(v, p, q)
    assert not kinematics.same_trajectory_circle(v, p, (mpq(5), mpq(5), mpq(0)))


def test_hopf_disjointness_and_crossing_detector():
    v = motions.villarceau()
    pts = [(1, 2, 0), (0, 1, 1), (mpq(1, 2), 0, mpq(1, 3)), (2, 2, 2)]
    rep = kinematics.hopf_disjointness(v, pts, n_samples=64)
    assert rep["pass"]
    assert all(r["verdict"] in ("disjoint", "identical")
               for r in rep["pairs"])
    # control: two plain rotations about intersecting axes give crossing
    # circles; the detector must flag them
    rot1 = MVPolynomial.t_minus(Multivector.blade("e12"))
    rot2 = MVPolynomial.t_minus(Multivector.blade("e13"))
    bad = kinematics.hopf_disjointness([rot1, rot2], [(1, 0, 0), (1, 0, 0)],
                                       n_samples=64)
    assert not bad["pass"]
    assert any(r["verdict"] == "crossing" for r in bad["pairs"])


def test_null_point_analysis():
    v_rep = kinematics.null_point_analysis(motions.villarceau())
    assert v_rep["n1_null"] and v_rep["n2_null"]
    assert v_rep["all_line_points_singular"]
    assert len(v_rep["secant"]) >= 10
    c_rep = kinematics.null_point_analysis(motions.circular_translation())
    assert c_rep["secant_all_singular"]
    from spinorfact.scalars import I
    n1 = (EPS * QI).to_complex() + (EPS * QJ).to_complex().scale(I)
    assert c_rep["n1"].projectively_equal(n1)
    assert c_rep["n2"].projectively_equal(n1.conjugate_complex())
    with pytest.raises(ValueError):
        kinematics.null_point_analysis(
            MVPolynomial.t_minus(Multivector.blade("e12")))


def test_quasi_elliptic():
    rep = kinematics.quasi_elliptic_checks(motions.circular_translation())
    assert rep["k_component_zero"]
    assert rep["c_at_i_is_n1"] and rep["c_at_minus_i_is_n2"]


def test_exp_correspondence():
    phis = [0.15 + 0.29 * k for k in range(10)]
    rep = kinematics.exp_correspondence(phis)
    assert rep["pass"]
    assert all(s["trig_vs_poly"] < 1e-12 for s in rep["samples"])
    # the full-angle convention is the consistent one
    assert all(s["exp_full_angle_vs_trig"] < 1e-10 for s in rep["samples"])
    assert any(s["exp_half_angle_vs_trig"] > 1e-3 for s in rep["samples"])
