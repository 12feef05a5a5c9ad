"""Verification suites: every exact identity and numerical check of the
two flagship motions, bundled into deterministic reports.

All algebraic checks run in exact rational (or complexified rational)
arithmetic; float appears only in the finite-difference surface check, the
exponential correspondence, and circle-distance sampling, each of which
reports its tolerance.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass, field

import numpy as np
from gmpy2 import mpq

from . import factor, kinematics, motions
from .mpoly import MPoly
from .multivector import (EPS, Multivector, QI, QJ, QK, encode_plane,
                          encode_sphere)
from .polynomials import (DegenerateRemainderError, MVPolynomial,
                          RealPolynomial, generic_right_zero)
from .scalars import I, rat

SUITES = ("algebra", "spinor", "circular", "villarceau", "imagespace", "all")


@dataclass
class Config:
    """Tolerances, sample counts, and determinism knobs."""
    circularity_tol: float = 1e-9
    second_form_tol: float = 1e-6
    exp_tol: float = 1e-12
    fd_step: float = 1e-4
    grid_n: int = 41
    family_samples: int = 25
    line_samples: int = 10
    circle_samples: int = 96
    disjoint_tol: float = 1e-6
    random_samples: int = 200
    seed: int = 0
    out_dir: str = "out"

    def validate(self):
        for name in ("circularity_tol", "second_form_tol", "exp_tol",
                     "fd_step", "disjoint_tol"):
            if getattr(self, name) <= 0:
                raise ValueError("%s must be positive" % name)

    @classmethod
    def from_dict(cls, d):
        cfg = cls(**d)
        cfg.validate()
        return cfg


class Checks:
    def __init__(self):
        self.items = []

    def add(self, check_id, ok, provenance="exact", residual=None):
        self.items.append({
            "id": check_id,
            "status": "pass" if ok else "fail",
            "provenance": provenance,
            "residual": residual,
        })
        return ok

    @property
    def ok(self):
        return all(c["status"] == "pass" for c in self.items)


def _rand_rat(rng, span=8, den=4):
    return mpq(rng.randint(-span, span), rng.randint(1, den))


def _rand_mv(rng, n_terms=5, even_only=False):
    from .blades import BLADE_NAMES, EVEN_BLADES, DIM
    pool = EVEN_BLADES if even_only else range(DIM)
    terms = {}
    for b in rng.sample(list(pool), n_terms):
        terms[BLADE_NAMES[b]] = _rand_rat(rng)
    return Multivector.from_terms(terms)


def _rand_vector(rng):
    """Random sphere/plane-type grade-1 vector."""
    if rng.random() < 0.5:
        return encode_sphere([_rand_rat(rng) for _ in range(3)],
                             abs(_rand_rat(rng)) + 1).mv
    n = rng.choice([(1, 0, 0), (0, 1, 0), (0, 0, 1),
                    (mpq(3, 5), mpq(4, 5), 0)])
    return encode_plane(n, _rand_rat(rng)).mv


# -- suites -------------------------------------------------------------------


def suite_algebra(cfg: Config) -> Checks:
    rng = random.Random(cfg.seed)
    ch = Checks()
    gens = ["e1", "e2", "e3", "e+", "e-"]
    sig = [1, 1, 1, 1, -1]
    ch.add("algebra/signature",
           all(Multivector.blade(g) * Multivector.blade(g)
               == Multivector.scalar(s) for g, s in zip(gens, sig)))
    ch.add("algebra/anticommutation",
           all(Multivector.blade(a) * Multivector.blade(b)
               == -(Multivector.blade(b) * Multivector.blade(a))
               for a, b in itertools.combinations(gens, 2)))
    rev_signs = {0: 1, 1: 1, 2: -1, 3: -1, 4: 1, 5: 1}
    from .blades import BLADE_NAMES, grade, DIM
    ch.add("algebra/reversion-signs",
           all(Multivector.blade(BLADE_NAMES[b]).reverse()
               == Multivector.blade(BLADE_NAMES[b], rev_signs[grade(b)])
               for b in range(1, DIM)))
    ch.add("algebra/eps-squared-zero", (EPS * EPS).is_zero())
    ch.add("algebra/ijk", QI * QJ * QK == Multivector.scalar(-1))
    ch.add("algebra/quaternion-squares",
           all(q * q == Multivector.scalar(-1) for q in (QI, QJ, QK)))

    ok = True
    for _ in range(cfg.random_samples):
        c = [_rand_rat(rng) for _ in range(3)]
        r = _rand_rat(rng)
        s = encode_sphere(c, r).mv
        ok &= s * s.reverse() == Multivector.scalar(r * r)
    ch.add("algebra/sphere-norm", ok)

    ok = True
    for _ in range(cfg.random_samples):
        a, b, c = (_rand_mv(rng) for _ in range(3))
        ok &= (a * b) * c == a * (b * c)
    ch.add("algebra/associativity", ok)

    ok = True
    for _ in range(cfg.random_samples // 2):
        a, b = _rand_mv(rng), _rand_mv(rng)
        ok &= (a * b).reverse() == b.reverse() * a.reverse()
    ch.add("algebra/reversion-antiautomorphism", ok)

    ok = True
    for _ in range(cfg.random_samples // 2):
        a = _rand_mv(rng, even_only=True)
        b = _rand_mv(rng, even_only=True)
        ok &= (a * b).is_even()
    ch.add("algebra/even-closure", ok)

    ok = True
    for _ in range(20):
        mirror = _rand_vector(rng)
        s = encode_sphere([_rand_rat(rng) for _ in range(3)],
                          abs(_rand_rat(rng)) + 1).mv
        image = mirror * s * mirror.reverse()
        ok &= image.grades() == [1]
        n = image * image.reverse()
        ok &= n.is_scalar()
    ch.add("algebra/reflection-preserves-spheres", ok)

    ok = True
    for _ in range(10):
        pair = _rand_vector(rng) * _rand_vector(rng)
        viol = pair.study_violation()
        ok &= viol[0].is_zero() and viol[1].is_zero()
    ch.add("algebra/study-variety-reflections", ok)

    inv = (EPS * QJ).is_singular()
    ch.add("algebra/eps-j-singular", inv)
    a = Multivector.scalar(3) + Multivector.blade("e12", 2)
    ch.add("algebra/inverse-roundtrip",
           a.inverse() is not None and a * a.inverse() == Multivector.scalar(1))
    return ch


def _expected_remainders():
    return {
        motions.CIRCULAR_TRANSLATION: (-(EPS * QJ), -(EPS * QI)),
        motions.VILLARCEAU: (-(motions.B_MINUS + motions.B_PLUS),
                             Multivector.blade("e123+")
                             - Multivector.scalar(1)),
    }


def suite_spinor(cfg: Config) -> Checks:
    rng = random.Random(cfg.seed)
    ch = Checks()
    m = RealPolynomial([1, 0, 1])
    m_sq = m * m
    expected = _expected_remainders()
    for name in motions.MOTION_NAMES:
        c = motions.by_name(name)
        ch.add("spinor/norm-%s" % name, c.norm_poly() == m_sq)
        q, r = c.divmod_real(m)
        r1e, r0e = expected[name]
        ch.add("spinor/remainder-%s" % name,
               r.coeff(1) == r1e and r.coeff(0) == r0e
               and q == MVPolynomial.constant(Multivector.scalar(1)))
        ch.add("spinor/r1-singular-%s" % name, r.coeff(1).is_singular())
        try:
            generic_right_zero(r)
            degenerate = False
        except DegenerateRemainderError:
            degenerate = True
        ch.add("spinor/generic-zero-degenerate-%s" % name, degenerate)

    # invertible-remainder contrast case
    toy = (MVPolynomial.t_minus(Multivector.blade("e12"))
           * MVPolynomial.t_minus(Multivector.blade("e13")))
    _, r = toy.divmod_real(toy.norm_poly().monic_sqrt())
    h2 = generic_right_zero(r)
    ch.add("spinor/generic-zero-toy", h2 == Multivector.blade("e13"))
    ch.add("spinor/extract-toy",
           toy.extract_right_factor(h2)
           == MVPolynomial.t_minus(Multivector.blade("e12")))

    v = motions.villarceau()
    ch.add("spinor/right-zero-villarceau",
           v.evaluate_right(motions.B_PLUS).is_zero())
    ch.add("spinor/extract-villarceau",
           v.extract_right_factor(motions.B_PLUS)
           == MVPolynomial.t_minus(motions.B_MINUS))
    c = motions.circular_translation()
    ch.add("spinor/right-zero-circular",
           c.evaluate_right(-QK).is_zero())
    ch.add("spinor/extract-circular",
           c.extract_right_factor(-QK)
           == MVPolynomial.t_minus(QK + EPS * QJ))

    ok = True
    for _ in range(30):
        p = MVPolynomial.t_minus(_rand_vector(rng) * _rand_vector(rng))
        q = MVPolynomial.t_minus(_rand_vector(rng) * _rand_vector(rng))
        ok &= (p * q).norm_poly() == p.norm_poly() * q.norm_poly()
        ok &= (p * q).reverse() == q.reverse() * p.reverse()
    ch.add("spinor/norm-multiplicative", ok)

    cc = c.to_complex()
    vv = v.to_complex()
    n1_v = (Multivector.blade("e123+") - Multivector.scalar(1)).to_complex() \
        - (motions.B_MINUS + motions.B_PLUS).to_complex().scale(I)
    ch.add("spinor/villarceau-n1", vv.evaluate_scalar(I) == n1_v)
    ch.add("spinor/villarceau-n2",
           vv.evaluate_scalar(-I) == n1_v.conjugate_complex())
    n1_c = (EPS * QI).to_complex() + (EPS * QJ).to_complex().scale(I)
    ch.add("spinor/circular-n1",
           cc.evaluate_scalar(I).projectively_equal(n1_c))
    return ch


def suite_circular(cfg: Config) -> Checks:
    rng = random.Random(cfg.seed)
    ch = Checks()
    c = motions.circular_translation()
    cs = factor.build_constraint_system(c)
    ch.add("circular/equation-counts-scale-merged", cs.counts == (13, 26),
           residual={"scale": list(cs.counts),
                     "verbatim": list(cs.counts_verbatim)})
    lin, residuals = factor.solve_variety(cs)
    ch.add("circular/variety-2dim-no-residuals",
           lin.dimension == 2 and not residuals)
    chart = factor.reparametrize(lin, -QK, [EPS * QI, EPS * QJ],
                                 ("lambda", "mu"))
    ch.add("circular/variety-matches-family-plane",
           not factor.reduce_quadratics(cs, chart))

    ok_prod = ok_refl = ok_centers = True
    for _ in range(cfg.family_samples):
        lam, mu = _rand_rat(rng), _rand_rat(rng)
        h1, h2 = factor.circular_translation_family(lam, mu)
        rep = factor.verify_factorization(c, h1, h2)
        ok_prod &= rep["product_ok"] and rep["spinor_ok"]
        ok_prod &= chart.h2([lam, mu]) == h2
        # h2 -> h1 is reflection in -k followed by translation by eps*j + 2k
        ok_refl &= h1 == (-QK).scale(2) - h2 + EPS * QJ + QK.scale(2)
        c1, c2 = kinematics.circular_rotation_centers(lam, mu)
        ok_centers &= kinematics.rotation_center_check(h1, c1)["pass"]
        ok_centers &= kinematics.rotation_center_check(h2, c2)["pass"]
    ch.add("circular/family-reconstructs", ok_prod)
    ch.add("circular/factor-map-reflection-translation", ok_refl)
    ch.add("circular/rotation-centers", ok_centers)

    ok = True
    for _ in range(5):
        lam, mu = _rand_rat(rng), _rand_rat(rng)
        traj = kinematics.trajectory_curve(c, (-mu, lam, 0))
        num_x = RealPolynomial([-mu + 2, 0, -mu])
        num_y = RealPolynomial([lam, 2, lam])
        num_z = RealPolynomial([0])
        ok &= kinematics.curve_matches_rational(
            traj, (num_x, num_y, num_z), RealPolynomial([1, 0, 1]))
    ch.add("circular/trajectory-formula", ok)

    ok = True
    ts = [mpq(k, 7) for k in range(-4, 6)]
    for _ in range(5):
        p1 = (_rand_rat(rng), _rand_rat(rng))
        p2 = (_rand_rat(rng), _rand_rat(rng))
        ok &= kinematics.parallelogram_distance_check(p1, p2, ts)["pass"]
    ch.add("circular/parallelogram-distances", ok)

    qe = kinematics.quasi_elliptic_checks(c)
    ch.add("circular/plane-of-translations", qe["k_component_zero"])
    ch.add("circular/absolute-points",
           qe["c_at_i_is_n1"] and qe["c_at_minus_i_is_n2"])
    return ch


def suite_villarceau(cfg: Config) -> Checks:
    rng = random.Random(cfg.seed)
    ch = Checks()
    v = motions.villarceau()
    cs = factor.build_constraint_system(v)
    ch.add("villarceau/equation-counts-verbatim",
           cs.counts_verbatim == (17, 26),
           residual={"scale": list(cs.counts),
                     "verbatim": list(cs.counts_verbatim),
                     "scale_merged_pairs": [list(p)
                                            for p in cs.scale_merged_pairs]})
    lin, residuals = factor.solve_variety(cs)
    ch.add("villarceau/variety-3dim-single-residual",
           lin.dimension == 3 and len(residuals) == 1)
    chart = factor.reparametrize(
        lin, Multivector.blade("e12"),
        [motions.S_X, motions.S_Y, motions.S_Z], ("x", "y", "z"))
    chart_res = factor.reduce_quadratics(cs, chart)
    sphere = (MPoly.var(0) * MPoly.var(0) + MPoly.var(1) * MPoly.var(1)
              + (MPoly.var(2) - MPoly.const(mpq(1, 4)))
              * (MPoly.var(2) - MPoly.const(mpq(1, 4)))
              - MPoly.const(mpq(1, 16)))
    ch.add("villarceau/sphere-residual",
           len(chart_res) == 1
           and chart_res[0].normalized() == sphere.normalized())

    pts = [factor.villarceau_sphere_point(_rand_rat(rng), _rand_rat(rng))
           for _ in range(cfg.family_samples)]
    ok_prod = ok_comm = ok_refl = True
    two_m = motions.M_CENTER.scale(2)
    for p in pts:
        h1, h2 = factor.villarceau_family(*p)
        rep = factor.verify_factorization(v, h1, h2)
        ok_prod &= rep["product_ok"] and rep["spinor_ok"]
        ok_comm &= rep["commutator_zero"]
        ok_refl &= h1 + h2 == two_m
    ch.add("villarceau/family-reconstructs", ok_prod)
    ch.add("villarceau/factors-commute", ok_comm)
    ch.add("villarceau/reflection-in-sphere-center", ok_refl)

    h1, h2 = factor.villarceau_family(0, 0, mpq(1, 2))
    ch.add("villarceau/north-pole-recovers-defining-pair",
           h1 == motions.B_MINUS and h2 == motions.B_PLUS)
    h1s, h2s = factor.villarceau_family(0, 0, 0)
    ch.add("villarceau/south-pole-swaps-factors",
           h1s == motions.B_PLUS and h2s == motions.B_MINUS)

    ok = True
    t_vals = [mpq(t) for t in (0, 1, -1, 2, -2, 3)]
    for _ in range(5):
        p = tuple(_rand_rat(rng) for _ in range(3))
        traj = kinematics.trajectory_curve(v, p)
        samples = [traj.sample(t) for t in t_vals]
        ok &= all(kinematics.cocircular(list(s))
                  for s in itertools.combinations(samples, 4))
    ch.add("villarceau/trajectories-are-circles", ok)

    ok = True
    for t in t_vals[:4]:
        g = kinematics.surface_grid(h1, h2, (2, 0, 0), [t], [t])
        traj = kinematics.trajectory_curve(v, (2, 0, 0))
        ok &= g.nodes[0][0] == traj.sample(t)
    ch.add("villarceau/diagonal-equals-trajectory", ok)

    p_alt = factor.villarceau_sphere_point(1, 2)
    h1b, h2b = factor.villarceau_family(*p_alt)
    ok = True
    for t in t_vals[:4]:
        ga = kinematics.surface_grid(h1, h2, (2, 0, 0), [t], [t])
        gb = kinematics.surface_grid(h1b, h2b, (2, 0, 0), [t], [t])
        ok &= ga.nodes[0][0] == gb.nodes[0][0]
    ch.add("villarceau/same-circle-on-different-cyclides", ok)

    ok = True
    for s_fixed in (mpq(0), mpq(1, 3)):
        g = kinematics.surface_grid(h1b, h2b, (2, 0, 0), [s_fixed], t_vals[:4])
        ok &= kinematics.cocircular(list(g.nodes[0]))
        g = kinematics.surface_grid(h1b, h2b, (2, 0, 0), t_vals[:4], [s_fixed])
        ok &= kinematics.cocircular([row[0] for row in g.nodes])
    ch.add("villarceau/parameter-lines-are-circles", ok)

    grid = np.linspace(-1.0, 1.0, cfg.grid_n)
    res = kinematics.second_fundamental_offdiag(
        kinematics.surface_sampler(h1, h2, (2, 0, 0)), grid, grid,
        cfg.fd_step)
    ch.add("villarceau/second-fundamental-form-diagonal",
           res["max_offdiag"] < cfg.second_form_tol and res["skipped"] == 0,
           provenance="float tol=%g step=%g" % (cfg.second_form_tol,
                                                cfg.fd_step),
           residual=res["max_offdiag"])
    res_bad = kinematics.second_fundamental_offdiag(
        kinematics.monkey_saddle_sampler, grid, grid, cfg.fd_step)
    ch.add("villarceau/non-cyclide-control-fails",
           res_bad["max_offdiag"] > cfg.second_form_tol,
           provenance="float tol=%g" % cfg.second_form_tol,
           residual=res_bad["max_offdiag"])

    hopf_pts = [tuple(_rand_rat(rng) for _ in range(3)) for _ in range(7)]
    rep = kinematics.hopf_disjointness(v, hopf_pts,
                                       n_samples=cfg.circle_samples,
                                       tol=cfg.disjoint_tol)
    ch.add("villarceau/hopf-no-crossings", rep["pass"],
           provenance="float tol=%g (sampled falsification)"
           % cfg.disjoint_tol,
           residual=rep["violations"])

    exp_rep = kinematics.exp_correspondence(
        [0.2 + 0.27 * k for k in range(10)], tol=cfg.exp_tol)
    ch.add("villarceau/exp-trig-poly-correspondence", exp_rep["pass"],
           provenance="float tol=%g; %s" % (cfg.exp_tol,
                                            exp_rep["convention"]),
           residual=max(s["trig_vs_poly"] for s in exp_rep["samples"]))
    return ch


def suite_imagespace(cfg: Config) -> Checks:
    ch = Checks()
    v_rep = kinematics.null_point_analysis(motions.villarceau(),
                                           cfg.line_samples)
    ch.add("imagespace/villarceau-null-points",
           v_rep["n1_null"] and v_rep["n2_null"])
    ch.add("imagespace/villarceau-secant-singular",
           v_rep["secant_all_singular"])
    ch.add("imagespace/villarceau-tangents-singular",
           v_rep["tangents_all_singular"])
    c_rep = kinematics.null_point_analysis(motions.circular_translation(),
                                           cfg.line_samples)
    ch.add("imagespace/circular-null-points",
           c_rep["n1_null"] and c_rep["n2_null"])
    ch.add("imagespace/circular-secant-singular",
           c_rep["secant_all_singular"])
    n1 = (EPS * QI).to_complex() + (EPS * QJ).to_complex().scale(I)
    ch.add("imagespace/circular-n1-matches",
           c_rep["n1"].projectively_equal(n1))
    ch.add("imagespace/circular-n2-matches",
           c_rep["n2"].projectively_equal(n1.conjugate_complex()))
    return ch


_SUITE_FUNCS = {
    "algebra": suite_algebra,
    "spinor": suite_spinor,
    "circular": suite_circular,
    "villarceau": suite_villarceau,
    "imagespace": suite_imagespace,
}


def run_suite(name: str, cfg: Config = None) -> dict:
    cfg = cfg or Config()
    cfg.validate()
    if name == "all":
        checks = []
        for sub in ("algebra", "spinor", "circular", "villarceau",
                    "imagespace"):
            checks.extend(_SUITE_FUNCS[sub](cfg).items)
    elif name in _SUITE_FUNCS:
        checks = _SUITE_FUNCS[name](cfg).items
    else:
        raise ValueError("unknown suite %r (choose from %s)"
                         % (name, ", ".join(SUITES)))
    return {
        "suite": name,
        "config": asdict(cfg),
        "checks": checks,
        "pass": all(c["status"] == "pass" for c in checks),
    }
