"""Kinematic and geometric verification layer.

Trajectories, elementary-motion classification, circularity via conformal
outer products, Dupin-cyclide surface sampling with a numerical second
fundamental form check, trajectory disjointness, and image-space null-point
analysis. Exact arithmetic wherever the statement is exact; floats only for
finite differences and distance sampling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from gmpy2 import mpq

from . import factor, linalg, motions
from .blades import BLADE_NAMES, DIM
from .multivector import (EPS, IdealPointError, Multivector, QI, QJ, QK,
                          encode_point, exp_bivector)
from .polynomials import MVPolynomial, RealPolynomial
from .scalars import COMPLEX, FLOAT, I, RATIONAL, rat

ROTATION = "rotation"
TRANSVERSION = "transversion"
SCALING = "scaling"


@dataclass(frozen=True)
class ElementaryMotionClass:
    kind: str
    witness: object  # the real value of h * ~h


def classify_elementary(a: Multivector, b: Multivector) -> ElementaryMotionClass:
    """Classify the linear motion a t + b by the sign of h*~h, h = a^-1 b."""
    if not (a.is_even() and b.is_even()):
        raise ValueError("even multivectors required")
    inv = a.inverse()
    if inv is None:
        raise ValueError("leading coefficient is not invertible")
    h = inv * b
    w = h * h.reverse()
    if not w.is_scalar() or w != h.reverse() * h:
        raise ValueError("h*~h is not real: not a spinor motion")
    value = w.scalar_part()
    if value > 0:
        kind = ROTATION
    elif value == 0:
        kind = TRANSVERSION
    else:
        kind = SCALING
    return ElementaryMotionClass(kind, value)


# -- trajectories -------------------------------------------------------------


@dataclass(frozen=True)
class TrajectoryCurve:
    """Homogeneous polynomial curve C(t) x ~C(t) of a tracked point."""
    motion: MVPolynomial
    point: tuple
    curve: MVPolynomial

    def component(self, blade_name) -> RealPolynomial:
        idx = BLADE_NAMES.index(blade_name)
        return RealPolynomial([c.coeffs[idx] for c in self.curve.coeffs],
                              self.curve.field)

    def weight(self) -> RealPolynomial:
        return self.component("e-") - self.component("e+")

    def sample(self, t):
        """Cartesian point at parameter t; raises IdealPointError at poles."""
        v = self.curve.evaluate_scalar(t)
        w = v["e-"] - v["e+"]
        if w == 0:
            raise IdealPointError("trajectory passes through infinity at t=%s" % t)
        return (v["e1"] / w, v["e2"] / w, v["e3"] / w)

    def sample_many(self, ts):
        out = []
        for t in ts:
            try:
                out.append((t, self.sample(t)))
            except IdealPointError:
                out.append((t, None))
        return out


def trajectory_curve(c: MVPolynomial, point) -> TrajectoryCurve:
    """Symbolic homogeneous trajectory of a Cartesian point under C."""
    x = encode_point(point, c.field).mv
    curve = c * MVPolynomial.constant(x) * c.reverse()
    assert all(mv.is_zero() or mv.grades() == [1] for mv in curve.coeffs)
    return TrajectoryCurve(c, tuple(point), curve)


def curve_matches_rational(traj: TrajectoryCurve, numerators, denominator):
    """Exact equality of the trajectory with a target rational curve
    (num_x, num_y, num_z) / den, by polynomial cross-multiplication."""
    w = traj.weight()
    for name, num in zip(("e1", "e2", "e3"), numerators):
        if traj.component(name) * denominator != num * w:
            return False
    return True


def _proportional(v: Multivector, ref: Multivector) -> bool:
    b0 = next((b for b in range(DIM) if ref.coeffs[b] != 0), None)
    if b0 is None:
        return v.is_zero()
    return all(v.coeffs[b] * ref.coeffs[b0] == ref.coeffs[b] * v.coeffs[b0]
               for b in range(DIM))


def is_projectively_constant(traj: TrajectoryCurve) -> bool:
    """All curve coefficients pairwise proportional: fixed projective point."""
    ref = next((c for c in traj.curve.coeffs if not c.is_zero()), None)
    if ref is None:
        return True
    return all(_proportional(c, ref) for c in traj.curve.coeffs)


def rotation_center_check(h: Multivector, expected_center):
    """The center of a conformal rotation t - h is a fixed point of its
    trajectory."""
    cls = classify_elementary(Multivector.scalar(1, h.field), h)
    if cls.kind != ROTATION:
        raise ValueError("t - h is not a conformal rotation (got %s)" % cls.kind)
    traj = trajectory_curve(MVPolynomial.t_minus(h), expected_center)
    constant = is_projectively_constant(traj)
    return {"pass": constant, "class": cls.kind, "center": tuple(expected_center)}


# -- circular-translation linkage geometry ------------------------------------


def circular_rotation_centers(lam, mu):
    """Rotation centers of the two factors of the circular translation."""
    lam, mu = rat(lam), rat(mu)
    return (1 - mu, lam, mpq(0)), (-mu, lam, mpq(0))


def _dist2(p, q):
    return sum((a - b) * (a - b) for a, b in zip(p, q))


def parallelogram_distance_check(pair1, pair2, t_samples):
    """Exact distance identities of the parallelogram linkage.

    For each parameter pair, dist(c1, c2(t)) = 1 at every sample; the two
    crank-end distances agree with the parameter distance.
    """
    c = motions.circular_translation()
    results = {"crank_length": [], "parallelogram": [], "pass": True}
    param_d2 = ((rat(pair1[0]) - rat(pair2[0])) ** 2
                + (rat(pair1[1]) - rat(pair2[1])) ** 2)
    trajs = {}
    for pair in (pair1, pair2):
        lam, mu = pair
        trajs[pair] = trajectory_curve(c, (-rat(mu), rat(lam), 0))
    for t in t_samples:
        for pair in (pair1, pair2):
            c1, _ = circular_rotation_centers(*pair)
            d2 = _dist2(c1, trajs[pair].sample(t))
            ok = d2 == 1
            results["crank_length"].append({"pair": pair, "t": t, "ok": ok})
            results["pass"] &= ok
        c1a, _ = circular_rotation_centers(*pair1)
        c1b, _ = circular_rotation_centers(*pair2)
        fixed_d2 = _dist2(c1a, c1b)
        moving_d2 = _dist2(trajs[pair1].sample(t), trajs[pair2].sample(t))
        ok = fixed_d2 == param_d2 and moving_d2 == param_d2
        results["parallelogram"].append({"t": t, "ok": ok})
        results["pass"] &= ok
    return results


# -- circularity --------------------------------------------------------------


def cocircular(points, tol=1e-9):
    """Whether four Cartesian points lie on a common circle (or line).

    Exact for rational input (vanishing 4-fold conformal outer product);
    for floats the wedge of normalized encodings must stay below tol.
    """
    if len(points) != 4:
        raise ValueError("exactly four points required")
    is_float = any(isinstance(v, float) and not float(v).is_integer()
                   for p in points for v in p)
    field = FLOAT if is_float else RATIONAL
    encoded = [encode_point(p, field).mv for p in points]
    if field == RATIONAL:
        w = encoded[0] ^ encoded[1] ^ encoded[2] ^ encoded[3]
        return w.is_zero()
    normed = []
    for e in encoded:
        s = max(abs(c) for c in e.coeffs)
        normed.append(e / s if s else e)
    w = normed[0] ^ normed[1] ^ normed[2] ^ normed[3]
    return max(abs(c) for c in w.coeffs) < tol


# -- trajectory surfaces ------------------------------------------------------


@dataclass(frozen=True)
class SurfaceGrid:
    """Two-parameter trajectory surface H1(s) H2(t) x ~H2(t) ~H1(s)."""
    h1: Multivector
    h2: Multivector
    point: tuple
    s_values: tuple
    t_values: tuple
    nodes: tuple        # rows over s, columns over t; None where ideal
    failures: tuple     # (i, j) indices of ideal nodes


def surface_sampler(h1: Multivector, h2: Multivector, point):
    """Float sampler (s, t) -> Cartesian numpy array of the trajectory
    surface."""
    f1 = MVPolynomial.t_minus(h1).to_float()
    f2 = MVPolynomial.t_minus(h2).to_float()
    x = encode_point([float(v) for v in point], FLOAT).mv

    def sample(s, t):
        g = f1.evaluate_scalar(s) * f2.evaluate_scalar(t)
        v = g * x * g.reverse()
        w = v["e-"] - v["e+"]
        if w == 0:
            raise IdealPointError("surface point at infinity")
        return np.array([v["e1"] / w, v["e2"] / w, v["e3"] / w])

    return sample


def surface_grid(h1, h2, point, s_values, t_values, field=RATIONAL):
    """Sample the two-parameter surface on a grid; exact at rational nodes
    when the rational field is used."""
    if field == FLOAT:
        h1p = MVPolynomial.t_minus(h1).to_float()
        h2p = MVPolynomial.t_minus(h2).to_float()
        x = encode_point([float(v) for v in point], FLOAT).mv
    else:
        h1p = MVPolynomial.t_minus(h1)
        h2p = MVPolynomial.t_minus(h2)
        x = encode_point(point, field).mv
    rows, failures = [], []
    for i, s in enumerate(s_values):
        g1 = h1p.evaluate_scalar(s)
        row = []
        for j, t in enumerate(t_values):
            g = g1 * h2p.evaluate_scalar(t)
            v = g * x * g.reverse()
            w = v["e-"] - v["e+"]
            if w == 0:
                row.append(None)
                failures.append((i, j))
            else:
                row.append((v["e1"] / w, v["e2"] / w, v["e3"] / w))
        rows.append(tuple(row))
    return SurfaceGrid(h1, h2, tuple(point), tuple(s_values), tuple(t_values),
                       tuple(rows), tuple(failures))


def second_fundamental_offdiag(sampler, s_values, t_values, step=1e-4):
    """Max relative off-diagonal second-fundamental coefficient by central
    differences. Zero (up to noise) characterizes parameter lines that are
    curvature lines, as on a cyclide of Dupin."""
    worst = 0.0
    skipped = 0
    for s in s_values:
        for t in t_values:
            try:
                fs = (sampler(s + step, t) - sampler(s - step, t)) / (2 * step)
                ft = (sampler(s, t + step) - sampler(s, t - step)) / (2 * step)
                fst = (sampler(s + step, t + step) - sampler(s + step, t - step)
                       - sampler(s - step, t + step) + sampler(s - step, t - step)
                       ) / (4 * step * step)
            except IdealPointError:
                skipped += 1
                continue
            normal = np.cross(fs, ft)
            nn = np.linalg.norm(normal)
            scale = np.linalg.norm(fs) * np.linalg.norm(ft)
            if nn < 1e-12 or scale < 1e-12:
                skipped += 1
                continue
            m = abs(np.dot(normal / nn, fst)) / scale
            worst = max(worst, m)
    return {"max_offdiag": worst, "skipped": skipped}


def monkey_saddle_sampler(s, t):
    """Control surface that is not a cyclide; must fail the second
    fundamental form check."""
    return np.array([s, t, s ** 3 - 3 * s * t * t])


def plane_sampler(s, t):
    return np.array([s, t, 0.0])


# -- trajectory circle disjointness -------------------------------------------


def _full_circle_ts(n):
    """Float parameter values covering the whole trajectory circle
    (t = tan(theta) sweeps the real line)."""
    return [math.tan(math.pi * (k + 0.5) / n - math.pi / 2)
            for k in range(n)]


def _circle_cloud(traj, thetas):
    return np.array([traj.sample(math.tan(th)) for th in thetas])


def _min_circle_distance(traj1, traj2, n=96, refine=6):
    """Minimum distance between two sampled trajectory circles, sharpened
    by local refinement around the closest parameter pair (crossing circles
    converge to ~0, disjoint ones to their true separation)."""
    th1 = np.pi * (np.arange(n) + 0.5) / n - np.pi / 2
    th2 = th1.copy()
    half = np.pi / 2
    best = None
    for _ in range(refine + 1):
        c1 = _circle_cloud(traj1, th1)
        c2 = _circle_cloud(traj2, th2)
        d = np.sqrt(((c1[:, None, :] - c2[None, :, :]) ** 2).sum(-1))
        i, j = np.unravel_index(int(d.argmin()), d.shape)
        best = float(d[i, j])
        half = 2 * (2 * half / n)  # two sample spacings around the minimum
        th1 = np.linspace(th1[i] - half, th1[i] + half, n)
        th2 = np.linspace(th2[j] - half, th2[j] + half, n)
    return best


def _exact_circle_samples(c: MVPolynomial, p, need=3):
    traj = trajectory_curve(c, tuple(rat(v) for v in p))
    samples = []
    for t in (0, 1, -1, 2, -2, 3):
        try:
            samples.append(traj.sample(rat(t)))
        except IdealPointError:
            continue
        if len(samples) == need:
            return samples
    raise ValueError("could not collect %d finite trajectory samples" % need)


def same_trajectory_circle(c: MVPolynomial, p1, p2, c2=None) -> bool:
    """Exact: the trajectory circles of p1 (under c) and p2 (under c2,
    default c) coincide."""
    samples1 = _exact_circle_samples(c, p1)
    if c2 is None:
        return cocircular(samples1 + [tuple(rat(v) for v in p2)])
    samples2 = _exact_circle_samples(c2, p2)
    return all(cocircular(samples1 + [q]) for q in samples2)


def hopf_disjointness(c, points, n_samples=128, tol=1e-6):
    """Pairwise check that trajectory circles are identical or disjoint.

    `c` is one motion, or a sequence of motions (one per tracked point, for
    injected control cases). Sampled falsification only: a crossing pair is
    flagged when distinct circles approach within tol.
    """
    cs = list(c) if isinstance(c, (list, tuple)) else [c] * len(points)
    trajs = [trajectory_curve(ci.to_float(), [float(v) for v in p])
             for ci, p in zip(cs, points)]
    report = {"pairs": [], "violations": 0, "pass": True}
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            identical = same_trajectory_circle(
                cs[i], points[i], points[j],
                None if cs[j] is cs[i] else cs[j])
            min_dist = (None if identical else
                        _min_circle_distance(trajs[i], trajs[j], n_samples))
            if identical:
                verdict = "identical"
            elif min_dist > tol:
                verdict = "disjoint"
            else:
                verdict = "crossing"
                report["violations"] += 1
                report["pass"] = False
            report["pairs"].append({"i": i, "j": j, "verdict": verdict,
                                    "min_sample_distance": min_dist})
    return report


# -- image-space analysis -----------------------------------------------------


def null_point_analysis(c: MVPolynomial, n_line_samples=10):
    """Null points C(+-i), the secant through them, and the curve tangents
    there; every sampled line point is checked for exact singularity."""
    norm = c.norm_poly()
    if norm != RealPolynomial([1, 0, 1]) * RealPolynomial([1, 0, 1]):
        raise ValueError("norm polynomial must be (t^2+1)^2")
    cc = c.to_complex()
    n1 = cc.evaluate_scalar(I)
    n2 = cc.evaluate_scalar(-I)
    _, r = c.divmod_real(RealPolynomial([1, 0, 1]))

    taus = [mpq(k - n_line_samples // 2, 3) for k in range(n_line_samples)]
    secant = []
    for t in taus:
        pt = r.evaluate_scalar(t)
        secant.append({"t": t, "singular": pt.is_singular()})
    deriv = cc.derivative()
    tangents = []
    for label, z0 in (("n1", I), ("n2", -I)):
        base = cc.evaluate_scalar(z0)
        direction = deriv.evaluate_scalar(z0)
        line = []
        for t in taus:
            pt = base + direction.scale(t)
            line.append({"t": t, "singular": pt.is_singular()})
        tangents.append({"at": label, "samples": line})
    secant_singular = all(s["singular"] for s in secant)
    tangents_singular = all(s["singular"] for tg in tangents
                            for s in tg["samples"])
    return {
        "n1": n1, "n2": n2,
        "n1_null": n1.null_value() == 0,
        "n2_null": n2.null_value() == 0,
        "secant": secant,
        "tangents": tangents,
        "secant_all_singular": secant_singular,
        "tangents_all_singular": tangents_singular,
        "all_line_points_singular": secant_singular and tangents_singular,
    }


# -- quasi-elliptic plane (circular translation) ------------------------------

_QE_BASIS = (Multivector.scalar(1), EPS * QI, EPS * QJ, QK)


def quasi_elliptic_coordinates(x: Multivector):
    """Coordinates of x in the basis (1, eps*i, eps*j, k), or None if x is
    outside their span."""
    rows = [[b.coeffs[k] for b in _QE_BASIS] for k in range(DIM)]
    sol = linalg.solve_affine(rows, list(x.coeffs), mpq(0), mpq(1))
    if sol is None:
        return None
    coords, basis = sol
    assert not basis  # the four basis elements are independent
    return tuple(coords)


def quasi_elliptic_checks(c: MVPolynomial):
    """The circular translation curve lies in the plane of pure planar
    translations (no k-component) and passes through the absolute points."""
    coords = []
    in_plane = True
    for mv in c.coeffs:
        qc = quasi_elliptic_coordinates(mv)
        if qc is None:
            raise ValueError("coefficient outside the planar-kinematics span")
        coords.append(qc)
        in_plane &= qc[3] == 0
    cc = c.to_complex()
    n1 = (EPS * QI).to_complex() + (EPS * QJ).to_complex().scale(I)
    n2 = (EPS * QI).to_complex() - (EPS * QJ).to_complex().scale(I)
    return {
        "coordinates": coords,
        "k_component_zero": in_plane,
        "c_at_i_is_n1": cc.evaluate_scalar(I).projectively_equal(n1),
        "c_at_minus_i_is_n2": cc.evaluate_scalar(-I).projectively_equal(n2),
    }


# -- exponential correspondence (Villarceau) ----------------------------------


def _exp_series(b: Multivector, angle, terms=30):
    """Truncated exponential series of angle*b in the float algebra."""
    bf = b.to_float().scale(angle)
    acc = Multivector.scalar(1.0, FLOAT)
    term = Multivector.scalar(1.0, FLOAT)
    for k in range(1, terms):
        term = term * bf / float(k)
        acc = acc + term
    return acc


def _max_coeff_diff(a: Multivector, b: Multivector):
    return max(abs(x - y) for x, y in zip(a.coeffs, b.coeffs))


def exp_correspondence(phi_samples, tol=1e-12):
    """Exponential vs trigonometric vs polynomial form of the Villarceau
    motion.

    Verifies exp(B-*phi) exp(B+*phi) = (cos phi + B- sin phi)(cos phi +
    B+ sin phi) = sin^2(phi) * C(-cot phi); this is the angle convention
    that makes the three forms agree (the half-angle exponent with full
    trigonometric angle does not).
    """
    c_float = motions.villarceau().to_float()
    checks = []
    ok = True
    for phi in phi_samples:
        if abs(math.sin(phi)) < 1e-6:
            raise ValueError("sample too close to sin(phi) = 0")
        trig = (exp_bivector(motions.B_MINUS, phi)
                * exp_bivector(motions.B_PLUS, phi))
        exp_full = (_exp_series(motions.B_MINUS, phi)
                    * _exp_series(motions.B_PLUS, phi))
        exp_half = (_exp_series(motions.B_MINUS, -phi / 2)
                    * _exp_series(motions.B_PLUS, -phi / 2))
        poly = c_float.evaluate_scalar(-1 / math.tan(phi))
        poly = poly.scale(math.sin(phi) ** 2)
        e_trig_poly = _max_coeff_diff(trig, poly)
        e_exp_trig = _max_coeff_diff(exp_full, trig)
        e_half = _max_coeff_diff(exp_half, trig)
        checks.append({
            "phi": phi,
            "trig_vs_poly": e_trig_poly,
            "exp_full_angle_vs_trig": e_exp_trig,
            "exp_half_angle_vs_trig": e_half,
        })
        ok &= e_trig_poly < tol and e_exp_trig < tol
    return {
        "pass": ok,
        "convention": ("exp(B*phi) with the full angle matches the "
                       "trigonometric product and sin^2(phi)*C(-cot phi); "
                       "the half-angle exponent does not"),
        "samples": checks,
    }
