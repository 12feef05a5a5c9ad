"""Right-factor constraint systems and the two infinite factorization
families.

A linear right factor t - h2 of a quadratic C with norm M^2 must be a right
zero of the remainder R = r1 t + r0 (from C = Q M + R), a zero of M, and
satisfy the spinor conditions. Projecting those requirements on blade
components gives a system of linear and quadratic equations in the 16
unknown even coefficients of h2; when r1 is not invertible the solution set
can be an entire variety.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from gmpy2 import mpq

from . import linalg, motions
from .blades import BLADE_NAMES, DIM, EVEN_BLADES, grade
from .mpoly import MPoly
from .multivector import Multivector
from .polynomials import MVPolynomial, NotSpinorError, RealPolynomial
from .scalars import rat

UNKNOWN_BLADES = EVEN_BLADES  # canonical order of the 16 unknowns
UNKNOWN_NAMES = tuple(BLADE_NAMES[b] for b in UNKNOWN_BLADES)


class InconsistentSystemError(ValueError):
    """The linear constraint part has no solution: no linear right factor."""


@dataclass(frozen=True)
class Equation:
    poly: MPoly
    provenance: str  # remainder | zero-of-M | spinor-condition
    blade: str       # blade component the equation came from


@dataclass(frozen=True)
class ConstraintSystem:
    """Blade-component equations for the unknown right zero h2.

    Two dedup conventions are tracked: merging component equations that
    agree up to a nonzero rational scale ('counts'), and merging only
    verbatim-identical ones ('counts_verbatim'). Identically-zero
    components are always dropped.
    """
    motion: MVPolynomial
    modulus: RealPolynomial
    remainder: MVPolynomial
    linear: tuple
    quadratic: tuple
    dropped_zero: int
    merged_duplicates: int
    counts_verbatim: tuple
    scale_merged_pairs: tuple  # (kept blade, merged blade, ratio) triples

    @property
    def counts(self):
        return len(self.linear), len(self.quadratic)


@dataclass(frozen=True)
class LinearSolution:
    """Affine solution space of the linear equations: particular point plus
    homogeneous basis, each a 16-vector over the even blades."""
    particular: tuple
    basis: tuple          # tuple of 16-vectors
    param_names: tuple

    @property
    def dimension(self):
        return len(self.basis)

    def coeff_vector(self, params):
        params = [rat(p) for p in params]
        if len(params) != self.dimension:
            raise ValueError("expected %d parameters" % self.dimension)
        v = list(self.particular)
        for p, b in zip(params, self.basis):
            v = [vi + p * bi for vi, bi in zip(v, b)]
        return v

    def h2(self, params) -> Multivector:
        return _from_even_coeffs(self.coeff_vector(params))

    def parametrization(self):
        """Each unknown as an affine MPoly in the parameters."""
        out = []
        for i in range(len(self.particular)):
            p = MPoly.const(self.particular[i])
            for k, b in enumerate(self.basis):
                p = p + MPoly.var(k).scale(b[i])
            out.append(p)
        return out


def _from_even_coeffs(vec) -> Multivector:
    c = [mpq(0)] * DIM
    for b, v in zip(UNKNOWN_BLADES, vec):
        c[b] = mpq(v)
    return Multivector(c)


def _to_even_coeffs(mv: Multivector):
    if not mv.is_even():
        raise ValueError("even multivector required")
    return [mv.coeffs[b] for b in UNKNOWN_BLADES]


def _symbolic_components(table):
    """Components of sum_i x_i * (table[i]) as MPoly per blade, where
    table[i] is the rational multivector multiplying unknown i."""
    comps = [MPoly() for _ in range(DIM)]
    for i, mv in enumerate(table):
        xi = MPoly.var(i)
        for b in range(DIM):
            if mv.coeffs[b] != 0:
                comps[b] = comps[b] + xi.scale(mv.coeffs[b])
    return comps


def _symbolic_square_components(left_table, right_table):
    """Components of (sum_i x_i L_i)(sum_j x_j R_j) as MPoly per blade."""
    comps = [MPoly() for _ in range(DIM)]
    n = len(left_table)
    for i in range(n):
        for j in range(n):
            prod = left_table[i] * right_table[j]
            mono = MPoly.var(i) * MPoly.var(j)
            for b in range(DIM):
                if prod.coeffs[b] != 0:
                    comps[b] = comps[b] + mono.scale(prod.coeffs[b])
    return comps


def _dedup(equations):
    """Drop identically-zero equations; merge duplicates up to nonzero
    rational scale. Returns (kept, n_zero, n_merged, n_verbatim, pairs)
    where pairs records (kept blade, merged blade) for every up-to-scale
    merge and n_verbatim counts equations distinct as written."""
    kept, seen = [], {}
    verbatim = set()
    pairs = []
    n_zero = n_merged = 0
    for eq in equations:
        if eq.poly.is_zero():
            n_zero += 1
            continue
        verbatim.add(eq.poly)
        key = eq.poly.normalized()
        if key in seen:
            n_merged += 1
            pairs.append((seen[key].blade, eq.blade))
            continue
        seen[key] = eq
        kept.append(eq)
    return kept, n_zero, n_merged, len(verbatim), pairs


def build_constraint_system(c: MVPolynomial) -> ConstraintSystem:
    """Emit the component equations a right zero h2 of a quadratic spinor
    polynomial must satisfy."""
    if c.degree() != 2:
        raise ValueError("quadratic spinor polynomial required")
    norm = c.norm_poly()
    m = norm.monic_sqrt()
    if m is None:
        raise NotSpinorError("norm polynomial is not the square of a real "
                             "monic polynomial")
    _, r = c.divmod_real(m)
    r1, r0 = r.coeff(1), r.coeff(0)

    units = [Multivector.blade(name) for name in UNKNOWN_NAMES]

    linear = []
    # r1 h2 + r0 = 0, componentwise
    comps = _symbolic_components([r1 * e for e in units])
    for b in range(DIM):
        p = comps[b] + MPoly.const(r0.coeffs[b])
        linear.append(Equation(p, "remainder", BLADE_NAMES[b]))
    # h2 + ~h2 real: non-scalar components vanish (only grade 4 survives)
    for i, blade in enumerate(UNKNOWN_BLADES):
        if blade == 0:
            continue
        k = grade(blade)
        s = 1 + (-1 if (k * (k - 1) // 2) % 2 else 1)
        linear.append(Equation(MPoly.var(i).scale(s), "spinor-condition",
                               BLADE_NAMES[blade]))

    quadratic = []
    rev_units = [e.reverse() for e in units]
    # h2^2 + 1 = 0 (h2 is a zero of M = t^2 + 1 when M is the norm root;
    # in general the constant term is M(0) and the linear term M'(0) --
    # with monic quadratic M = t^2 + a1 t + a0 the condition reads
    # h2^2 + a1 h2 + a0 = 0)
    a0 = m.coeffs[0]
    a1 = m.coeffs[1] if m.degree() >= 1 else mpq(0)
    sq = _symbolic_square_components(units, units)
    lin_h2 = _symbolic_components(units)
    for b in range(DIM):
        p = sq[b] + lin_h2[b].scale(a1)
        if b == 0:
            p = p + MPoly.const(a0)
        quadratic.append(Equation(p, "zero-of-M", BLADE_NAMES[b]))
    # h2 ~h2 and ~h2 h2 real: non-scalar components vanish
    for comps_q, tag in ((_symbolic_square_components(units, rev_units),
                          "spinor-condition"),
                         (_symbolic_square_components(rev_units, units),
                          "spinor-condition")):
        for b in range(1, DIM):
            quadratic.append(Equation(comps_q[b], tag, BLADE_NAMES[b]))

    lin_kept, z1, m1, v1, p1 = _dedup(linear)
    quad_kept, z2, m2, v2, p2 = _dedup(quadratic)
    return ConstraintSystem(motion=c, modulus=m, remainder=r,
                            linear=tuple(lin_kept),
                            quadratic=tuple(quad_kept),
                            dropped_zero=z1 + z2,
                            merged_duplicates=m1 + m2,
                            counts_verbatim=(v1, v2),
                            scale_merged_pairs=tuple(p1 + p2))


def solve_linear(cs: ConstraintSystem) -> LinearSolution:
    """Exact Gauss-Jordan solution of the linear equations."""
    n = len(UNKNOWN_BLADES)
    rows, rhs = [], []
    for eq in cs.linear:
        row, const = eq.poly.linear_parts(n)
        rows.append(row)
        rhs.append(-const)
    if not rows:
        rows = [[mpq(0)] * n]
        rhs = [mpq(0)]
    sol = linalg.solve_affine(rows, rhs, mpq(0), mpq(1))
    if sol is None:
        raise InconsistentSystemError("no linear right factor exists")
    particular, basis = sol
    names = tuple("p%d" % k for k in range(len(basis)))
    return LinearSolution(tuple(particular),
                          tuple(tuple(b) for b in basis), names)


def reparametrize(lin: LinearSolution, particular_mv: Multivector,
                  basis_mvs, param_names) -> LinearSolution:
    """Re-express a solution space in a preferred affine chart.

    The chart must describe exactly the same affine subspace; this is
    verified by rank computations.
    """
    new_part = _to_even_coeffs(particular_mv)
    new_basis = [_to_even_coeffs(mv) for mv in basis_mvs]
    old = [list(b) for b in lin.basis]
    if len(new_basis) != len(old):
        raise ValueError("chart dimension mismatch")
    rank_old = linalg.matrix_rank(old) if old else 0
    if linalg.matrix_rank(old + new_basis) != rank_old:
        raise ValueError("chart basis does not span the solution space")
    diff = [a - b for a, b in zip(new_part, lin.particular)]
    if linalg.matrix_rank(old + [diff]) != rank_old:
        raise ValueError("chart origin is not in the solution space")
    return LinearSolution(tuple(new_part),
                          tuple(tuple(b) for b in new_basis),
                          tuple(param_names))


def reduce_quadratics(cs: ConstraintSystem, lin: LinearSolution):
    """Residual polynomial conditions in the parameters after substituting
    the affine solution of the linear part. Deduplicated up to scale."""
    mapping = lin.parametrization()
    residuals, seen = [], set()
    for eq in cs.quadratic:
        p = eq.poly.substitute(mapping)
        if p.is_zero():
            continue
        key = p.normalized()
        if key not in seen:
            seen.add(key)
            residuals.append(key)
    return residuals


def solve_variety(cs: ConstraintSystem):
    """Solve the linear part, then absorb any affine residuals of the
    quadratic part back into the parametrization until only genuinely
    quadratic residuals (or none) remain.

    Returns (LinearSolution, residuals). The circular translation needs one
    absorption round (its linear part alone leaves a 4-dimensional space);
    the Villarceau motion stabilizes immediately with the sphere residual.
    """
    lin = solve_linear(cs)
    while True:
        residuals = reduce_quadratics(cs, lin)
        affine = [p for p in residuals if p.degree() <= 1]
        if not affine or lin.dimension == 0:
            return lin, residuals
        rows, rhs = [], []
        for p in affine:
            row, const = p.linear_parts(lin.dimension)
            rows.append(row)
            rhs.append(-const)
        sol = linalg.solve_affine(rows, rhs, mpq(0), mpq(1))
        if sol is None:
            raise InconsistentSystemError("affine residuals are inconsistent")
        q, nbasis = sol
        part = list(lin.particular)
        for qk, b in zip(q, lin.basis):
            part = [pi + qk * bi for pi, bi in zip(part, b)]
        new_basis = []
        for nvec in nbasis:
            col = [mpq(0)] * len(lin.particular)
            for nk, b in zip(nvec, lin.basis):
                col = [ci + nk * bi for ci, bi in zip(col, b)]
            new_basis.append(tuple(col))
        lin = LinearSolution(tuple(part), tuple(new_basis),
                             tuple("p%d" % k for k in range(len(new_basis))))


# -- the two flagship families ------------------------------------------------


def circular_translation_family(lam, mu):
    """Factor pair (h1, h2) of the circular translation; every (lam, mu)
    in the rational plane is admissible."""
    from .multivector import EPS, QI, QJ, QK
    lam, mu = rat(lam), rat(mu)
    h1 = QK + EPS * (QJ.scale(1 - mu) - QI.scale(lam))
    h2 = -QK + EPS * (QI.scale(lam) + QJ.scale(mu))
    return h1, h2


def on_villarceau_sphere(x, y, z):
    x, y, z = rat(x), rat(y), rat(z)
    return x * x + y * y + (z - rat(1, 4)) ** 2 == rat(1, 16)


def villarceau_family(x, y, z):
    """Factor pair (h1, h2) of the Villarceau motion for a point (x, y, z)
    on the admissible sphere x^2 + y^2 + (z - 1/4)^2 = 1/16."""
    x, y, z = rat(x), rat(y), rat(z)
    if not on_villarceau_sphere(x, y, z):
        raise ValueError("(x, y, z) is not on the solution sphere")
    h2 = (Multivector.blade("e12") + motions.S_X.scale(x)
          + motions.S_Y.scale(y) + motions.S_Z.scale(z))
    h1 = motions.M_CENTER.scale(2) - h2
    return h1, h2


def villarceau_sphere_point(u, v):
    """Rational point on the solution sphere by stereographic projection
    from the top of the sphere (center (0, 0, 1/4), radius 1/4)."""
    u, v = rat(u), rat(v)
    d = u * u + v * v + 1
    # unit sphere point ((2u, 2v, u^2+v^2-1)/d), scaled by the radius
    q = rat(1, 4)
    return (q * 2 * u / d, q * 2 * v / d, q + q * (u * u + v * v - 1) / d)


def verify_factorization(c: MVPolynomial, h1: Multivector, h2: Multivector):
    """Exact report on a candidate factorization C = (t - h1)(t - h2)."""
    f1 = MVPolynomial.t_minus(h1)
    f2 = MVPolynomial.t_minus(h2)
    product = f1 * f2
    residual = product - c
    commutator = product - f2 * f1
    report = {
        "product_ok": residual.is_zero(),
        "spinor_ok": f1.is_spinor() and f2.is_spinor(),
        "commutator_zero": commutator.is_zero(),
    }
    report["pass"] = report["product_ok"] and report["spinor_ok"]
    if not report["product_ok"]:
        report["residual"] = residual
    return report


def reflection_structure_check(sphere_points):
    """Villarceau family structure: h1 + h2 = 2m and h1 h2 = h2 h1 at every
    given sphere point, exactly."""
    two_m = motions.M_CENTER.scale(2)
    results = []
    for p in sphere_points:
        h1, h2 = villarceau_family(*p)
        results.append({
            "point": p,
            "reflection_ok": h1 + h2 == two_m,
            "commute_ok": h1 * h2 == h2 * h1,
        })
    ok = all(r["reflection_ok"] and r["commute_ok"] for r in results)
    return {"pass": ok, "points": results}
