"""Multivectors of the conformal geometric algebra of 3-space.

The algebra lives on the orthonormal generators (e1, e2, e3, e+, e-) with
squares (+1, +1, +1, +1, -1). Multivectors are immutable dense coefficient
vectors over one of three scalar fields (exact rational, float,
complexified rational); all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import linalg
from .blades import (BLADE_NAMES, BLADE_ORDER, BLADE_RANK, DIM,
                     PRODUCT_TABLE, REVERSION_SIGNS, blade_from_name, grade)
from .scalars import (COMPLEX, CRat, FLOAT, RATIONAL, field_one, field_zero,
                      rat, to_field)


class FieldMismatchError(ValueError):
    """Operands live over different scalar fields."""


class IdealPointError(ValueError):
    """Grade-1 vector has no finite Cartesian representative."""


class Multivector:
    """Immutable 32-coefficient element of the conformal algebra."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=RATIONAL):
        coeffs = tuple(coeffs)
        if len(coeffs) != DIM:
            raise ValueError("need %d coefficients, got %d" % (DIM, len(coeffs)))
        self.coeffs = coeffs
        self.field = field

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field=RATIONAL):
        z = field_zero(field)
        return cls((z,) * DIM, field)

    @classmethod
    def scalar(cls, value, field=RATIONAL):
        c = [field_zero(field)] * DIM
        c[0] = to_field(value, field)
        return cls(c, field)

    @classmethod
    def blade(cls, name, coeff=1, field=RATIONAL):
        """Single blade by canonical name, e.g. 'e12', 'e123+'."""
        c = [field_zero(field)] * DIM
        c[blade_from_name(name)] = to_field(coeff, field)
        return cls(c, field)

    @classmethod
    def from_terms(cls, terms, field=RATIONAL):
        """Build from {blade name: coefficient}."""
        c = [field_zero(field)] * DIM
        for name, v in terms.items():
            c[blade_from_name(name)] = to_field(v, field)
        return cls(c, field)

    # -- structure ----------------------------------------------------------

    def __getitem__(self, name):
        return self.coeffs[blade_from_name(name)]

    def terms(self):
        """Nonzero terms as {blade name: coefficient}, canonical order."""
        return {BLADE_NAMES[b]: self.coeffs[b]
                for b in BLADE_ORDER if self.coeffs[b] != 0}

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_even(self):
        return all(self.coeffs[b] == 0 for b in range(DIM) if grade(b) % 2)

    def is_scalar(self):
        return all(self.coeffs[b] == 0 for b in range(1, DIM))

    def grades(self):
        return sorted({grade(b) for b in range(DIM) if self.coeffs[b] != 0})

    def scalar_part(self):
        return self.coeffs[0]

    def _check_field(self, other):
        if self.field != other.field:
            raise FieldMismatchError(
                "fields differ: %s vs %s" % (self.field, other.field))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(other, self.field)
        self._check_field(other)
        return Multivector([a + b for a, b in zip(self.coeffs, other.coeffs)],
                           self.field)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(other, self.field)
        self._check_field(other)
        return Multivector([a - b for a, b in zip(self.coeffs, other.coeffs)],
                           self.field)

    def __rsub__(self, other):
        return Multivector.scalar(other, self.field) - self

    def __neg__(self):
        return Multivector([-a for a in self.coeffs], self.field)

    def scale(self, s):
        s = to_field(s, self.field)
        return Multivector([s * a for a in self.coeffs], self.field)

    def __mul__(self, other):
        """Geometric product (scalar operand allowed)."""
        if not isinstance(other, Multivector):
            return self.scale(other)
        self._check_field(other)
        acc = [field_zero(self.field)] * DIM
        bco = other.coeffs
        nz_b = [j for j in range(DIM) if bco[j] != 0]
        for i, ai in enumerate(self.coeffs):
            if ai == 0:
                continue
            row = PRODUCT_TABLE[i]
            for j in nz_b:
                sign, k = row[j]
                v = ai * bco[j]
                acc[k] = acc[k] + v if sign > 0 else acc[k] - v
        return Multivector(acc, self.field)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, s):
        return self.scale(field_one(self.field) / to_field(s, self.field))

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            if self.is_scalar():
                return self.coeffs[0] == to_field(other, self.field)
            return False
        return self.field == other.field and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        ts = self.terms()
        if not ts:
            return "Multivector<0>"
        return "Multivector<%s>" % " + ".join(
            "%s*%s" % (v, k) for k, v in ts.items())

    # -- involutions and projections ----------------------------------------

    def reverse(self):
        """Reversion anti-automorphism: grade k picks sign (-1)^(k(k-1)/2)."""
        return Multivector([s * c if s > 0 else -c
                            for s, c in zip(REVERSION_SIGNS, self.coeffs)],
                           self.field)

    def grade_project(self, k):
        if not 0 <= k <= 5:
            raise ValueError("grade must be in 0..5")
        z = field_zero(self.field)
        return Multivector([c if grade(b) == k else z
                            for b, c in enumerate(self.coeffs)], self.field)

    def outer(self, other):
        """Outer (wedge) product, extended bilinearly over mixed grades."""
        self._check_field(other)
        acc = Multivector.zero(self.field)
        for r in self.grades():
            ar = self.grade_project(r)
            for s in other.grades():
                acc = acc + (ar * other.grade_project(s)).grade_project(r + s)
        return acc

    def __xor__(self, other):
        return self.outer(other)

    def __invert__(self):
        return self.reverse()

    # -- field changes ------------------------------------------------------

    def to_float(self):
        return Multivector([float(c) for c in self.coeffs], FLOAT)

    def to_complex(self):
        if self.field == COMPLEX:
            return self
        if self.field != RATIONAL:
            raise ValueError("only rational multivectors promote to complex")
        return Multivector([CRat(c) for c in self.coeffs], COMPLEX)

    def conjugate_complex(self):
        if self.field != COMPLEX:
            raise ValueError("complex field required")
        return Multivector([c.conjugate() for c in self.coeffs], COMPLEX)

    # -- projective structure ------------------------------------------------

    def canonical(self):
        """Projective representative: divide by first nonzero coefficient
        in canonical blade order."""
        for b in BLADE_ORDER:
            if self.coeffs[b] != 0:
                return self / self.coeffs[b]
        return self

    def projectively_equal(self, other):
        """True iff one is a nonzero scalar multiple of the other."""
        self._check_field(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        return self.canonical() == other.canonical()

    # -- kinematic-map predicates -------------------------------------------

    def study_violation(self):
        """Deviation from the Study variety conditions of an even element.

        Returns (non-scalar part of x*~x, x*~x - ~x*x); both vanish exactly
        when x has real norm.
        """
        if not self.is_even():
            raise ValueError("even multivector required")
        xr = self * self.reverse()
        rx = self.reverse() * self
        return xr - xr.grade_project(0), xr - rx

    def null_value(self):
        """Scalar part of x*~x; zero exactly on the null quadric."""
        if not self.is_even():
            raise ValueError("even multivector required")
        return (self * self.reverse()).scalar_part()

    # -- invertibility -------------------------------------------------------

    def left_mul_matrix(self):
        """32x32 matrix of y -> a*y in canonical blade order."""
        z = field_zero(self.field)
        m = [[z] * DIM for _ in range(DIM)]
        for i, ai in enumerate(self.coeffs):
            if ai == 0:
                continue
            row = PRODUCT_TABLE[i]
            for j in range(DIM):
                sign, k = row[j]
                ri, ci = BLADE_RANK[k], BLADE_RANK[j]
                m[ri][ci] = m[ri][ci] + ai if sign > 0 else m[ri][ci] - ai
        return m

    def is_singular(self):
        """Exact: left-multiplication matrix has rank < 32."""
        if self.field == FLOAT:
            raise ValueError("invertibility requires an exact field")
        return linalg.matrix_rank(self.left_mul_matrix()) < DIM

    def inverse(self):
        """Exact inverse in the full 32-dimensional algebra, or None."""
        if self.field == FLOAT:
            raise ValueError("invertibility requires an exact field")
        z, o = field_zero(self.field), field_one(self.field)
        rhs = [z] * DIM
        rhs[BLADE_ORDER.index(0)] = o
        y = linalg.solve_unique(self.left_mul_matrix(), rhs, z, o)
        if y is None:
            return None
        c = [z] * DIM
        for pos, b in enumerate(BLADE_ORDER):
            c[b] = y[pos]
        inv = Multivector(c, self.field)
        assert self * inv == Multivector.scalar(1, self.field)
        return inv

    def is_invertible(self):
        return not self.is_singular()


# -- named constants (dual-quaternion embedding) ------------------------------

QI = Multivector.blade("e23", -1)                     # quaternion i
QJ = Multivector.blade("e13", 1)                      # quaternion j
QK = Multivector.blade("e12", -1)                     # quaternion k
EPS = Multivector.from_terms({"e123+": 1, "e123-": 1})  # dual unit, EPS*EPS = 0
ONE = Multivector.scalar(1)


# -- geometric objects --------------------------------------------------------

@dataclass(frozen=True)
class GeometricObject:
    """Sphere, plane, or point together with its grade-1 encoding."""
    kind: str           # "sphere" | "plane" | "point"
    params: tuple
    mv: Multivector


def encode_sphere(center, radius, field=RATIONAL):
    """Sphere with given center and radius as a grade-1 vector.

    Satisfies s * ~s = radius^2 exactly. Radius zero encodes a point.
    """
    cx, cy, cz = (to_field(v, field) for v in center)
    r = to_field(radius, field)
    half = field_one(field) / to_field(2, field)
    w = half * (field_one(field) + cx * cx + cy * cy + cz * cz - r * r)
    mv = Multivector.from_terms(
        {"e1": cx, "e2": cy, "e3": cz, "e+": w - field_one(field), "e-": w},
        field)
    return GeometricObject("sphere" if radius != 0 else "point",
                           (cx, cy, cz, r), mv)


def encode_point(p, field=RATIONAL):
    return GeometricObject("point", tuple(to_field(v, field) for v in p),
                           encode_sphere(p, 0, field).mv)


def encode_plane(normal, distance, field=RATIONAL):
    """Plane with unit normal and oriented origin distance."""
    nx, ny, nz = (to_field(v, field) for v in normal)
    d = to_field(distance, field)
    n2 = nx * nx + ny * ny + nz * nz
    if field == FLOAT:
        if not math.isclose(float(n2), 1.0, rel_tol=0, abs_tol=1e-12):
            raise ValueError("plane normal must be a unit vector")
    elif n2 != field_one(field):
        raise ValueError("plane normal must be a unit vector")
    return GeometricObject(
        "plane", (nx, ny, nz, d),
        Multivector.from_terms({"e1": nx, "e2": ny, "e3": nz,
                                "e+": d, "e-": d}, field))


def decode_point(v):
    """Cartesian coordinates of a grade-1 point vector (homogeneous scale
    removed). Raises IdealPointError when the normalizer vanishes."""
    if isinstance(v, GeometricObject):
        v = v.mv
    w = v["e-"] - v["e+"]
    if w == 0:
        raise IdealPointError("ideal point: normalizer is zero")
    return (v["e1"] / w, v["e2"] / w, v["e3"] / w)


def sandwich(g, x):
    """Conformal action g x ~g."""
    if isinstance(g, GeometricObject):
        g = g.mv
    if isinstance(x, GeometricObject):
        x = x.mv
    return g * x * g.reverse()


def exp_bivector(b, theta):
    """cos(theta) + b sin(theta) for a bivector with b*b = -1 (checked)."""
    sq = b * b
    if b.field == FLOAT:
        err = max(abs(c - t) for c, t in zip(
            sq.coeffs, Multivector.scalar(-1.0, FLOAT).coeffs))
        if err > 1e-9:
            raise ValueError("bivector must square to -1")
    elif sq != Multivector.scalar(-1, b.field):
        raise ValueError("bivector must square to -1 exactly")
    bf = b if b.field == FLOAT else b.to_float()
    return Multivector.scalar(math.cos(theta), FLOAT) + bf.scale(math.sin(theta))
