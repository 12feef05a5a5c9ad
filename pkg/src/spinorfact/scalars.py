"""Scalar fields: exact rationals, floats, and complexified rationals.

Rational arithmetic is backed by gmpy2.mpq for speed; all rational and
complex-rational computations are exact. Floats are only used for sampling
and numerical (finite-difference) checks.
"""

from __future__ import annotations

from gmpy2 import mpq

RATIONAL = "rational"
FLOAT = "float"
COMPLEX = "complex"

FIELDS = (RATIONAL, FLOAT, COMPLEX)


def rat(x, y=None):
    """Exact rational from ints, a 'p/q' string, or another rational."""
    if y is not None:
        return mpq(x, y)
    if isinstance(x, CRat):
        if x.im != 0:
            raise ValueError("complex value has nonzero imaginary part")
        return x.re
    if isinstance(x, float) and not x.is_integer():
        raise ValueError("refusing inexact float -> rational conversion: %r" % x)
    return mpq(x)


class CRat:
    """Complexified rational a + b*i with exact rational a, b.

    The imaginary unit commutes with everything (it is a scalar adjoined to
    the algebra) and is distinct from any bivector square root of -1.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = mpq(re)
        self.im = mpq(im)

    @staticmethod
    def _coerce(x):
        if isinstance(x, CRat):
            return x
        if isinstance(x, (int, type(mpq(0)))):
            return CRat(x)
        return NotImplemented

    def __add__(self, other):
        o = CRat._coerce(other)
        if o is NotImplemented:
            return o
        return CRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = CRat._coerce(other)
        if o is NotImplemented:
            return o
        return CRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = CRat._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = CRat._coerce(other)
        if o is NotImplemented:
            return o
        return CRat(self.re * o.re - self.im * o.im,
                    self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = CRat._coerce(other)
        if o is NotImplemented:
            return o
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero CRat")
        return CRat((self.re * o.re + self.im * o.im) / n,
                    (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = CRat._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return CRat(-self.re, -self.im)

    def __eq__(self, other):
        o = CRat._coerce(other)
        if o is NotImplemented:
            return o
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self):
        return CRat(self.re, -self.im)

    def __repr__(self):
        return "CRat(%s, %s)" % (self.re, self.im)


I = CRat(0, 1)


def field_zero(field):
    if field == RATIONAL:
        return mpq(0)
    if field == FLOAT:
        return 0.0
    if field == COMPLEX:
        return CRat(0)
    raise ValueError("unknown field %r" % field)


def field_one(field):
    if field == RATIONAL:
        return mpq(1)
    if field == FLOAT:
        return 1.0
    if field == COMPLEX:
        return CRat(1)
    raise ValueError("unknown field %r" % field)


def to_field(x, field):
    """Coerce a scalar into the given field (rational -> float/complex only)."""
    if field == RATIONAL:
        return rat(x)
    if field == FLOAT:
        if isinstance(x, CRat):
            raise ValueError("cannot coerce complex scalar to float")
        return float(x)
    if field == COMPLEX:
        if isinstance(x, CRat):
            return x
        if isinstance(x, float) and not x.is_integer():
            raise ValueError("refusing inexact float -> complex-rational coercion")
        return CRat(mpq(x))
    raise ValueError("unknown field %r" % field)


def scalar_to_str(x, field):
    """Serialize a scalar: 'p/q' for rationals, 're,im' for complex."""
    if field == RATIONAL:
        q = mpq(x)
        return "%s/%s" % (q.numerator, q.denominator)
    if field == FLOAT:
        return repr(float(x))
    if field == COMPLEX:
        c = CRat._coerce(x)
        return "%s/%s,%s/%s" % (c.re.numerator, c.re.denominator,
                                c.im.numerator, c.im.denominator)
    raise ValueError("unknown field %r" % field)


def scalar_from_str(s, field):
    if field == RATIONAL:
        return mpq(s)
    if field == FLOAT:
        return float(s)
    if field == COMPLEX:
        re_s, im_s = s.split(",")
        return CRat(mpq(re_s), mpq(im_s))
    raise ValueError("unknown field %r" % field)
