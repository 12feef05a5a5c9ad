"""Polynomials in a central indeterminate with multivector coefficients.

The indeterminate commutes with every coefficient, so multiplication is the
Cauchy product with geometric products of coefficients; it is
non-commutative in general. Spinor polynomials are those with even-grade
coefficients and a nonzero real norm polynomial.
"""

from __future__ import annotations

from .multivector import Multivector
from .scalars import COMPLEX, FLOAT, RATIONAL, field_one, field_zero, to_field


class NotSpinorError(ValueError):
    """Polynomial fails the spinor conditions (even, real nonzero norm)."""


class DegenerateRemainderError(ValueError):
    """Leading remainder coefficient is not invertible; the generic
    right-zero formula does not apply and the constraint solver is needed."""


class RealPolynomial:
    """Polynomial with scalar coefficients; central in the coefficient ring."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=RATIONAL):
        coeffs = [to_field(c, field) for c in coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [field_zero(field)]
        self.coeffs = tuple(coeffs)
        self.field = field

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, RealPolynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        z = field_zero(self.field)
        return RealPolynomial(
            [(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z)
             for i in range(n)], self.field)

    def __sub__(self, other):
        return self + RealPolynomial([-c for c in other.coeffs], other.field)

    def __mul__(self, other):
        z = field_zero(self.field)
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return RealPolynomial(out, self.field)

    def evaluate(self, t):
        t = to_field(t, self.field)
        acc = field_zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def monic_sqrt(self):
        """If the polynomial is the square of a monic real polynomial,
        return that square root, else None. Degrees here are tiny."""
        if self.degree() % 2 or self.coeffs[-1] != field_one(self.field):
            return None
        # Solve coefficientwise from the top: (t^m + a_{m-1} t^{m-1} + ...)^2
        m = self.degree() // 2
        z = field_one(self.field)
        root = [field_zero(self.field)] * m + [z]
        for k in range(m - 1, -1, -1):
            # coefficient of t^(m+k) in root^2 is 2*root[k] + known terms
            s = field_zero(self.field)
            for i in range(k + 1, m):
                j = m + k - i
                if k + 1 <= j <= m:
                    s = s + root[i] * root[j]
            root[k] = (self.coeffs[m + k] - s) / to_field(2, self.field)
        cand = RealPolynomial(root, self.field)
        return cand if cand * cand == self else None

    def __repr__(self):
        return "RealPolynomial(%s)" % (list(self.coeffs),)


class MVPolynomial:
    """Dense polynomial with multivector coefficients (low degree)."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs, field=None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("need at least one coefficient")
        if field is None:
            field = coeffs[0].field
        if any(c.field != field for c in coeffs):
            raise ValueError("coefficient field mismatch")
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.field = field

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field=RATIONAL):
        return cls([Multivector.zero(field)], field)

    @classmethod
    def constant(cls, mv):
        return cls([mv], mv.field)

    @classmethod
    def t_minus(cls, h):
        """The linear polynomial t - h."""
        return cls([-h, Multivector.scalar(1, h.field)], h.field)

    @classmethod
    def from_real(cls, p: RealPolynomial):
        return cls([Multivector.scalar(c, p.field) for c in p.coeffs], p.field)

    # -- structure ----------------------------------------------------------

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def is_even(self):
        return all(c.is_even() for c in self.coeffs)

    def is_real(self):
        return all(c.is_scalar() for c in self.coeffs)

    def coeff(self, i):
        if i > self.degree():
            return Multivector.zero(self.field)
        return self.coeffs[i]

    def __eq__(self, other):
        if not isinstance(other, MVPolynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return "MVPolynomial(%s)" % (list(self.coeffs),)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return MVPolynomial([self.coeff(i) + other.coeff(i) for i in range(n)],
                            self.field)

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return MVPolynomial([self.coeff(i) - other.coeff(i) for i in range(n)],
                            self.field)

    def __neg__(self):
        return MVPolynomial([-c for c in self.coeffs], self.field)

    def __mul__(self, other):
        """Cauchy product; coefficient products are geometric products."""
        if isinstance(other, RealPolynomial):
            other = MVPolynomial.from_real(other)
        out = [Multivector.zero(self.field)
               for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return MVPolynomial(out, self.field)

    def scale(self, s):
        return MVPolynomial([c.scale(s) for c in self.coeffs], self.field)

    # -- involutions --------------------------------------------------------

    def reverse(self):
        """Coefficientwise reversion; anti-automorphism for products."""
        return MVPolynomial([c.reverse() for c in self.coeffs], self.field)

    def derivative(self):
        if self.degree() == 0:
            return MVPolynomial.zero(self.field)
        return MVPolynomial([self.coeffs[i].scale(i)
                             for i in range(1, len(self.coeffs))], self.field)

    # -- evaluation ---------------------------------------------------------

    def evaluate_right(self, h: Multivector):
        """Right evaluation: sum of c_i h^i, powers of h multiplied from
        the right."""
        acc = Multivector.zero(self.field)
        p = Multivector.scalar(1, self.field)
        for c in self.coeffs:
            acc = acc + c * p
            p = p * h
        return acc

    def evaluate_scalar(self, t):
        """Substitute a central scalar for the indeterminate."""
        t = to_field(t, self.field)
        acc = Multivector.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc.scale(t) + c
        return acc

    # -- field changes ------------------------------------------------------

    def to_float(self):
        return MVPolynomial([c.to_float() for c in self.coeffs], FLOAT)

    def to_complex(self):
        return MVPolynomial([c.to_complex() for c in self.coeffs], COMPLEX)

    # -- spinor layer -------------------------------------------------------

    def norm_poly(self) -> RealPolynomial:
        """C * ~C as a real polynomial.

        Raises NotSpinorError unless the product is real, equals ~C * C, and
        is nonzero.
        """
        n = self * self.reverse()
        if not n.is_real() or n != self.reverse() * self:
            raise NotSpinorError("norm polynomial is not real")
        if n.is_zero():
            raise NotSpinorError("norm polynomial is zero")
        return RealPolynomial([c.scalar_part() for c in n.coeffs], self.field)

    def is_spinor(self):
        if self.degree() < 1 or not self.is_even():
            return False
        try:
            self.norm_poly()
        except NotSpinorError:
            return False
        return True

    def divmod_real(self, m: RealPolynomial):
        """Exact division C = Q*m + R with deg R < deg m; m is central."""
        if m.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if m.degree() < 1:
            raise ValueError("divisor must have degree >= 1")
        lead = m.coeffs[-1]
        rem = list(self.coeffs)
        dq = len(rem) - 1 - m.degree()
        if dq < 0:
            return MVPolynomial.zero(self.field), self
        q = [Multivector.zero(self.field) for _ in range(dq + 1)]
        inv_lead = field_one(self.field) / lead
        for k in range(dq, -1, -1):
            factor = rem[k + m.degree()].scale(inv_lead)
            q[k] = factor
            for j, mc in enumerate(m.coeffs):
                rem[k + j] = rem[k + j] - factor.scale(mc)
        quot = MVPolynomial(q, self.field)
        r = MVPolynomial(rem[:m.degree()] or [Multivector.zero(self.field)],
                         self.field)
        assert quot * MVPolynomial.from_real(m) + r == self
        return quot, r

    def extract_right_factor(self, h: Multivector):
        """Return C' with C = C'(t - h); requires C(h) = 0."""
        n = self.degree()
        if n < 1:
            raise ValueError("degree must be >= 1")
        q = [Multivector.zero(self.field)] * n
        q[n - 1] = self.coeffs[n]
        for i in range(n - 1, 0, -1):
            q[i - 1] = self.coeff(i) + q[i] * h
        rem = self.coeff(0) + q[0] * h
        if not rem.is_zero():
            raise ValueError("h is not a right zero of the polynomial")
        return MVPolynomial(q, self.field)


def generic_right_zero(r: MVPolynomial) -> Multivector:
    """h2 = -r1^-1 r0 for a linear remainder with invertible leading
    coefficient."""
    if r.degree() != 1:
        raise ValueError("remainder must be linear")
    r1, r0 = r.coeff(1), r.coeff(0)
    inv = r1.inverse()
    if inv is None:
        raise DegenerateRemainderError(
            "leading remainder coefficient not invertible; "
            "use the constraint solver")
    return -(inv * r0)
