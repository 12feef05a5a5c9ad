"""Sparse multivariate polynomials with exact rational coefficients.

Used for the right-factor constraint system: degree <= 2 polynomials in the
16 unknown coefficients of a candidate right zero, and their residuals after
substituting an affine parametrization. Monomials are sorted tuples of
variable indices (with repetition for powers)."""

from __future__ import annotations

from gmpy2 import mpq


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        for mono, c in (terms or {}).items():
            c = mpq(c)
            if c != 0:
                t[tuple(sorted(mono))] = c
        self.terms = t

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def var(cls, i):
        return cls({(i,): 1})

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((len(m) for m in self.terms), default=0)

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, mpq(0)) + c
        return MPoly(t)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(other)
        return self + (-other)

    def __neg__(self):
        return MPoly({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(other)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                t[m] = t.get(m, mpq(0)) + c1 * c2
        return MPoly(t)

    __rmul__ = __mul__

    def scale(self, s):
        return MPoly({m: c * mpq(s) for m, c in self.terms.items()})

    def evaluate(self, values):
        acc = mpq(0)
        for m, c in self.terms.items():
            v = c
            for i in m:
                v = v * values[i]
            acc += v
        return acc

    def substitute(self, mapping):
        """Replace variable i by the polynomial mapping[i]."""
        acc = MPoly()
        for m, c in self.terms.items():
            term = MPoly.const(c)
            for i in m:
                term = term * mapping[i]
            acc = acc + term
        return acc

    def linear_parts(self, nvars):
        """(coefficient row, constant) of an affine polynomial."""
        if self.degree() > 1:
            raise ValueError("polynomial is not affine")
        row = [mpq(0)] * nvars
        for m, c in self.terms.items():
            if m:
                row[m[0]] += c
        return row, self.terms.get((), mpq(0))

    def normalized(self):
        """Canonical representative up to nonzero rational scale: leading
        coefficient (smallest monomial under (degree, lex)) becomes 1."""
        if not self.terms:
            return self
        lead = min(self.terms, key=lambda m: (len(m), m))
        return self.scale(1 / self.terms[lead])

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for m, c in self.sorted_terms():
            mono = "*".join("x%d" % i for i in m) or "1"
            bits.append("%s*%s" % (c, mono))
        return "MPoly(%s)" % " + ".join(bits)
