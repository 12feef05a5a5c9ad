"""Exact conformal geometric algebra over R(4,1) with a factorization
engine for quadratic spinor polynomials and the kinematic checks that go
with it: trajectory circles, Dupin cyclide surfaces, and image-space
null-point analysis."""

__version__ = "0.1.0"

from .multivector import (EPS, GeometricObject, IdealPointError, Multivector,
                          QI, QJ, QK, decode_point, encode_plane,
                          encode_point, encode_sphere, sandwich)
from .polynomials import MVPolynomial, RealPolynomial

__all__ = [
    "EPS", "GeometricObject", "IdealPointError", "Multivector",
    "MVPolynomial", "QI", "QJ", "QK", "RealPolynomial", "decode_point",
    "encode_plane", "encode_point", "encode_sphere", "sandwich",
]
