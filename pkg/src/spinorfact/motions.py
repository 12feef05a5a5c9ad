"""The two flagship quadratic spinor polynomials and their building blocks.

Both motions have norm polynomial (t^2 + 1)^2 and a linear remainder after
division by t^2 + 1 whose leading coefficient is not invertible, which is
what makes their factorization families infinite.
"""

from __future__ import annotations

from .multivector import EPS, Multivector, QI, QJ, QK
from .polynomials import MVPolynomial

CIRCULAR_TRANSLATION = "circular-translation"
VILLARCEAU = "villarceau"

MOTION_NAMES = (CIRCULAR_TRANSLATION, VILLARCEAU)

# Commuting bivector pair generating the Villarceau motion.
B_MINUS = Multivector.blade("e12")
B_PLUS = Multivector.blade("e3+")

# Center of the Villarceau factorization sphere in the even subalgebra.
M_CENTER = (B_MINUS + B_PLUS).scale("1/2")

# Orthogonal directions spanning the linear solution space (Villarceau).
S_X = (Multivector.blade("e1+") - Multivector.blade("e23")).scale(2)
S_Y = (Multivector.blade("e2+") + Multivector.blade("e13")).scale(2)
S_Z = (Multivector.blade("e3+") - Multivector.blade("e12")).scale(2)


def circular_translation() -> MVPolynomial:
    """Planar translation along a circle: t^2 + 1 - eps*(j t + i)."""
    one = Multivector.scalar(1)
    return MVPolynomial([one - EPS * QI, -(EPS * QJ), one])


def villarceau() -> MVPolynomial:
    """Conformal Villarceau motion: (t - e12)(t - e3+)."""
    return MVPolynomial.t_minus(B_MINUS) * MVPolynomial.t_minus(B_PLUS)


def by_name(name: str) -> MVPolynomial:
    if name == CIRCULAR_TRANSLATION:
        return circular_translation()
    if name == VILLARCEAU:
        return villarceau()
    raise ValueError("unknown motion %r" % name)
