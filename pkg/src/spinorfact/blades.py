"""Blade indexing for the Clifford algebra of signature (+,+,+,+,-).

A blade is a bitmask over the ordered generators (e1, e2, e3, e+, e-),
bits 0..4. The canonical blade order (grade first, then bitmask) is fixed
once and for all; serialization and canonical projective representatives
depend on it.
"""

from __future__ import annotations

GENERATOR_NAMES = ("1", "2", "3", "+", "-")
N_GENERATORS = 5
DIM = 1 << N_GENERATORS  # 32

# e1^2 = e2^2 = e3^2 = e+^2 = +1, e-^2 = -1
METRIC = (1, 1, 1, 1, -1)


def grade(blade: int) -> int:
    return bin(blade).count("1")


# Canonical total order over the 32 blades: by grade, then by bitmask.
BLADE_ORDER = tuple(sorted(range(DIM), key=lambda b: (grade(b), b)))
BLADE_RANK = tuple(BLADE_ORDER.index(b) for b in range(DIM))

EVEN_BLADES = tuple(b for b in BLADE_ORDER if grade(b) % 2 == 0)
ODD_BLADES = tuple(b for b in BLADE_ORDER if grade(b) % 2 == 1)


def blade_name(blade: int) -> str:
    """Canonical name: '1' for the scalar blade, else e.g. 'e12', 'e3+', 'e123+-'."""
    if blade == 0:
        return "1"
    return "e" + "".join(GENERATOR_NAMES[i] for i in range(N_GENERATORS)
                         if blade >> i & 1)


BLADE_NAMES = tuple(blade_name(b) for b in range(DIM))
_NAME_TO_BLADE = {blade_name(b): b for b in range(DIM)}


def blade_from_name(name: str) -> int:
    try:
        return _NAME_TO_BLADE[name]
    except KeyError:
        raise ValueError("unknown blade name %r" % name) from None


def product_sign(a: int, b: int) -> int:
    """Sign of e_a * e_b: transposition parity plus metric of repeated generators.

    The resulting blade is a ^ b (symmetric difference).
    """
    # Count transpositions needed to merge the generator sequences.
    s = 0
    t = a >> 1
    while t:
        s += bin(t & b).count("1")
        t >>= 1
    sign = -1 if s & 1 else 1
    common = a & b
    for i in range(N_GENERATORS):
        if common >> i & 1:
            sign *= METRIC[i]
    return sign


# Dense product table: PRODUCT_TABLE[a][b] = (sign, a ^ b).
PRODUCT_TABLE = tuple(
    tuple((product_sign(a, b), a ^ b) for b in range(DIM)) for a in range(DIM)
)


def reversion_sign(blade: int) -> int:
    k = grade(blade)
    return -1 if (k * (k - 1) // 2) % 2 else 1


REVERSION_SIGNS = tuple(reversion_sign(b) for b in range(DIM))
