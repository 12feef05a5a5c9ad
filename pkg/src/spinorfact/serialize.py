"""JSON forms for multivectors, polynomials, families, and constraint
systems. All round-trips are bit-exact."""

from __future__ import annotations

import json
import os
import tempfile

from .blades import BLADE_NAMES, BLADE_ORDER
from .mpoly import MPoly
from .multivector import Multivector
from .polynomials import MVPolynomial
from .scalars import COMPLEX, FLOAT, RATIONAL, scalar_from_str, scalar_to_str


def mv_to_json(mv: Multivector) -> dict:
    """Blade name -> scalar string, canonical blade order."""
    return {BLADE_NAMES[b]: scalar_to_str(mv.coeffs[b], mv.field)
            for b in BLADE_ORDER if mv.coeffs[b] != 0}


def _infer_field(values):
    for s in values:
        if "," in s:
            return COMPLEX
    for s in values:
        if "/" in s:
            return RATIONAL
    return FLOAT if values else RATIONAL


def mv_from_json(obj: dict, field=None) -> Multivector:
    if field is None:
        field = _infer_field(list(obj.values()))
    return Multivector.from_terms(
        {name: scalar_from_str(s, field) for name, s in obj.items()}, field)


def poly_to_json(p: MVPolynomial) -> list:
    """Ordered list of multivector objects; index = power of t."""
    return [mv_to_json(c) for c in p.coeffs]


def poly_from_json(items: list, field=None) -> MVPolynomial:
    if field is None:
        fields = [_infer_field(list(o.values())) for o in items if o]
        if COMPLEX in fields:
            field = COMPLEX
        elif RATIONAL in fields:
            field = RATIONAL
        elif fields:
            field = FLOAT
        else:
            field = RATIONAL
    return MVPolynomial([mv_from_json(o, field) for o in items], field)


def mpoly_to_json(p: MPoly, var_names) -> list:
    return [{"monomial": [var_names[i] for i in mono],
             "coeff": scalar_to_str(c, RATIONAL)}
            for mono, c in p.sorted_terms()]


def family_to_json(family, params, h1, h2, verification) -> dict:
    return {
        "family": family,
        "params": [scalar_to_str(p, RATIONAL) for p in params],
        "h1": mv_to_json(h1),
        "h2": mv_to_json(h2),
        "verification": {
            "product_ok": verification["product_ok"],
            "spinor_ok": verification["spinor_ok"],
            "commutator_zero": verification["commutator_zero"],
        },
    }


def constraint_system_to_json(cs) -> dict:
    def eqs(items):
        return [{"blade": eq.blade, "provenance": eq.provenance,
                 "degree": eq.poly.degree(),
                 "terms": mpoly_to_json(eq.poly, _unknown_names())}
                for eq in items]

    return {
        "unknowns": list(_unknown_names()),
        "modulus": [scalar_to_str(c, RATIONAL) for c in cs.modulus.coeffs],
        "remainder": poly_to_json(cs.remainder),
        "linear": eqs(cs.linear),
        "quadratic": eqs(cs.quadratic),
        "counts": {"linear": len(cs.linear), "quadratic": len(cs.quadratic)},
        "counts_verbatim": {"linear": cs.counts_verbatim[0],
                            "quadratic": cs.counts_verbatim[1]},
        "dropped_zero": cs.dropped_zero,
        "merged_duplicates": cs.merged_duplicates,
        "scale_merged_pairs": [list(p) for p in cs.scale_merged_pairs],
    }


def _unknown_names():
    from .factor import UNKNOWN_NAMES
    return UNKNOWN_NAMES


def dump_json(obj, path):
    """Deterministic, atomic JSON write (temp file + rename)."""
    text = json.dumps(obj, indent=2, sort_keys=True)
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_text(lines, path):
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as f:
            for line in lines:
                f.write(line + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
