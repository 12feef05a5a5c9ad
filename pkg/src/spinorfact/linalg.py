"""Exact Gauss-Jordan elimination over a field of exact scalars.

Works for any scalar type with field arithmetic and decidable equality
(gmpy2.mpq or CRat). Everything returns fresh lists; inputs are not
mutated.
"""

from __future__ import annotations


def rref(rows):
    """Reduced row echelon form. Returns (rref_rows, pivot_columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        p = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def matrix_rank(rows):
    return len(rref(rows)[1])


def solve_affine(a_rows, b, zero, one):
    """Solve A x = b exactly.

    Returns (particular, nullspace_basis) with nullspace basis vectors of the
    homogeneous system, or None if the system is inconsistent. `zero`/`one`
    are the field's constants.
    """
    if not a_rows:
        return [], []
    n = len(a_rows[0])
    aug = [list(r) + [bi] for r, bi in zip(a_rows, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None  # pivot in the rhs column: inconsistent
    particular = [zero] * n
    for r, c in enumerate(pivots):
        particular[c] = red[r][n]
    free_cols = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free_cols:
        v = [zero] * n
        v[fc] = one
        for r, c in enumerate(pivots):
            v[c] = -red[r][fc]
        basis.append(v)
    return particular, basis


def solve_unique(a_rows, b, zero, one):
    """Solve square A x = b; returns the solution or None if A is singular."""
    n = len(a_rows)
    if any(len(r) != n for r in a_rows):
        raise ValueError("matrix not square")
    sol = solve_affine(a_rows, b, zero, one)
    if sol is None:
        return None
    particular, basis = sol
    if basis:
        return None  # rank-deficient: determinant exactly zero
    return particular
