import random

from gmpy2 import mpq

from spinorfact.linalg import matrix_rank, rref, solve_affine, solve_unique


def rand_matrix(rng, m, n):
    return [[mpq(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)]
            for _ in range(m)]


def test_rank_against_float_oracle():
    import numpy as np
    rng = random.Random(5)
    for _ in range(40):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        a = rand_matrix(rng, m, n)
        exact = matrix_rank(a)
        approx = np.linalg.matrix_rank(np.array(a, dtype=float), tol=1e-9)
        assert exact == approx


def test_solve_affine_substitutes_back():
    rng = random.Random(9)
    for _ in range(60):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        a = rand_matrix(rng, m, n)
        x_true = [mpq(rng.randint(-4, 4)) for _ in range(n)]
        b = [sum(a[i][j] * x_true[j] for j in range(n)) for i in range(m)]
        sol = solve_affine(a, b, mpq(0), mpq(1))
        assert sol is not None
        particular, basis = sol
        for vec in [particular] + [[p + d for p, d in zip(particular, v)]
                                   for v in basis]:
            for i in range(m):
                assert sum(a[i][j] * vec[j] for j in range(n)) == b[i]
        assert len(basis) == n - matrix_rank(a)


def test_inconsistent_system():
    a = [[mpq(1), mpq(1)], [mpq(2), mpq(2)]]
    b = [mpq(1), mpq(3)]
    assert solve_affine(a, b, mpq(0), mpq(1)) is None


def test_solve_unique():
    a = [[mpq(2), mpq(0)], [mpq(1), mpq(1)]]
    assert solve_unique(a, [mpq(4), mpq(5)], mpq(0), mpq(1)) == [mpq(2), mpq(3)]
    singular = [[mpq(1), mpq(1)], [mpq(1), mpq(1)]]
    assert solve_unique(singular, [mpq(2), mpq(2)], mpq(0), mpq(1)) is None


def test_rref_idempotent():
    rng = random.Random(1)
    a = rand_matrix(rng, 4, 5)
    r1, _ = rref(a)
    r2, _ = rref(r1)
    assert r1 == r2
