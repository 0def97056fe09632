"""Exact linear algebra: kernels, fraction-free rank, char poly, Pfaffian.

Pfaffian and determinant values are cross-checked against independent
brute-force oracles (permutation sums), not against the implementation.
"""

import itertools
import random
from fractions import Fraction
from math import factorial

from liecas.linalg import (
    Matrix,
    char_poly,
    det_bareiss,
    invert,
    kernel_basis,
    pfaffian,
    rank_bareiss,
    solve_linear,
)
from liecas.scalars import MPoly, RatFunc, scalar, var
import pytest


def det_leibniz(M: Matrix):
    """Independent determinant oracle: full permutation sum."""
    n = M.rows
    total = scalar(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = scalar(sign)
        for i in range(n):
            term = term * M.entries[i][perm[i]]
        total = total + term
    return total


def pfaffian_perm_sum(M: Matrix):
    """Independent Pfaffian oracle: (1/(2^m m!)) sum over all permutations."""
    n = M.rows
    m = n // 2
    total = scalar(0)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = scalar(sign)
        for i in range(m):
            term = term * M.entries[perm[2 * i]][perm[2 * i + 1]]
        total = total + term
    return total * Fraction(1, 2 ** m * factorial(m))


def skew_from_upper(upper):
    n = len(upper) + 1
    rows = [[scalar(0) for _ in range(n)] for _ in range(n)]
    for i, row in enumerate(upper):
        for k, val in enumerate(row):
            j = i + 1 + k
            v = RatFunc.of(val)
            rows[i][j] = v
            rows[j][i] = -v
    return Matrix(rows)


def test_kernel_zero_matrix_gives_standard_basis():
    M = Matrix([[0, 0], [0, 0]])
    basis = kernel_basis(M)
    assert [[str(x) for x in v] for v in basis] == [["1", "0"], ["0", "1"]]


def test_kernel_proportional_rows():
    p = var("p")
    M = Matrix([[1, p], [p, p ** 2]])
    basis = kernel_basis(M)
    assert len(basis) == 1
    assert basis[0][0] == -p and basis[0][1] == 1


def test_rank_examples():
    x1, x2 = var("x1"), var("x2")
    assert rank_bareiss(Matrix([[0, x2], [-x2, 0]])) == 2
    assert rank_bareiss(Matrix([[x1, 0], [0, 0]])) == 1


def test_char_poly_identity():
    M = Matrix.identity(2)
    X = MPoly.variable("X_charpoly")
    assert char_poly(M) == (X - 1) ** 2


def test_char_poly_is_monic():
    M = Matrix([[1, 2, 0], [0, Fraction(1, 2), 3], [4, 0, -1]])
    cp = char_poly(M)
    assert cp.coeff_of("X_charpoly", 3) == 1


def test_pfaffian_2x2():
    a = var("a")
    assert pfaffian(skew_from_upper([[a]])) == a


def test_pfaffian_4x4_textbook_identity():
    a, b, c, d, e, f = (var(n) for n in "abcdef")
    M = skew_from_upper([[a, b, c], [d, e], [f]])
    assert pfaffian(M) == a * f - b * e + c * d


def test_pfaffian_rejects_bad_input():
    with pytest.raises(Exception):
        pfaffian(Matrix([[0, 1], [1, 0]]))
    with pytest.raises(Exception):
        pfaffian(Matrix([[0]]))


def _random_fraction(rng):
    return Fraction(rng.randint(-5, 5), rng.randint(1, 3))


def _random_linear(rng):
    p = var("p")
    return p * rng.randint(-2, 2) + rng.randint(-3, 3)


def test_pfaffian_squared_is_determinant_and_matches_oracle():
    rng = random.Random(11)
    for n, entry in [(4, _random_fraction), (6, _random_fraction), (4, _random_linear), (6, _random_linear)]:
        for _ in range(4):
            upper = [[entry(rng) for _ in range(n - 1 - i)] for i in range(n - 1)]
            M = skew_from_upper(upper)
            pf = pfaffian(M)
            assert pf == pfaffian_perm_sum(M)
            assert pf * pf == det_bareiss(M)


def test_determinant_matches_leibniz_oracle():
    rng = random.Random(5)
    for _ in range(8):
        M = Matrix([[_random_fraction(rng) for _ in range(4)] for _ in range(4)])
        assert det_bareiss(M) == det_leibniz(M)


def test_rank_agrees_with_kernel_dimension():
    rng = random.Random(99)
    for _ in range(20):
        if rng.random() < 0.5:
            M = Matrix([[_random_fraction(rng) for _ in range(4)] for _ in range(4)])
        else:
            # force low rank via an outer product sum
            u = [_random_fraction(rng) for _ in range(4)]
            v = [_random_fraction(rng) for _ in range(4)]
            M = Matrix([[u[i] * v[j] for j in range(4)] for i in range(4)])
        assert rank_bareiss(M) == 4 - len(kernel_basis(M))


def test_solve_and_invert():
    p = var("p")
    M = Matrix([[1, p], [0, 2]])
    sol = solve_linear(M, [p, 4])
    assert sol is not None
    particular, kernel = sol
    assert kernel == []
    assert particular[0] == -p and particular[1] == 2
    inv = invert(M)
    assert inv * M == Matrix.identity(2)
    assert solve_linear(Matrix([[1, 1], [1, 1]]), [0, 1]) is None


def test_kernel_vectors_annihilate_matrix():
    rng = random.Random(3)
    for _ in range(10):
        M = Matrix([[_random_linear(rng) for _ in range(5)] for _ in range(3)])
        for v in kernel_basis(M):
            assert all(x.is_zero() for x in M.apply(v))
