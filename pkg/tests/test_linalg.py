import random
from fractions import Fraction

import pytest

from polyent.linalg import (ExactMatrix, NotSquareError, exact_det,
                            exact_inverse, exact_kernel, exact_rank,
                            exact_solve)
from polyent.scalars import ONE, ZERO, scalar


def rand_matrix(rng, n, m, span=6):
    return ExactMatrix(n, m, [scalar(Fraction(rng.randint(-span, span),
                                              rng.randint(1, 3)))
                              for _ in range(n * m)])


def test_identity_rank():
    assert exact_rank(ExactMatrix.identity(3)) == 3


def test_rank_of_product_vector_matrix():
    # coordinates of the five normal-form product vectors; full row rank
    # for generic parameters, rank four when all parameters collapse to 1
    def rows(p, q, r, s):
        p, q, r, s = (scalar(x) for x in (p, q, r, s))
        return ExactMatrix.from_rows([
            [ONE, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO],
            [ZERO, ZERO, ZERO, ZERO, ONE, ZERO, ZERO, ZERO, ZERO],
            [ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO, ONE],
            [ONE, ONE, ONE, ONE, ONE, ONE, ONE, ONE, ONE],
            [ONE, r, s, p, p * r, p * s, q, q * r, q * s],
        ])
    assert exact_rank(rows(2, 3, 5, 7)) == 5
    assert exact_rank(rows(1, 1, 1, 1)) < 5


def test_kernel_basics():
    z = ExactMatrix.zeros(2, 2)
    assert len(exact_kernel(z)) == 2
    m = ExactMatrix.from_rows([[ONE, ONE]])
    k = exact_kernel(m)
    assert len(k) == 1
    v = k[0]
    assert (v[0] + v[1]).is_zero()


def test_kernel_annihilates():
    rng = random.Random(3)
    for _ in range(30):
        m = rand_matrix(rng, rng.randint(1, 4), rng.randint(1, 5))
        for v in exact_kernel(m):
            assert all(x.is_zero() for x in m.mat_vec(v))


def test_rank_transpose_and_det():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 4)
        m = rand_matrix(rng, n, rng.randint(1, 4))
        assert exact_rank(m) == exact_rank(m.transpose())
    for _ in range(40):
        n = rng.randint(1, 4)
        m = rand_matrix(rng, n, n)
        d = exact_det(m)
        assert d.is_zero() == (exact_rank(m) < n)


def test_det_examples():
    assert exact_det(ExactMatrix.identity(3)) == ONE
    # columns one, four and five of the normal form: e1, (1,1,1), (1,p,q)
    p, q = scalar(2), scalar(3)
    m = ExactMatrix.from_rows([[ONE, ONE, ONE],
                               [ZERO, ONE, p],
                               [ZERO, ONE, q]])
    assert exact_det(m) == q - p


def test_det_not_square():
    with pytest.raises(NotSquareError):
        exact_det(ExactMatrix.zeros(2, 3))


def test_solve_and_inverse():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 4)
        m = rand_matrix(rng, n, n)
        if exact_det(m).is_zero():
            continue
        inv = exact_inverse(m)
        assert inv @ m == ExactMatrix.identity(n)
        b = [scalar(rng.randint(-4, 4)) for _ in range(n)]
        x = exact_solve(m, b)
        assert x is not None
        assert list(m.mat_vec(x)) == list(b)


def test_solve_inconsistent():
    m = ExactMatrix.from_rows([[ONE, ZERO], [ONE, ZERO]])
    assert exact_solve(m, [ONE, scalar(2)]) is None
