import random
from fractions import Fraction as Fr

import pytest

from hopfpar.errors import DimensionMismatch
from hopfpar.fields import RationalField
from hopfpar.linalg import (Mat, Subspace, identity_mat, image, kernel,
                            preimage, subspace_intersect, subspace_sum)

QQ = RationalField()


def mat(rows):
    return Mat(QQ, [[Fr(x) for x in r] for r in rows])


def span(ambient, rows):
    return Subspace.from_rows(QQ, ambient, [[Fr(x) for x in r] for r in rows])


def test_kernel_of_identity_is_zero():
    assert kernel(identity_mat(QQ, 3)).dim == 0


def test_kernel_of_zero_matrix_is_full():
    assert kernel(mat([[0, 0], [0, 0]])).dim == 2


def test_kernel_row_reduction_example():
    # oracle: rref([[1,1],[2,2]]) = [[1,1]], free column 2 -> basis (1,-1)... the
    # normalized kernel vector is (1,-1) up to sign; canonical form fixes it
    k = kernel(mat([[1, 1], [2, 2]]))
    assert k.dim == 1
    assert k.basis == ((Fr(1), Fr(-1)),)


def test_preimage_full_codomain():
    M = mat([[1, 2], [3, 4], [0, 1]])
    assert preimage(M, Subspace.full(QQ, 3)).dim == 2


def test_preimage_zero_of_injective():
    assert preimage(identity_mat(QQ, 2), Subspace.zero(QQ, 2)).dim == 0


def test_preimage_direct_check_example():
    # M = [[1,0],[0,0]], S = span{(1,0)}: Mv = (v1, 0) always lies in S
    M = mat([[1, 0], [0, 0]])
    S = span(2, [[1, 0]])
    assert preimage(M, S) == Subspace.full(QQ, 2)


def test_preimage_contains_kernel():
    rng = random.Random(3)
    for _ in range(25):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        M = mat([[rng.randint(-3, 3) for _ in range(m)] for _ in range(n)])
        S = span(n, [[rng.randint(-2, 2) for _ in range(n)]])
        P = preimage(M, S)
        assert P.contains_subspace(kernel(M))


def test_sum_with_zero():
    s = span(3, [[1, 2, 3]])
    assert subspace_sum(s, Subspace.zero(QQ, 3)) == s


def test_sum_of_axes_is_full():
    assert subspace_sum(span(2, [[1, 0]]), span(2, [[0, 1]])) == Subspace.full(QQ, 2)


def test_intersection_echelon_example():
    a = span(3, [[1, 1, 0]])
    b = span(3, [[1, 1, 0], [0, 0, 1]])
    assert subspace_intersect(a, b) == a


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        subspace_sum(span(2, [[1, 0]]), span(3, [[1, 0, 0]]))
    with pytest.raises(DimensionMismatch):
        preimage(mat([[1, 0]]), Subspace.full(QQ, 2))


def test_preimage_of_image_is_full_domain():
    rng = random.Random(0)
    for _ in range(40):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        M = mat([[rng.randint(-3, 3) for _ in range(m)] for _ in range(n)])
        assert preimage(M, image(M)).dim == m
        assert kernel(M).dim + image(M).dim == m


def test_canonicalization_idempotent_and_span_invariant():
    rng = random.Random(5)
    for _ in range(40):
        m = rng.randint(1, 4)
        rows = [[rng.randint(-2, 2) for _ in range(m)]
                for _ in range(rng.randint(0, 3))]
        s = span(m, rows)
        assert Subspace.from_rows(QQ, m, [list(r) for r in s.basis]) == s
        shuffled = list(rows)
        rng.shuffle(shuffled)
        assert span(m, [[2 * x for x in r] for r in shuffled]) == s


def test_dimension_formula():
    rng = random.Random(9)
    for _ in range(40):
        m = rng.randint(1, 4)
        s1 = span(m, [[rng.randint(-2, 2) for _ in range(m)]
                      for _ in range(rng.randint(0, m))])
        s2 = span(m, [[rng.randint(-2, 2) for _ in range(m)]
                      for _ in range(rng.randint(0, m))])
        lhs = subspace_sum(s1, s2).dim
        assert lhs == s1.dim + s2.dim - subspace_intersect(s1, s2).dim
