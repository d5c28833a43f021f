from fractions import Fraction
from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st
import numpy as np

from lenewton.linalg import affine_rank, det, inverse, primitive, rank


def leibniz(m):
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-20, 20), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@settings(max_examples=200, deadline=None)
@given(square)
def test_det_matches_leibniz(m):
    assert det(m) == leibniz(m)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda c: st.lists(
    st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=5)))
def test_rank_matches_numpy(m):
    assert rank(m) == np.linalg.matrix_rank(np.array(m, dtype=float))


def test_det_examples():
    assert det([[2, 2, 0], [0, 4, 0], [0, 0, 4]]) == 32
    assert det([[2, 2, 0], [0, 0, 4], [1, 0, 0]]) == 8
    assert det([[1, 2], [2, 4]]) == 0


def test_affine_rank():
    assert affine_rank([(2, 2, 0), (0, 4, 0), (0, 0, 4)]) == 2
    assert affine_rank([(1, 0), (2, 0), (3, 0)]) == 1
    assert affine_rank([(1, 1)]) == 0


def test_primitive():
    assert primitive((4, 6, 10)) == (2, 3, 5)
    assert primitive((0, 0)) == (0, 0)


def test_inverse():
    m = [[2, 1], [1, 1]]
    inv = inverse(m)
    assert inv == [[1, -1], [-1, 2]]
    assert all(isinstance(x, Fraction) for row in inv for x in row)
