from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from doublecayley.linalg import Subspace, determinant, inverse, nullspace, rank, rref, solve

small = st.integers(min_value=-4, max_value=4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_rref_basic():
    red, piv = rref([[2, 4], [1, 3]])
    assert piv == [0, 1]
    assert red == [[1, 0], [0, 1]]


def test_rank_and_nullspace():
    m = [[1, 2, 3], [2, 4, 6]]
    assert rank(m) == 1
    ns = nullspace(m, 3)
    assert len(ns) == 2
    for v in ns:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


@settings(max_examples=60, deadline=None)
@given(matrices(4, 6))
def test_rank_nullity(m):
    assert rank(m, 6) + len(nullspace(m, 6)) == 6


@settings(max_examples=60, deadline=None)
@given(matrices(3, 3))
def test_inverse_or_singular(m):
    if determinant(m) == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(m)
    else:
        inv = inverse(m)
        prod = [[sum(Fraction(m[i][k]) * inv[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        assert prod == [[int(i == j) for j in range(3)] for i in range(3)]


def test_solve_inconsistent():
    assert solve([[1, 1], [1, 1]], [1, 2]) is None
    assert solve([[1, 1], [1, -1]], [2, 0]) == [1, 1]


def test_subspace_ops():
    a = Subspace([[1, 0, 0], [0, 1, 0]], 3)
    b = Subspace([[0, 1, 0], [0, 0, 1]], 3)
    assert a.intersect(b) == Subspace([[0, 1, 0]], 3)
    assert (a + b).dim == 3
    assert a.contains([2, -3, 0]) and not a.contains([0, 0, 1])
    assert Subspace([[2, 2, 0], [1, -1, 0]], 3) == a
