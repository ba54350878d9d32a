"""Exact linear algebra: solver, inverse, Kronecker product, nilpotency."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfgauge.cyclotomic import CycNum
from hopfgauge.linalg import (
    Mat,
    SingularMatrixError,
    Tensor3,
    inverse,
    is_nilpotent,
    kron,
    nullspace,
    rank,
    solve,
)

ints = st.integers(min_value=-4, max_value=4)


def vec(*values, conductor=1):
    return [CycNum.from_rational(v, conductor) for v in values]


def test_solve_identity():
    sol = solve(Mat.identity(3), vec(1, 0, 0))
    assert sol.particular == vec(1, 0, 0)
    assert sol.nullspace == []


def test_solve_zero_matrix():
    sol = solve(Mat.zeros(2, 2), vec(0, 0))
    assert sol.particular == vec(0, 0)
    assert len(sol.nullspace) == 2


def test_solve_rank_one():
    sol = solve(Mat([[1, 1], [1, 1]]), vec(1, 1))
    assert sol.particular == vec(1, 0)
    assert len(sol.nullspace) == 1
    v = sol.nullspace[0]
    assert (v[0] + v[1]).is_zero() and not v[0].is_zero()


def test_solve_inconsistent():
    assert solve(Mat([[1, 1], [1, 1]]), vec(1, 2)) is None


def test_inverse_examples():
    assert inverse(Mat.identity(4)) == Mat.identity(4)
    D = inverse(Mat([[2, 0], [0, 3]]))
    assert D.apply(vec(2, 3)) == vec(1, 1)
    P = Mat([[0, 1], [1, 0]])
    assert inverse(P) == P
    with pytest.raises(SingularMatrixError):
        inverse(Mat([[1, 1], [1, 1]]))


def test_kron_examples():
    assert kron(Mat.identity(2), Mat.identity(2)) == Mat.identity(4)
    # 1x1 left factor acts as a scalar
    B = Mat([[1, 2], [3, 4]])
    assert kron(Mat([[5]]), B) == B.scale(CycNum.from_rational(5))
    # index bookkeeping: (A (x) I)(e2 (x) e1) = e1 (x) e1 for A = E_{12}
    A = Mat([[0, 1], [0, 0]])
    out = kron(A, Mat.identity(2)).apply(vec(0, 0, 1, 0))
    assert out == vec(1, 0, 0, 0)


def test_is_nilpotent_examples():
    assert is_nilpotent(Mat.zeros(3, 3))
    assert not is_nilpotent(Mat.identity(3))
    shift = Mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert is_nilpotent(shift)
    assert not is_nilpotent(Mat([[0, 1], [1, 0]]))


def _random_mat(rng, rows, cols, conductor=1):
    return Mat(
        [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)],
        conductor,
    )


def test_solve_substitution_reproduces_rhs():
    rng = random.Random(7)
    for _ in range(25):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        A = _random_mat(rng, rows, cols)
        b = [CycNum.from_rational(rng.randint(-4, 4)) for _ in range(rows)]
        sol = solve(A, b)
        if sol is None:
            continue
        assert A.apply(sol.particular) == b
        for v in sol.nullspace:
            shifted = [x + y for x, y in zip(sol.particular, v)]
            assert A.apply(shifted) == b


@given(st.integers(2, 4), st.integers(2, 4), st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_rank_nullity(rows, cols, seed):
    rng = random.Random(seed)
    A = _random_mat(rng, rows, cols)
    assert rank(A) + len(nullspace(A)) == cols


@given(st.integers(0, 10_000))
@settings(max_examples=20, deadline=None)
def test_kron_associative(seed):
    rng = random.Random(seed)
    A = _random_mat(rng, 2, 2)
    B = _random_mat(rng, 2, 3)
    C = _random_mat(rng, 3, 2)
    assert kron(kron(A, B), C) == kron(A, kron(B, C))


def test_kron_over_cyclotomic_entries():
    z = CycNum.zeta(3)
    A = Mat([[z]])
    B = Mat([[z, 0], [0, z ** 2]])
    K = kron(A, B)
    assert K.entries[0][0] == z ** 2 and K.entries[1][1] == 1


def test_tensor3_shape_and_access():
    t = Tensor3.from_dict(2, {(0, 1, 1): CycNum.one()})
    assert t.get(0, 1, 1) == 1
    assert t.get(1, 1, 1).is_zero()
    with pytest.raises(ValueError):
        Tensor3(2, [CycNum.zero()] * 7)


def test_matrix_power_and_trace():
    A = Mat([[0, 1], [1, 0]])
    assert A ** 2 == Mat.identity(2)
    assert A ** 0 == Mat.identity(2)
    assert (A ** 3) == A
    assert Mat.identity(5).trace() == 5
