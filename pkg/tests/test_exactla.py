from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from invconn.exactla import (
    Mat,
    NonSquare,
    Q,
    SingularMatrix,
    SizeMismatch,
    commutator,
    det,
    inverse,
    is_positive_definite,
    nullspace,
    rank,
    solve,
    trace,
    vadd,
)

from oracles import cramer_solve, leibniz_det, leibniz_det_unpruned
from strategies import matrices, rationals, small_ints, vectors


def test_solve_two_by_two():
    assert solve(Mat([[2, 1], [1, 3]]), [3, 5]) == (Fraction(4, 5), Fraction(7, 5))


def test_solve_u_system():
    # omega^T u = traces on the solvmanifold: omega = e12 - e34, traces (0, 0, 0, 2)
    omega = Mat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    assert solve(omega.T, [0, 0, 0, 2]) == (0, 0, -2, 0)


def test_solve_singular():
    with pytest.raises(SingularMatrix):
        solve(Mat([[1, 2], [2, 4]]), [1, 2])


def test_solve_size_checks():
    with pytest.raises(NonSquare):
        solve(Mat([[1, 2, 3], [4, 5, 6]]), [1, 2])
    with pytest.raises(SizeMismatch):
        solve(Mat.identity(2), [1, 2, 3])


def test_trace_values():
    assert trace(Mat.identity(3)) == 3
    assert trace(Mat([[1, 2], [3, 4]])) == 5
    with pytest.raises(NonSquare):
        trace(Mat([[1, 2, 3]]))


def test_commutator_examples():
    A = Mat([[1, 2], [3, 4]])
    assert commutator(A, A).is_zero()
    assert commutator(Mat.identity(2), A).is_zero()
    E, F = Mat([[0, 1], [0, 0]]), Mat([[0, 0], [1, 0]])
    assert commutator(E, F) == Mat([[1, 0], [0, -1]])


def test_no_floats():
    with pytest.raises(TypeError):
        Q(0.5)
    with pytest.raises(TypeError):
        Mat([[0.5]])


def test_fraction_normalized():
    assert Q("-6/4") == Fraction(-3, 2)
    assert Mat([["2/4"]])[0, 0].denominator == 2


def test_matrix_is_immutable():
    M = Mat.identity(2)
    with pytest.raises(AttributeError):
        M.rows = 3


def test_column_convention():
    M = Mat.from_columns([[1, 2], [3, 4]])
    assert M @ (1, 0) == (1, 2)
    assert M.col(1) == (3, 4)


def test_positive_definite_sylvester():
    assert is_positive_definite(Mat.identity(3) * 2)
    assert not is_positive_definite(Mat([[1, 2], [2, 1]]))
    assert not is_positive_definite(Mat.zeros(2))


def test_nullspace_and_rank():
    A = Mat([[1, 1, 0], [0, 0, 1]])
    (v,) = nullspace(A)
    assert A @ v == (0, 0)
    assert rank(A) == 2


@given(matrices(4))
def test_det_matches_leibniz(rows):
    A = Mat(rows)
    assert det(A) == leibniz_det(A.tolist()) == leibniz_det_unpruned(A.tolist())


@given(matrices(4), vectors(4))
def test_solve_matches_cramer(rows, b):
    A = Mat(rows)
    assume(det(A) != 0)
    assert list(solve(A, b)) == cramer_solve(A.tolist(), list(b))


@given(st.integers(min_value=1, max_value=8).flatmap(lambda n: st.tuples(matrices(n), vectors(n))))
def test_solve_roundtrip(data):
    rows, x = data
    A = Mat(rows)
    assume(det(A) != 0)
    assert solve(A, A @ x) == x


@given(matrices(3), matrices(3))
def test_trace_of_commutator_vanishes(a, b):
    assert trace(commutator(Mat(a), Mat(b))) == 0


@given(matrices(3, elements=rationals))
def test_inverse(rows):
    A = Mat(rows)
    assume(det(A) != 0)
    assert A @ inverse(A) == Mat.identity(3)


@given(rationals, rationals, rationals)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@given(vectors(3), vectors(3))
def test_vadd_commutes(x, y):
    assert vadd(x, y) == vadd(y, x)


@given(small_ints)
def test_det_scales(c):
    assert det(Mat.identity(3) * c) == c ** 3
