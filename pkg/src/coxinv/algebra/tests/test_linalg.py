from fractions import Fraction

import pytest

from coxinv.algebra.golden import PHI, SQRT5, Golden
from coxinv.algebra.linalg import determinant, null_vector, rank, solve
from coxinv.algebra.matrix import Matrix
from coxinv.exceptions import ArityError, InconsistentSystemError, RankDeficientError


@pytest.mark.parametrize(
    'rows, expected',
    [
        ([[3]], 3),
        ([[1, 2], [3, 4]], -2),
        ([[2, 0, 1], [1, 3, 2], [1, 1, 1]], 0),
        ([[1, 2, 0, 0], [0, 1, 2, 0], [0, 0, 1, 2], [2, 0, 0, 1]], -15),
        ([[2, 0, 0, 0, 0], [0, 2, 0, 0, 0], [0, 0, 2, 0, 0], [0, 0, 0, 2, 0], [0, 0, 0, 0, 2]], 32),
    ],
)
def test_determinant(rows: list[list[int]], expected: int):
    # WHEN
    result = determinant([[Golden(v) for v in row] for row in rows])
    # THEN
    assert result == expected


def test_determinant_over_polynomials(xy):
    # GIVEN
    x, y = xy
    # WHEN
    result = determinant([[x, y], [y, x]])
    # THEN
    assert result == x**2 - y**2


def test_determinant_needs_a_square_matrix():
    # WHEN/THEN
    with pytest.raises(ArityError):
        determinant([[1, 2]])


def test_solve_overdetermined_system():
    # GIVEN
    rows = [[1, 1], [1, -1], [2, 1]]
    rhs = [PHI + 1, PHI - 1, PHI * 2 + 1]
    # WHEN
    result = solve(rows, rhs)
    # THEN
    assert result == [PHI, Golden(1)]


def test_solve_inconsistent_system():
    # WHEN/THEN
    with pytest.raises(InconsistentSystemError):
        solve([[1, 0], [0, 1], [1, 1]], [1, 1, 3])


def test_solve_rank_deficient_system():
    # WHEN/THEN
    with pytest.raises(RankDeficientError) as e:
        solve([[1, 2], [2, 4]], [1, 2])
    assert e.value.get_extra_details() == {'rank': 1, 'unknowns': 2}


def test_rank_and_null_vector():
    # GIVEN
    rows = [[SQRT5, 5], [1, SQRT5]]
    # WHEN
    vector = null_vector(rows)
    # THEN
    assert rank(rows) == 1
    assert vector is not None
    assert all(sum((a * v for a, v in zip(row, vector)), Golden(0)) == 0 for row in rows)
    assert null_vector([[1, 0], [0, 1]]) is None


def test_matrix_operations():
    # GIVEN
    rotation = Matrix([[0, -1], [1, 0]])
    # THEN
    assert rotation**4 == Matrix.identity(2)
    assert rotation.det() == 1
    assert rotation.trace() == 0
    assert rotation.transpose() * rotation == Matrix.identity(2)


def test_matrix_conjugation():
    # GIVEN
    m = Matrix.diagonal([PHI, Fraction(1, 2)])
    # WHEN
    result = m.conj()
    # THEN
    assert result[0, 0] == PHI.conj()
    assert result[1, 1] == Fraction(1, 2)
