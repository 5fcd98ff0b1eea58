"""Determinants of small matrices and exact linear solves over Q(sqrt 5)."""

from collections.abc import Sequence
from typing import Any

from coxinv.algebra.golden import ZERO, Golden
from coxinv.exceptions import ArityError, InconsistentSystemError, RankDeficientError


def determinant(rows: Sequence[Sequence[Any]]) -> Any:
    """Cofactor determinant of a square matrix over any commutative ring.

    Entries only need `+`, `-` and `*`; 4x4 matrices are expanded by complementary 2x2 minors of
    the first two rows, which takes 12 products of minors instead of 24 of 3x3 cofactors.
    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ArityError('The determinant needs a square matrix')
    if n == 0:
        raise ArityError('The determinant of an empty matrix is not defined here')
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    if n == 4:
        return _laplace_two_rows(rows)
    total = None
    for column in range(n):
        minor = [row[:column] + row[column + 1 :] for row in (list(r) for r in rows[1:])]
        term = rows[0][column] * determinant(minor)
        if total is None:
            total = term
        elif column % 2:
            total = total - term
        else:
            total = total + term
    return total


_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def _laplace_two_rows(rows: Sequence[Sequence[Any]]) -> Any:
    total = None
    for j, k in _PAIRS:
        top = rows[0][j] * rows[1][k] - rows[0][k] * rows[1][j]
        p, q = (c for c in range(4) if c not in (j, k))
        bottom = rows[2][p] * rows[3][q] - rows[2][q] * rows[3][p]
        term = top * bottom
        if (j + k + 1) % 2:
            term = -term
        total = term if total is None else total + term
    return total


def _eliminate(matrix: list[list[Golden]], columns: int) -> tuple[list[list[Golden]], list[int]]:
    """Reduced row echelon form over the first `columns` columns; returns rows and pivot columns."""
    pivots: list[int] = []
    row_index = 0
    for column in range(columns):
        pivot = next(
            (r for r in range(row_index, len(matrix)) if matrix[r][column]),
            None,
        )
        if pivot is None:
            continue
        matrix[row_index], matrix[pivot] = matrix[pivot], matrix[row_index]
        inverse = matrix[row_index][column].inverse()
        matrix[row_index] = [value * inverse for value in matrix[row_index]]
        lead = matrix[row_index]
        for r in range(len(matrix)):
            if r != row_index and matrix[r][column]:
                factor = matrix[r][column]
                matrix[r] = [
                    value - factor * pivot_value for value, pivot_value in zip(matrix[r], lead)
                ]
        pivots.append(column)
        row_index += 1
        if row_index == len(matrix):
            break
    return matrix, pivots


def rank(rows: Sequence[Sequence[Golden]]) -> int:
    if not rows:
        return 0
    matrix = [[Golden.of(v) for v in row] for row in rows]
    _, pivots = _eliminate(matrix, len(matrix[0]))
    return len(pivots)


def solve(rows: Sequence[Sequence[Golden]], rhs: Sequence[Golden]) -> list[Golden]:
    """The unique solution of an (over)determined system `rows * x = rhs`.

    Raises:
        RankDeficientError: the columns are linearly dependent on these rows.
        InconsistentSystemError: no vector satisfies every equation.
    """
    if len(rows) != len(rhs):
        raise ArityError('One right-hand side value per equation is required')
    if not rows:
        raise RankDeficientError('An empty system has no unique solution')
    columns = len(rows[0])
    augmented = [[Golden.of(v) for v in row] + [Golden.of(b)] for row, b in zip(rows, rhs)]
    reduced, pivots = _eliminate(augmented, columns)
    for row in reduced[len(pivots) :]:
        if row[columns]:
            raise InconsistentSystemError('The system has no solution')
    if len(pivots) < columns:
        raise RankDeficientError(
            f'Rank {len(pivots)} is below the {columns} unknowns',
            extra={'rank': len(pivots), 'unknowns': columns},
        )
    solution = [ZERO] * columns
    for row, column in zip(reduced, pivots):
        solution[column] = row[columns]
    return solution


def null_vector(rows: Sequence[Sequence[Golden]]) -> list[Golden] | None:
    """A non-zero kernel vector, or `None` when the columns are independent."""
    if not rows:
        return None
    columns = len(rows[0])
    matrix = [[Golden.of(v) for v in row] for row in rows]
    reduced, pivots = _eliminate(matrix, columns)
    free = next((c for c in range(columns) if c not in pivots), None)
    if free is None:
        return None
    vector = [ZERO] * columns
    vector[free] = Golden.of(1)
    for row, column in zip(reduced, pivots):
        vector[column] = -row[free]
    return vector
