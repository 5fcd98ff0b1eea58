from collections.abc import Sequence

from coxinv.algebra.golden import ONE, ZERO, Golden, Scalar
from coxinv.algebra.linalg import determinant, rank
from coxinv.exceptions import ArityError


class Matrix:
    """A small square matrix over Q(sqrt 5), acting on row vectors from the right."""

    __slots__ = ('n', 'rows')

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        n = len(rows)
        if not n or any(len(row) != n for row in rows):
            raise ArityError('A matrix must be square and non-empty')
        self.n = n
        self.rows: tuple[tuple[Golden, ...], ...] = tuple(
            tuple(Golden.of(value) for value in row) for row in rows
        )

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> 'Matrix':
        n = len(values)
        return cls([[values[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    def __getitem__(self, index: tuple[int, int]) -> Golden:
        i, j = index
        return self.rows[i][j]

    def __mul__(self, other: 'Matrix') -> 'Matrix':
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.n != self.n:
            raise ArityError(f'Cannot multiply a {self.n}x{self.n} by a {other.n}x{other.n} matrix')
        columns = list(zip(*other.rows))
        return Matrix(
            [
                [sum((a * b for a, b in zip(row, column)), ZERO) for column in columns]
                for row in self.rows
            ]
        )

    def __pow__(self, exponent: int) -> 'Matrix':
        if exponent < 0:
            raise ValueError('Only non-negative matrix powers are supported')
        result = Matrix.identity(self.n)
        for _ in range(exponent):
            result = result * self
        return result

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def conj(self) -> 'Matrix':
        """Entrywise Galois conjugation."""
        return Matrix([[value.conj() for value in row] for row in self.rows])

    def transpose(self) -> 'Matrix':
        return Matrix(list(zip(*self.rows)))

    def trace(self) -> Golden:
        return sum((self.rows[i][i] for i in range(self.n)), ZERO)

    def det(self) -> Golden:
        return determinant(self.rows)

    def rank(self) -> int:
        return rank(self.rows)

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.n)

    def act(self, vector: Sequence):
        """Right action on a row vector: component `j` of `v * M` is `sum_i v[i] * M[i][j]`."""
        if len(vector) != self.n:
            raise ArityError(f'Expected a vector of length {self.n}')
        result = []
        for j in range(self.n):
            total = None
            for i in range(self.n):
                entry = self.rows[i][j]
                if not entry:
                    continue
                term = vector[i] * entry
                total = term if total is None else total + term
            result.append(total if total is not None else vector[0] * ZERO)
        return result

    def act_column(self, vector: Sequence):
        """Left action on a column vector: component `i` of `M * v` is `sum_j M[i][j] * v[j]`."""
        if len(vector) != self.n:
            raise ArityError(f'Expected a vector of length {self.n}')
        return [
            sum((entry * value for entry, value in zip(row, vector)), ZERO) for row in self.rows
        ]

    def key(self) -> tuple[str, ...]:
        """Canonical key: the text of every entry in row-major order."""
        return tuple(str(value) for row in self.rows for value in row)

    def __repr__(self) -> str:
        return f'Matrix({[[str(v) for v in row] for row in self.rows]})'
