"""Generating reflections of W(H3) and W(H4) and their Galois-conjugate (star) representations.

Matrices act on row vectors: a point `u` is sent to `u * g`.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from coxinv.algebra.golden import ONE, PHI, PHI_BAR, ZERO, Golden
from coxinv.algebra.matrix import Matrix
from coxinv.models import VerifyReport

HALF = Fraction(1, 2)


class Variant(Enum):
    PLAIN = 'plain'
    STAR = 'star'


class GroupType(Enum):
    H3 = 'h3'
    H4 = 'h4'


COXETER_ORDERS = {
    GroupType.H3: ((1, 5, 2), (5, 1, 3), (2, 3, 1)),
    GroupType.H4: ((1, 5, 2, 2), (5, 1, 3, 2), (2, 3, 1, 3), (2, 2, 3, 1)),
}
"""Coxeter matrices m_ij: s_i s_j has order m_ij."""


@dataclass(frozen=True)
class GeneratorSet:
    group_type: GroupType
    variant: Variant
    gens: tuple[Matrix, ...]
    coxeter_orders: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.gens[0].n

    def word(self, indices: tuple[int, ...] | list[int]) -> Matrix:
        """The product `g[i0] * g[i1] * ...` of generators (0-based indices)."""
        result = Matrix.identity(self.n)
        for index in indices:
            result = result * self.gens[index]
        return result

    def label(self) -> str:
        return f'{self.group_type.value}/{self.variant.value}'


def _half(rows) -> Matrix:
    return Matrix([[Golden.of(value) * HALF for value in row] for row in rows])


def _rho_plain() -> list[Matrix]:
    a, abar = PHI, PHI_BAR
    return [
        Matrix.diagonal([-ONE, ONE, ONE]),
        _half([[abar, ONE, -a], [ONE, a, -abar], [-a, -abar, ONE]]),
        Matrix.diagonal([ONE, ONE, -ONE]),
    ]


def _sigma_plain() -> list[Matrix]:
    a, abar = PHI, PHI_BAR
    embedded = []
    for generator in _rho_plain():
        rows = [list(row) + [ZERO] for row in generator.rows]
        rows.append([ZERO, ZERO, ZERO, ONE])
        embedded.append(Matrix(rows))
    two = Golden(2)
    embedded.append(
        _half(
            [
                [two, ZERO, ZERO, ZERO],
                [ZERO, abar, -a, ONE],
                [ZERO, -a, ONE, -abar],
                [ZERO, ONE, -abar, a],
            ]
        )
    )
    return embedded


def generators_h3(variant: Variant = Variant.PLAIN) -> GeneratorSet:
    gens = _rho_plain()
    if variant == Variant.STAR:
        gens = [g.conj() for g in gens]
    return GeneratorSet(GroupType.H3, variant, tuple(gens), COXETER_ORDERS[GroupType.H3])


def generators_h4(variant: Variant = Variant.PLAIN) -> GeneratorSet:
    gens = _sigma_plain()
    if variant == Variant.STAR:
        gens = [g.conj() for g in gens]
    return GeneratorSet(GroupType.H4, variant, tuple(gens), COXETER_ORDERS[GroupType.H4])


def generators(group_type: GroupType, variant: Variant = Variant.PLAIN) -> GeneratorSet:
    if group_type == GroupType.H3:
        return generators_h3(variant)
    return generators_h4(variant)


def multiplicative_order(matrix: Matrix, limit: int = 60) -> int | None:
    power = matrix
    for exponent in range(1, limit + 1):
        if power.is_identity():
            return exponent
        power = power * matrix
    return None


def check_relations(g: GeneratorSet) -> VerifyReport:
    """Checks `s_i^2 = 1` and that `s_i s_j` has order exactly `m_ij`."""
    report = VerifyReport(suite=f'relations {g.label()}')
    for i, generator in enumerate(g.gens):
        report.add_check(f'{g.label()}: s{i + 1}^2 = 1', (generator * generator).is_identity())
    for i in range(len(g.gens)):
        for j in range(i + 1, len(g.gens)):
            expected = g.coxeter_orders[i][j]
            order = multiplicative_order(g.gens[i] * g.gens[j])
            report.add_check(
                f'{g.label()}: (s{i + 1}s{j + 1})^{expected} = 1',
                order == expected,
                f'order {order}',
            )
    return report
