"""Finite matrix groups generated by a `GeneratorSet`, their reflections and reflection forms.

During the closure every entry is held as a pair of integers `(x, y)` standing for
`(x + y*sqrt 5) / 4`. All entries of W(H3) and W(H4) lie in this lattice, so products are computed
on plain integers; a product leaving the lattice means the generators are corrupted. Element keys
are these integer tuples, which correspond one to one to the row-major text of the entries.
"""

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
import logging

from coxinv.algebra.golden import Golden
from coxinv.algebra.matrix import Matrix
from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing
from coxinv.constants import GROUP_CLOSURE_CAP, LOGGER_NAME
from coxinv.coxeter.generators import GeneratorSet
from coxinv.exceptions import GroupClosureError
from coxinv.models import VerifyReport

LatticeKey = tuple[int, ...]

logger = logging.getLogger(LOGGER_NAME)


def to_lattice(matrix: Matrix) -> LatticeKey:
    values: list[int] = []
    for row in matrix.rows:
        for entry in row:
            x, y = entry.a * 4, entry.b * 4
            if x.denominator != 1 or y.denominator != 1:
                raise GroupClosureError(
                    f'Entry {entry} is outside the lattice (x + y*sqrt 5)/4',
                    extra={'entry': str(entry)},
                )
            values.extend((int(x), int(y)))
    return tuple(values)


def from_lattice(key: LatticeKey, n: int) -> Matrix:
    entries = [Golden(Fraction(key[2 * k], 4), Fraction(key[2 * k + 1], 4)) for k in range(n * n)]
    return Matrix([entries[i * n : (i + 1) * n] for i in range(n)])


def lattice_mul(left: LatticeKey, right: LatticeKey, n: int) -> LatticeKey:
    result: list[int] = []
    for i in range(n):
        for j in range(n):
            x = 0
            y = 0
            for k in range(n):
                xa, ya = left[2 * (i * n + k)], left[2 * (i * n + k) + 1]
                xb, yb = right[2 * (k * n + j)], right[2 * (k * n + j) + 1]
                x += xa * xb + 5 * ya * yb
                y += xa * yb + ya * xb
            if x % 4 or y % 4:
                raise GroupClosureError('A product left the lattice; the generators are corrupted')
            result.extend((x // 4, y // 4))
    return tuple(result)


def lattice_identity(n: int) -> LatticeKey:
    return to_lattice(Matrix.identity(n))


def lattice_conj(key: LatticeKey) -> LatticeKey:
    return tuple(v if position % 2 == 0 else -v for position, v in enumerate(key))


def lattice_transpose(key: LatticeKey, n: int) -> LatticeKey:
    result: list[int] = []
    for i in range(n):
        for j in range(n):
            result.extend((key[2 * (j * n + i)], key[2 * (j * n + i) + 1]))
    return tuple(result)


def lattice_orthogonal(key: LatticeKey, n: int) -> bool:
    return lattice_mul(lattice_transpose(key, n), key, n) == lattice_identity(n)


@dataclass
class GroupTable:
    generators: GeneratorSet
    keys: list[LatticeKey]
    """Elements in breadth-first order from the identity."""
    _matrices: list[Matrix] | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.keys)

    @property
    def n(self) -> int:
        return self.generators.n

    def matrices(self) -> list[Matrix]:
        if self._matrices is None:
            self._matrices = [from_lattice(key, self.n) for key in self.keys]
        return self._matrices

    def key_set(self) -> set[LatticeKey]:
        return set(self.keys)

    def trace_counts(self) -> list[tuple[Golden, int]]:
        """Number of elements per trace, ordered by the rational part and then the sqrt 5 part."""
        counts: Counter = Counter()
        for key in self.keys:
            x = sum(key[2 * (i * self.n + i)] for i in range(self.n))
            y = sum(key[2 * (i * self.n + i) + 1] for i in range(self.n))
            counts[(x, y)] += 1
        traces = [(Golden(Fraction(x, 4), Fraction(y, 4)), c) for (x, y), c in counts.items()]
        return sorted(traces, key=lambda item: (item[0].a, item[0].b))


def enumerate_group(g: GeneratorSet, cap: int = GROUP_CLOSURE_CAP) -> GroupTable:
    """Breadth-first closure of the generators starting from the identity."""
    n = g.n
    gens = [to_lattice(generator) for generator in g.gens]
    identity = lattice_identity(n)
    seen = {identity}
    keys = [identity]
    frontier = [identity]
    while frontier:
        following = []
        for element in frontier:
            for generator in gens:
                product = lattice_mul(element, generator, n)
                if product in seen:
                    continue
                seen.add(product)
                keys.append(product)
                following.append(product)
                if len(keys) > cap:
                    raise GroupClosureError(
                        f'The closure exceeded {cap} elements',
                        extra={'group': g.label(), 'cap': cap},
                    )
        frontier = following
    logger.info('Enumerated group', extra={'group': g.label(), 'order': len(keys)})
    return GroupTable(g, keys)


@dataclass(frozen=True)
class Reflection:
    matrix: Matrix
    form: Poly
    """Linear form of the fixed hyperplane, first non-zero coefficient normalized to 1."""


def normalize_form(form: Poly) -> Poly:
    """Scales a linear form so that its first non-zero coefficient, in variable order, is 1."""
    for position in range(form.ring.arity):
        exponent = tuple(1 if k == position else 0 for k in range(form.ring.arity))
        coefficient = form.coefficient(exponent)
        if coefficient:
            return form.scale(coefficient.inverse())
    raise ValueError('The zero form has no normalization')


def _is_rank_one(matrix: Matrix) -> bool:
    rows = matrix.rows
    n = matrix.n
    if all(not value for row in rows for value in row):
        return False
    for i in range(n):
        for k in range(i + 1, n):
            for j in range(n):
                for m in range(j + 1, n):
                    if rows[i][j] * rows[k][m] - rows[i][m] * rows[k][j]:
                        return False
    return True


def find_reflections(table: GroupTable, u_ring: VarRing) -> list[Reflection]:
    """All involutions `M` with `rank(M - 1) = 1`, in enumeration order."""
    n = table.n
    identity_key = lattice_identity(n)
    identity = Matrix.identity(n)
    reflections = []
    for key in table.keys:
        if key == identity_key or lattice_mul(key, key, n) != identity_key:
            continue
        matrix = from_lattice(key, n)
        difference = matrix - identity
        if not _is_rank_one(difference):
            continue
        row = next(r for r in difference.rows if any(r))
        form = normalize_form(Poly.linear_form(u_ring, row))
        reflections.append(Reflection(matrix, form))
    return reflections


def forms_match(computed: Sequence[Poly], reference: Sequence[Poly]) -> bool:
    """Multiset equality after normalizing every form."""
    left = sorted(str(normalize_form(f)) for f in computed)
    right = sorted(str(normalize_form(f)) for f in reference)
    return left == right


def is_orthogonal(matrix: Matrix) -> bool:
    return (matrix.transpose() * matrix).is_identity()


def character_mismatch(
    g_plain: GeneratorSet, g_star: GeneratorSet, word: tuple[int, ...] = (0, 1)
) -> VerifyReport:
    """Passes when the trace of `word` differs between the two representations."""
    plain = g_plain.word(word).trace()
    star = g_star.word(word).trace()
    name = ''.join(f's{i + 1}' for i in word)
    report = VerifyReport(suite=f'character {g_plain.group_type.value}')
    report.add_check(
        f'{g_plain.group_type.value}: tr({name}) differs between the representations',
        plain != star,
        f'plain {plain}, star {star}',
    )
    return report
