"""Equivariant polynomial maps carrying the plain representation onto the star representation.

A map `P` intertwines when `P(u * g) = P(u) * g_star` for every generator `g`; it then sends
plain invariants to star invariants and plain reflection hyperplanes into star hyperplanes.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import logging

from coxinv.algebra.expr import Composed
from coxinv.algebra.golden import PHI, PHI_BAR
from coxinv.algebra.identity import identity_check
from coxinv.algebra.matrix import Matrix
from coxinv.algebra.modular import XorShift64, derive_seed
from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing
from coxinv.constants import DEFAULT_POINTS_PER_PRIME, DEFAULT_SEED, LOGGER_NAME, RANDOM_WORDS
from coxinv.coxeter.generators import GeneratorSet, GroupType
from coxinv.invariants.basic import U3, U4, h_invariants
from coxinv.models import Mode, VerifyReport

logger = logging.getLogger(LOGGER_NAME)

_WORD_STREAM = 0x3D
_MAX_WORD_LENGTH = 12


@dataclass(frozen=True)
class EquivariantMap:
    group_type: GroupType
    ring: VarRing
    components: tuple[Poly, ...]

    @property
    def degree(self) -> int:
        return self.components[0].degree()

    def __len__(self) -> int:
        return len(self.components)

    def compose_with(self, images) -> list[Poly]:
        """`P(images)`, one polynomial per component."""
        return [component.substitute(images) for component in self.components]


def _cubic_map() -> tuple[Poly, ...]:
    u1, u2, u3 = Poly.variables(U3)
    return (
        u1 * (u1**2 - u2**2 * (PHI_BAR * 3) - u3**2 * (PHI * 3)),
        u2 * (u1**2 * (PHI * -3) + u2**2 - u3**2 * (PHI_BAR * 3)),
        u3 * (u1**2 * (PHI_BAR * -3) - u2**2 * (PHI * 3) + u3**2),
    )


def _septic_seed() -> Poly:
    """The polynomial from which the four components are obtained by permuting its arguments."""
    h2, h6, _ = h_invariants(U4)
    u4 = Poly.variable(U4, 'u4')
    bracket = h6 * -21 + h2**2 * u4**2 * 14 - h2 * u4**4 * 14 + u4**6 * 2
    return (u4 * bracket).scale(Fraction(1, 168))


# argument order of the seed polynomial for P1 .. P4
_SEPTIC_ARGUMENTS = (
    ('u4', 'u3', 'u2', 'u1'),
    ('u3', 'u4', 'u1', 'u2'),
    ('u2', 'u1', 'u4', 'u3'),
    ('u1', 'u2', 'u3', 'u4'),
)


@lru_cache(maxsize=None)
def equivariant_map(group_type: GroupType) -> EquivariantMap:
    if group_type == GroupType.H3:
        return EquivariantMap(GroupType.H3, U3, _cubic_map())
    seed = _septic_seed()
    components = tuple(
        seed.substitute([Poly.variable(U4, name) for name in arguments])
        for arguments in _SEPTIC_ARGUMENTS
    )
    return EquivariantMap(GroupType.H4, U4, components)


def acted(ring: VarRing, matrix: Matrix) -> list[Poly]:
    """The coordinates of `u * matrix` as linear polynomials in `u`."""
    return matrix.act(list(Poly.variables(ring)))


def check_invariance(
    f: Poly,
    g: GeneratorSet,
    mode: Mode = Mode.EXACT,
    name: str = 'f',
    *,
    anti: bool = False,
    points: int = DEFAULT_POINTS_PER_PRIME,
    seed: int = DEFAULT_SEED,
    threads: int = 1,
) -> VerifyReport:
    """Checks `f(u * s) = f(u)` for every generator `s`, or `= det(s) * f(u)` when `anti` is set."""
    report = VerifyReport(suite=f'invariance of {name}', mode=mode)
    for index, generator in enumerate(g.gens):
        expected = f.scale(generator.det()) if anti else f
        relation = '= det(s) *' if anti else '='
        label = f'{g.label()}: {name}(u s{index + 1}) {relation} {name}(u)'
        images = acted(f.ring, generator)
        if mode == Mode.EXACT:
            report.add_check(label, f.substitute(images) == expected)
        else:
            report.include(
                identity_check(
                    Composed(f, images),
                    expected,
                    mode,
                    label,
                    points=points,
                    seed=seed,
                    threads=threads,
                )
            )
    return report


def random_words(count: int, generator_count: int, seed: int) -> list[tuple[int, ...]]:
    """Seeded random generator words of length 1 to 12."""
    words = []
    for index in range(count):
        stream = XorShift64(derive_seed(seed, _WORD_STREAM, index))
        length = 1 + stream.next() % _MAX_WORD_LENGTH
        words.append(tuple(stream.next() % generator_count for _ in range(length)))
    return words


def _intertwines(p: EquivariantMap, plain: Matrix, star: Matrix) -> bool:
    left = p.compose_with(acted(p.ring, plain))
    right = star.act(list(p.components))
    return all(a == b for a, b in zip(left, right))


def check_intertwining(
    p: EquivariantMap,
    g_plain: GeneratorSet,
    g_star: GeneratorSet,
    *,
    words: int = RANDOM_WORDS,
    seed: int = DEFAULT_SEED,
) -> VerifyReport:
    """Checks `P(u * g) = P(u) * g_star` exactly on every generator and on random words."""
    report = VerifyReport(suite=f'intertwining {p.group_type.value}', mode=Mode.EXACT, seed=seed)
    for index, (plain, star) in enumerate(zip(g_plain.gens, g_star.gens)):
        report.add_check(
            f'{p.group_type.value}: P(u s{index + 1}) = P(u) s{index + 1}*',
            _intertwines(p, plain, star),
        )
    failed = []
    for word in random_words(words, len(g_plain.gens), seed):
        if not _intertwines(p, g_plain.word(word), g_star.word(word)):
            failed.append(word)
    detail = f'{words} words' if not failed else f'first failing word {failed[0]}'
    report.add_check(
        f'{p.group_type.value}: P(u w) = P(u) w* on random words', not failed, detail
    )
    logger.info(
        'Checked intertwining',
        extra={'group': p.group_type.value, 'words': words, 'failed': len(failed)},
    )
    return report

