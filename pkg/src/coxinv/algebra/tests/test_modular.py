from fractions import Fraction

import pytest

from coxinv.algebra.golden import PHI, SQRT5, Golden
from coxinv.algebra.modular import PRIMES, XorShift64, derive_seed, modular_contexts, point_stream
from coxinv.exceptions import BadPointError


def test_primes_admit_a_square_root_of_five():
    # WHEN
    contexts = modular_contexts()
    # THEN
    assert [ctx.p for ctx in contexts] == list(PRIMES)
    for ctx in contexts:
        assert ctx.p % 20 == 11
        assert ctx.sqrt5 * ctx.sqrt5 % ctx.p == 5


@pytest.mark.parametrize(
    'left, right',
    [
        (PHI, Golden(Fraction(2, 3), -7)),
        (SQRT5, SQRT5),
        (Golden(Fraction(-5, 11)), Golden(0, Fraction(1, 9))),
    ],
)
def test_reduction_is_a_ring_homomorphism(left: Golden, right: Golden):
    for ctx in modular_contexts():
        # THEN
        assert ctx.reduce(left * right) == ctx.reduce(left) * ctx.reduce(right) % ctx.p
        assert ctx.reduce(left + right) == (ctx.reduce(left) + ctx.reduce(right)) % ctx.p


def test_inverse_of_zero_is_a_bad_point():
    # GIVEN
    ctx = modular_contexts()[0]
    # WHEN/THEN
    with pytest.raises(BadPointError):
        ctx.inverse(ctx.p)


def test_streams_are_reproducible():
    # WHEN
    first = [point_stream(3, 1, 4).next() for _ in range(2)]
    second = point_stream(3, 1, 5)
    # THEN
    assert first[0] == first[1]
    assert second.next() != first[0]


def test_residues_stay_in_range():
    # GIVEN
    stream = XorShift64(derive_seed(11, 2))
    p = PRIMES[0]
    # WHEN
    values = [stream.residue(p) for _ in range(100)]
    # THEN
    assert all(0 <= v < p for v in values)
    assert len(set(values)) == 100


def test_small_integers_stay_in_range():
    # GIVEN
    stream = XorShift64(5)
    # WHEN
    values = {stream.small_int(-2, 2) for _ in range(200)}
    # THEN
    assert values == {-2, -1, 0, 1, 2}
