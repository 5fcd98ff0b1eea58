from fractions import Fraction

import pytest

from coxinv.algebra.format import format_golden
from coxinv.algebra.golden import ONE, PHI, PHI_BAR, SQRT5, ZERO, Golden
from coxinv.exceptions import ZeroDivisorError


def test_golden_ratio_satisfies_its_minimal_polynomial():
    # WHEN
    result = PHI**2 - PHI - 1
    # THEN
    assert result == 0
    assert PHI + PHI_BAR == 1
    assert PHI * PHI_BAR == -1


def test_square_root_of_five():
    # THEN
    assert SQRT5 * SQRT5 == 5
    assert not SQRT5.is_rational()
    assert (SQRT5 * SQRT5).is_rational()


@pytest.mark.parametrize(
    'value, expected',
    [
        (Golden(1, 1), Fraction(-4)),
        (Golden(3, 0), Fraction(9)),
        (Golden(Fraction(1, 2), Fraction(1, 2)), Fraction(-1)),
    ],
)
def test_norm(value: Golden, expected: Fraction):
    # WHEN
    result = value.norm()
    # THEN
    assert result == expected
    assert value * value.conj() == expected


def test_inverse():
    # GIVEN
    value = Golden(1, 1)
    # WHEN
    result = value.inverse()
    # THEN
    assert result == Golden(Fraction(-1, 4), Fraction(1, 4))
    assert value * result == ONE


def test_inverse_of_zero_raises():
    # WHEN/THEN
    with pytest.raises(ZeroDivisorError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        Golden(2, 3) / 0


def test_negative_powers():
    # WHEN
    result = PHI**-3
    # THEN
    assert result * PHI**3 == 1


def test_mixed_arithmetic_with_rationals():
    # WHEN
    result = 2 - Golden(Fraction(1, 3), 1) * 3
    # THEN
    assert result == Golden(1, -3)
    assert Golden(Fraction(1, 2)) == Fraction(1, 2)
    assert Golden(5) == 5


def test_hash_matches_rationals():
    # THEN
    assert hash(Golden(7)) == hash(Fraction(7))
    assert len({Golden(1, 1), Golden(1, 1), Golden(1, -1)}) == 2


def test_golden_values_are_immutable():
    # WHEN/THEN
    with pytest.raises(AttributeError):
        PHI.a = Fraction(0)  # type: ignore[misc]


@pytest.mark.parametrize(
    'value, expected',
    [
        (Golden(0), '0'),
        (Golden(Fraction(-3, 2)), '-3/2'),
        (SQRT5, 'r5'),
        (-SQRT5, '-r5'),
        (PHI, '1/2+1/2*r5'),
        (PHI_BAR, '1/2-1/2*r5'),
        (Golden(3, -2), '3-2*r5'),
        (Golden(0, Fraction(2, 3)), '2/3*r5'),
    ],
)
def test_format_golden(value: Golden, expected: str):
    # WHEN
    result = format_golden(value)
    # THEN
    assert result == expected
    assert str(value) == expected
