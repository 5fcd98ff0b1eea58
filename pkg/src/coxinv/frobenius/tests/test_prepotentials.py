from fractions import Fraction

import pytest

from coxinv.algebra.locpoly import LocPoly
from coxinv.algebra.parse import golden_poly, parse_expression
from coxinv.algebra.poly import Poly, weighted_degree
from coxinv.frobenius.discriminants import (
    check_symmetry,
    check_unit_field,
    discriminant,
    discriminant_expression,
    second_derivatives,
)
from coxinv.frobenius.prepotentials import (
    H3PRIME_RING,
    X3_RING,
    PrepotentialName,
    implicit_derivative,
    prepotential,
    total_derivative,
)
from coxinv.frobenius.suites import h3_disc_suite, h3prime_suite
from coxinv.models import SuiteSpec


@pytest.fixture(scope='module')
def h3():
    return prepotential(PrepotentialName.H3)


@pytest.fixture(scope='module')
def h3prime():
    return prepotential(PrepotentialName.H3PRIME)


def test_h3_prepotential(h3):
    # THEN
    assert not h3.is_algebraic
    assert h3.ring.names == ('x1', 'x2', 'x3')
    assert h3.expr.coefficient((11, 0, 0)) == Fraction(1, 3960)
    assert weighted_degree(h3.expr) == Fraction(11, 5)


def test_h3_unit_field_and_symmetry(h3):
    # THEN
    assert check_unit_field(h3).passed
    assert check_symmetry(h3).passed


def test_h3_second_derivatives_pair_partners(h3):
    # WHEN
    c = second_derivatives(h3)
    # THEN
    assert c[0][0].diff('x3') == 1
    assert c[1][2].diff('x3') == 0


def test_h3_discriminant_matches_the_printed_polynomial(h3):
    # WHEN
    delta = discriminant(h3)
    # THEN
    assert isinstance(delta, Poly)
    assert delta == golden_poly('disc_h3').to_ring(X3_RING)
    assert weighted_degree(delta.to_ring(X3_RING)) == 3


def test_unexpanded_discriminant_agrees_at_a_point(h3):
    # GIVEN
    point = [2, -1, 3]
    # WHEN
    value = discriminant_expression(h3).value(point)
    # THEN
    assert value == discriminant(h3).evaluate(point)


def test_h3prime_is_algebraic(h3prime):
    # THEN
    assert h3prime.is_algebraic
    assert h3prime.alg_var == 'z'
    assert h3prime.flat_names == ('t1', 't2', 't3')
    assert h3prime.ring.names == H3PRIME_RING.names


@pytest.mark.parametrize(
    'flat, numerator, denominator',
    [
        ('t1', '-z', 't1+4*z^3'),
        ('t2', '-1', 't1+4*z^3'),
    ],
)
def test_h3prime_implicit_derivatives(h3prime, flat: str, numerator: str, denominator: str):
    # GIVEN
    expected = LocPoly(
        parse_expression(numerator, H3PRIME_RING),  # type: ignore[arg-type]
        [parse_expression(denominator, H3PRIME_RING)],  # type: ignore[list-item]
        [1],
    )
    # WHEN
    result = implicit_derivative(h3prime, flat)
    # THEN
    assert result == expected


def test_h3prime_constraint_does_not_involve_the_unit(h3prime):
    # WHEN
    result = implicit_derivative(h3prime, 't3')
    # THEN
    assert result.is_zero()


def test_total_derivative_along_the_unit(h3prime):
    # GIVEN
    z = Poly.variable(H3PRIME_RING, 'z')
    # WHEN
    result = total_derivative(h3prime, z, 't3')
    # THEN
    assert LocPoly.of(result).is_zero()


def test_implicit_derivative_of_a_polynomial_prepotential(h3):
    # WHEN/THEN
    with pytest.raises(ValueError):
        implicit_derivative(h3, 'x1')


def test_h3_disc_suite(exact_spec: SuiteSpec):
    # WHEN
    report = h3_disc_suite(exact_spec)
    # THEN
    assert report.passed, report.failures()


def test_h3prime_suite(exact_spec: SuiteSpec):
    # WHEN
    report = h3prime_suite(exact_spec)
    # THEN
    assert report.passed, report.failures()
    assert report.derived_constants['disc_h3prime'] == Fraction(1, 3000)
