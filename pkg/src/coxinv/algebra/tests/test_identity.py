from fractions import Fraction

import pytest

from coxinv.algebra.expr import Product, compose
from coxinv.algebra.golden import PHI, Golden
from coxinv.algebra.identity import derive_ratio, identity_check, proportionality_check
from coxinv.algebra.locpoly import LocPoly
from coxinv.algebra.poly import Poly
from coxinv.models import Mode, Status


@pytest.mark.parametrize('mode', [Mode.EXACT, Mode.MODULAR])
def test_true_identity_passes(xy, mode: Mode):
    # GIVEN
    x, y = xy
    lhs = (x + y * PHI) ** 4
    rhs = Product([(x + y * PHI, 4)])
    # WHEN
    report = identity_check(lhs, rhs, mode, 'binomial', points=3, seed=1)
    # THEN
    assert report.passed
    assert report.checks[0].label == 'binomial'


@pytest.mark.parametrize('mode', [Mode.EXACT, Mode.MODULAR])
def test_false_identity_fails(xy, mode: Mode):
    # GIVEN
    x, y = xy
    # WHEN
    report = identity_check((x + y) ** 2, x**2 + y**2, mode, 'cross term', points=3, seed=1)
    # THEN
    assert report.status == Status.FAIL
    assert not report.passed


def test_exact_failure_names_the_differing_term(xy):
    # GIVEN
    x, y = xy
    # WHEN
    report = identity_check((x + y) ** 2, x**2 + y**2, Mode.EXACT, 'cross term')
    # THEN
    assert report.checks[0].detail == 'first differing term 2*x*y'


def test_modular_verdict_depends_only_on_the_seed(xy):
    # GIVEN
    x, y = xy
    lhs = (x - y) ** 3
    rhs = x**3 - x**2 * y * 3 + x * y**2 * 3 - y**3
    # WHEN
    single = identity_check(lhs, rhs, points=5, seed=9, threads=1)
    pooled = identity_check(lhs, rhs, points=5, seed=9, threads=4)
    # THEN
    assert single.passed and pooled.passed
    assert single.checks[0].detail == pooled.checks[0].detail


def test_modular_check_with_denominators(xy):
    # GIVEN
    x, y = xy
    lhs = LocPoly(x**2 - y**2, [x - y], [1])
    # WHEN
    report = identity_check(lhs, x + y, Mode.MODULAR, 'quotient', points=3)
    # THEN
    assert report.passed


def test_composed_expressions(xy):
    # GIVEN
    x, y = xy
    outer = x**2 + y
    # WHEN
    report = identity_check(compose(outer, [x * y, y]), x**2 * y**2 + y, points=3)
    # THEN
    assert report.passed


def test_derive_ratio(xy):
    # GIVEN
    x, y = xy
    # WHEN
    result = derive_ratio((x + y) * Fraction(3, 7), x + y)
    # THEN
    assert result == Fraction(3, 7)


def test_proportionality_records_the_constant(xy):
    # GIVEN
    x, y = xy
    constant = Golden(2, 1)
    # WHEN
    report = proportionality_check(
        (x**2 - y) * constant, x**2 - y, Mode.EXACT, 'proportional', 'c', points=2
    )
    # THEN
    assert report.passed
    assert report.derived_constants['c'] == constant


def test_proportionality_fails_for_unrelated_sides(xy):
    # GIVEN
    x, y = xy
    # WHEN
    report = proportionality_check(
        x**2, x * y, Mode.MODULAR, 'unrelated', 'c', points=3
    )
    # THEN
    assert not report.passed


def test_zero_sides_agree(xy_ring):
    # WHEN
    report = identity_check(Poly.zero(xy_ring), Poly.zero(xy_ring), Mode.EXACT, 'zero')
    # THEN
    assert report.passed
