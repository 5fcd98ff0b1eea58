from fractions import Fraction

import pytest

from coxinv.algebra.poly import Poly, weighted_degree
from coxinv.coxeter.generators import GroupType, Variant, generators
from coxinv.exceptions import InconsistentSystemError
from coxinv.invariants import suites
from coxinv.invariants.basic import (
    I_RING,
    INVARIANT_NAMES,
    U3,
    basic_invariants,
    basic_invariants_h3,
    invariant_by_name,
)
from coxinv.invariants.equivariant import (
    check_intertwining,
    check_invariance,
    equivariant_map,
    random_words,
)
from coxinv.invariants.solver import basis_monomials, express_in_invariants
from coxinv.invariants.suites import (
    h3_intertwine_suite,
    h3_invariants_suite,
    h3_jacobian_suite,
    h4_jacobian_suite,
    h4_theorem32_suite,
    y_identity_check,
)
from coxinv.models import Mode, SuiteSpec


@pytest.mark.parametrize('variant', [Variant.PLAIN, Variant.STAR])
def test_h3_basic_invariants_are_invariant(variant: Variant):
    # GIVEN
    g = generators(GroupType.H3, variant)
    # WHEN
    invariants = basic_invariants_h3(variant)
    # THEN
    assert [f.degree() for f in invariants.polys] == [2, 6, 10]
    for name, f in invariants.items():
        assert check_invariance(f, g, Mode.EXACT, name).passed


def test_plain_invariants_are_not_star_invariant():
    # GIVEN
    i2 = basic_invariants_h3(Variant.PLAIN)['I2']
    # WHEN
    report = check_invariance(i2, generators(GroupType.H3, Variant.STAR))
    # THEN
    assert not report.passed


def test_star_invariants_are_conjugates():
    # WHEN
    plain = basic_invariants_h3(Variant.PLAIN)
    star = basic_invariants_h3(Variant.STAR)
    # THEN
    assert star.names == ('J1', 'J2', 'J3')
    for f, g in zip(plain.polys, star.polys):
        assert g == f.conj()


def test_invariant_lookup():
    # THEN
    assert 'Zs30' in INVARIANT_NAMES
    assert invariant_by_name('I1') == basic_invariants_h3()['I1']
    assert invariant_by_name('k6') == invariant_by_name('h6').conj()
    with pytest.raises(KeyError):
        invariant_by_name('I4')


@pytest.mark.slow
def test_h4_invariant_degrees():
    # WHEN
    invariants = basic_invariants(GroupType.H4)
    # THEN
    assert invariants.names == ('Z2', 'Z12', 'Z20', 'Z30')
    assert [f.degree() for f in invariants.polys] == [2, 12, 20, 30]


def test_basis_monomials():
    # WHEN
    result = basis_monomials((2, 6, 10), 12)
    # THEN
    assert result == [(6, 0, 0), (3, 1, 0), (1, 0, 1), (0, 2, 0)]
    assert basis_monomials((2, 6, 10), 3) == []


def test_solver_recovers_a_known_combination():
    # GIVEN
    invariants = basic_invariants_h3()
    i1, i2, i3 = invariants.polys
    target = i1**5 * 3 - i1**2 * i2 + i3 * 7
    # WHEN
    result = express_in_invariants(target, invariants, seed=3, exact_check=True)
    # THEN
    x1, x2, x3 = Poly.variables(I_RING)
    assert result.expr == x1**5 * 3 - x1**2 * x2 + x3 * 7
    assert result.in_u(invariants) == target
    assert weighted_degree(result.expr) == 10


def test_solver_rejects_a_non_invariant():
    # GIVEN
    u1, _, _ = Poly.variables(U3)
    # WHEN/THEN
    with pytest.raises(InconsistentSystemError):
        express_in_invariants(u1**2, basic_invariants_h3())


def test_solver_rejects_an_odd_degree():
    # GIVEN
    u1, u2, u3 = Poly.variables(U3)
    # WHEN/THEN
    with pytest.raises(InconsistentSystemError):
        express_in_invariants(u1 * u2 * u3, basic_invariants_h3())


def test_solver_rejects_an_inhomogeneous_target():
    # GIVEN
    i1, i2, _ = basic_invariants_h3().polys
    # WHEN/THEN
    with pytest.raises(InconsistentSystemError):
        express_in_invariants(i1 + i2, basic_invariants_h3())


def test_cubic_map_intertwines_the_representations():
    # WHEN
    report = check_intertwining(
        equivariant_map(GroupType.H3),
        generators(GroupType.H3, Variant.PLAIN),
        generators(GroupType.H3, Variant.STAR),
        words=5,
        seed=2,
    )
    # THEN
    assert report.passed, report.failures()


def test_random_words_are_seeded():
    # WHEN
    first = random_words(4, 3, seed=5)
    second = random_words(4, 3, seed=5)
    # THEN
    assert first == second
    assert all(1 <= len(word) <= 12 for word in first)
    assert all(0 <= index < 3 for word in first for index in word)


@pytest.mark.parametrize('suite', [h3_invariants_suite, h3_intertwine_suite, h3_jacobian_suite])
def test_h3_suites_pass(suite, modular_spec: SuiteSpec):
    # WHEN
    report = suite(modular_spec)
    # THEN
    assert report.passed, report.failures()


def test_h3_intertwine_suite_derives_c0(modular_spec: SuiteSpec):
    # WHEN
    report = h3_intertwine_suite(modular_spec)
    # THEN
    assert report.derived_constants['c0'] == Fraction(1, 4)


@pytest.mark.slow
def test_h4_theorem32_suite(modular_spec: SuiteSpec):
    # WHEN
    report = h4_theorem32_suite(modular_spec, threads=4)
    # THEN
    assert report.passed, report.failures()
    labels = [check.label for check in report.checks]
    assert 'Z*12(P) equals the printed Y12(Z)' in labels
    assert 'Y30 written in Z matches the printed polynomial' not in labels


@pytest.mark.slow
def test_h4_jacobian_suite(modular_spec: SuiteSpec):
    # WHEN
    report = h4_jacobian_suite(modular_spec, threads=4)
    # THEN
    assert report.passed, report.failures()
    assert report.derived_constants['c_prime'] == Fraction(1, 9216)
    assert report.derived_constants['jacobian_P'] == Fraction(-1, 9216)


@pytest.mark.slow
def test_a_perturbed_y30_fails_the_theorem_suite(
    modular_spec: SuiteSpec, monkeypatch: pytest.MonkeyPatch
):
    # GIVEN
    references = suites._y_references()
    z2 = Poly.variable(references['Y30'].ring, 'Z2')
    references['Y30'] = references['Y30'] + z2**15
    monkeypatch.setattr(suites, '_y_references', lambda: references)
    # WHEN
    report = h4_theorem32_suite(modular_spec, threads=4)
    # THEN
    assert not report.passed
    [failure] = report.failures()
    assert failure.label == 'Z*30(P) equals the printed Y30(Z)'
    assert failure.detail.startswith('sides differ at point #0 modulo ')


@pytest.mark.slow
def test_y12_identity_is_expanded_in_exact_mode(exact_spec: SuiteSpec):
    # WHEN
    report = y_identity_check(exact_spec, 1)
    # THEN
    assert report.passed, report.failures()
    [check] = report.checks
    assert check.label == 'Z*12(P) equals the printed Y12(Z)'
    assert check.detail == 'exact expansion'
