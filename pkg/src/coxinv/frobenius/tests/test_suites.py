import pytest

from coxinv.algebra.modular import PRIMES
from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing
from coxinv.frobenius import suites
from coxinv.frobenius.suites import (
    fvw_suite,
    h4_9_psi_suite,
    h4_disc_suite,
    y_in_t_suite,
)
from coxinv.frobenius.transforms import Y_W0_BOUNDS
from coxinv.models import SuiteSpec


@pytest.fixture
def perturbed_golden(monkeypatch: pytest.MonkeyPatch):
    """Adds `variable^power` to one printed polynomial read by the suites."""

    def perturb(golden_name: str, variable: str, power: int) -> None:
        original = suites._golden_in

        def reading(name: str, ring: VarRing):
            value = original(name, ring)
            if name == golden_name:
                return value + Poly.variable(ring, variable) ** power
            return value

        monkeypatch.setattr(suites, '_golden_in', reading)

    return perturb


def test_fvw_suite(modular_spec: SuiteSpec):
    # WHEN
    report = fvw_suite(modular_spec)
    # THEN
    assert report.passed, report.failures()
    assert any('conjugate of y3' in check.label for check in report.checks)


def test_h4_disc_suite(modular_spec: SuiteSpec):
    # WHEN
    report = h4_disc_suite(modular_spec)
    # THEN
    assert report.passed, report.failures()


def test_h4_9_psi_suite(modular_spec: SuiteSpec):
    # WHEN
    report = h4_9_psi_suite(modular_spec)
    # THEN
    assert report.passed, report.failures()
    labels = [check.label for check in report.checks]
    assert '72 * 10^6 * w0^10 * Psi_H4(9) is a polynomial' in labels


def test_y_in_t_suite(modular_spec: SuiteSpec):
    # WHEN
    report = y_in_t_suite(modular_spec)
    # THEN
    assert report.passed, report.failures()
    assert len(report.checks) == 2 * len(Y_W0_BOUNDS)


def test_a_perturbed_h4_discriminant_is_reported(modular_spec: SuiteSpec, perturbed_golden):
    # GIVEN
    perturbed_golden('disc_h4', 'x4', 4)
    # WHEN
    report = h4_disc_suite(modular_spec)
    # THEN
    assert not report.passed
    [failure] = report.failures()
    assert failure.detail == 'first differing term -1*x4^4'


def test_a_perturbed_psi_tilde_fails_modulo_a_prime(modular_spec: SuiteSpec, perturbed_golden):
    # GIVEN
    perturbed_golden('psi_tilde_h4_9', 't1', 10)
    # WHEN
    report = h4_9_psi_suite(modular_spec)
    # THEN
    assert not report.passed
    [failure] = [check for check in report.failures() if check.label == 'Psi~_H4(9)']
    assert failure.detail.startswith(f'sides differ at point #0 modulo {PRIMES[0]}')
