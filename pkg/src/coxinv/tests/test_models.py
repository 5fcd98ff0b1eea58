from fractions import Fraction

from coxinv.algebra.golden import PHI, Golden
from coxinv.models import BenchRecord, Mode, Status, VerifyReport


def test_a_failed_check_fails_the_report():
    # GIVEN
    report = VerifyReport(suite='sample')
    # WHEN
    report.add_check('first', True)
    report.add_check('second', False, 'sides differ')
    # THEN
    assert report.status == Status.FAIL
    assert [c.label for c in report.failures()] == ['second']


def test_include_merges_checks_and_constants():
    # GIVEN
    outer = VerifyReport(suite='outer')
    inner = VerifyReport(suite='inner')
    inner.add_check('inner check', False)
    inner.derive('c', Golden(Fraction(1, 4)))
    # WHEN
    outer.include(inner)
    # THEN
    assert not outer.passed
    assert outer.derived_constants == {'c': Fraction(1, 4)}


def test_expect_constant():
    # GIVEN
    report = VerifyReport(suite='constants')
    report.derive('c1', Golden(Fraction(1, 2**15)))
    # WHEN
    check = report.expect_constant('c1', Golden(Fraction(1, 32768)))
    # THEN
    assert check.passed
    assert not report.expect_constant('c0', Golden(1)).passed


def test_a_wrong_constant_fails_the_report():
    # GIVEN
    report = VerifyReport(suite='constants')
    report.derive('c_prime', Golden(Fraction(-1, 9216)))
    # WHEN
    check = report.expect_constant('c_prime', Golden(Fraction(1, 9216)))
    # THEN
    assert not check.passed
    assert check.detail == 'derived -1/9216'
    assert report.status == Status.FAIL


def test_report_as_json():
    # GIVEN
    report = VerifyReport(suite='h3-disc', mode=Mode.EXACT, seed=1, points=2)
    report.add_check('Delta_H3', True, 'exact expansion')
    report.derive('ratio', PHI)
    # WHEN
    result = report.as_json()
    # THEN
    assert result == {
        'suite': 'h3-disc',
        'status': 'pass',
        'checks': [{'label': 'Delta_H3', 'status': 'pass', 'detail': 'exact expansion'}],
        'derived_constants': {'ratio': '1/2+1/2*r5'},
        'wall_time_ms': 0,
        'mode': 'exact',
        'seed': 1,
        'points': 2,
    }


def test_bench_record_as_json():
    # WHEN
    result = BenchRecord('ddet', 12, {'determinant': 3}, {'matrix': 4}).as_json()
    # THEN
    assert result == {
        'workload': 'ddet',
        'wall_time_ms': 12,
        'peak_terms': {'determinant': 3},
        'timings_ms': {'matrix': 4},
    }
