import pytest

from coxinv.models import Mode, SuiteSpec, VerifyReport
from coxinv.suites import SUITES, run_all, run_suite


def test_suite_names():
    # THEN
    assert list(SUITES) == [
        'kernel',
        'groups',
        'h3-invariants',
        'h3-intertwine',
        'h3-jacobian',
        'h3-disc',
        'h3prime',
        'fvw',
        'h4-invariants',
        'h4-theorem32',
        'h4-jacobian',
        'h4-disc',
        'h4_9-psi',
        'transforms',
        'y-in-t',
    ]


def test_run_suite_stamps_the_report():
    # GIVEN
    spec = SuiteSpec(name='kernel', mode=Mode.MODULAR, seed=11, points=2)
    # WHEN
    report = run_suite(spec, threads=2)
    # THEN
    assert report.passed, report.failures()
    assert report.suite == 'kernel'
    assert report.seed == 11
    assert report.points == 2
    assert report.wall_time_ms >= 0


def test_run_suite_with_an_unknown_name():
    # WHEN/THEN
    with pytest.raises(KeyError):
        run_suite(SuiteSpec(name='h5'))


def test_run_all_keeps_declaration_order(monkeypatch: pytest.MonkeyPatch):
    # GIVEN
    def passing(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
        report = VerifyReport.for_spec(spec)
        report.add_check(f'{spec.name} ran', True)
        return report

    monkeypatch.setattr('coxinv.suites.SUITES', {name: passing for name in SUITES})
    # WHEN
    reports = run_all(SuiteSpec(name='all', seed=3), threads=4)
    # THEN
    assert [report.suite for report in reports] == list(SUITES)
    assert all(report.seed == 3 for report in reports)


def test_verdicts_do_not_depend_on_the_thread_count():
    # GIVEN
    spec = SuiteSpec(name='kernel', seed=5, points=3)
    # WHEN
    single = run_suite(spec, threads=1)
    pooled = run_suite(spec, threads=3)
    # THEN
    assert [c.as_dict() for c in single.checks] == [c.as_dict() for c in pooled.checks]
