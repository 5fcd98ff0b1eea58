"""Registry of the verification suites, in the order reports are merged."""

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
import dataclasses
import logging
import time

from coxinv.algebra.suites import kernel_suite
from coxinv.constants import LOGGER_NAME
from coxinv.coxeter.suites import groups_suite
from coxinv.frobenius.suites import (
    fvw_suite,
    h3_disc_suite,
    h3prime_suite,
    h4_9_psi_suite,
    h4_disc_suite,
    transforms_suite,
    y_in_t_suite,
)
from coxinv.invariants.suites import (
    h3_intertwine_suite,
    h3_invariants_suite,
    h3_jacobian_suite,
    h4_invariants_suite,
    h4_jacobian_suite,
    h4_theorem32_suite,
)
from coxinv.models import SuiteSpec, VerifyReport

logger = logging.getLogger(LOGGER_NAME)

SuiteRunner = Callable[[SuiteSpec, int], VerifyReport]

SUITES: dict[str, SuiteRunner] = {
    'kernel': kernel_suite,
    'groups': groups_suite,
    'h3-invariants': h3_invariants_suite,
    'h3-intertwine': h3_intertwine_suite,
    'h3-jacobian': h3_jacobian_suite,
    'h3-disc': h3_disc_suite,
    'h3prime': h3prime_suite,
    'fvw': fvw_suite,
    'h4-invariants': h4_invariants_suite,
    'h4-theorem32': h4_theorem32_suite,
    'h4-jacobian': h4_jacobian_suite,
    'h4-disc': h4_disc_suite,
    'h4_9-psi': h4_9_psi_suite,
    'transforms': transforms_suite,
    'y-in-t': y_in_t_suite,
}
ALL_SUITES = 'all'


def run_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    """Runs one suite and stamps the report with the suite name and its wall time.

    Raises:
        KeyError: if the suite is unknown.
    """
    runner = SUITES[spec.name]
    logger.info(
        'Running suite',
        extra={
            'suite': spec.name,
            'mode': spec.mode.value,
            'seed': spec.seed,
            'points': spec.points,
        },
    )
    started = time.perf_counter()
    report = runner(spec, threads)
    report.suite = spec.name
    report.seed = spec.seed
    report.points = spec.points
    report.wall_time_ms = int((time.perf_counter() - started) * 1000)
    logger.info(
        'Suite finished',
        extra={
            'suite': spec.name,
            'status': report.status.value,
            'checks': len(report.checks),
            'failed': len(report.failures()),
            'ms': report.wall_time_ms,
            'derived_constants': {name: str(c) for name, c in report.derived_constants.items()},
        },
    )
    return report


def run_all(spec: SuiteSpec, threads: int = 1) -> list[VerifyReport]:
    """Runs every suite on a pool of `threads` workers; reports come back in declaration order."""
    specs = [dataclasses.replace(spec, name=name) for name in SUITES]
    with ThreadPoolExecutor(max_workers=max(threads, 1)) as pool:
        return list(pool.map(lambda s: run_suite(s, 1), specs))
