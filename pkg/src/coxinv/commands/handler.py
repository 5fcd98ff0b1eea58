from importlib.metadata import PackageNotFoundError, version
import logging
from pathlib import Path
import time

from pythonjsonlogger.json import JsonFormatter

from coxinv.algebra.format import format_locpoly, format_poly, locpoly_to_json, poly_to_json
from coxinv.algebra.linalg import determinant
from coxinv.algebra.locpoly import Element, LocPoly
from coxinv.algebra.modular import XorShift64, derive_seed
from coxinv.algebra.parse import load_golden_file, single_expression
from coxinv.algebra.poly import Poly
from coxinv.algebra.suites import random_poly
from coxinv.config import CONFIGURATION, ApplicationConfiguration
from coxinv.constants import LOGGER_NAME
from coxinv.coxeter.generators import GroupType, Variant, generators
from coxinv.coxeter.groups import enumerate_group, find_reflections
from coxinv.exceptions import (
    CLIException,
    CoxinvException,
    InconsistentSystemError,
    RankDeficientError,
)
from coxinv.files import resolve_log_file
from coxinv.frobenius.discriminants import (
    H4_DISC_FACTOR,
    discriminant,
    discriminant_matrix,
    psi_tilde,
)
from coxinv.frobenius.prepotentials import PrepotentialName, prepotential
from coxinv.frobenius.transforms import Y_W0_BOUNDS, cleared_y_in_t
from coxinv.invariants.basic import H4_DEGREES, U4, basic_invariants, invariant_by_name
from coxinv.invariants.solver import BasisExpr, express_in_invariants
from coxinv.invariants.suites import y_identity_check
from coxinv.models import BenchRecord, Emission, Mode, SuiteSpec, VerifyReport
from coxinv.suites import ALL_SUITES, SUITES, run_all, run_suite

BENCH_TERMS = 1500
"""Terms of the seeded degree-105 polynomial squared by the `mul210` workload."""
BENCH_DEGREE = 105
_BENCH_STREAM = 0xBE


def tool_version() -> str:
    try:
        return version('coxinv')
    except PackageNotFoundError:
        return '0+unknown'


def _element_emission(name: str, value: Element, header: str | None = None) -> Emission:
    if isinstance(value, LocPoly):
        return Emission(name, format_locpoly(value), locpoly_to_json(value), header)
    return Emission(name, format_poly(value), poly_to_json(value), header)


class CommandHandler:
    def __init__(
        self,
        seed: int | None = None,
        points: int | None = None,
        exact: bool | None = None,
    ):
        settings = ApplicationConfiguration()  # type: ignore[call-arg] # noqa
        # command line options override the configuration for this invocation only
        if seed is not None:
            settings.seed = seed
        if points is not None:
            settings.points = points
        if exact:
            settings.exact = exact
        CONFIGURATION.set(settings)
        self._setup_logging()

    def _setup_logging(self) -> None:
        self.logger = logging.getLogger(LOGGER_NAME)
        self.logger.setLevel(CONFIGURATION.get().log_level or logging.WARNING)

        log_file = resolve_log_file(CONFIGURATION.get().log_file)
        if log_file is None:
            return

        try:
            fh = logging.FileHandler(log_file)
        except Exception:
            pass
        else:
            fh.setLevel(CONFIGURATION.get().log_level or logging.WARNING)
            fh.setFormatter(
                JsonFormatter(
                    '%(asctime)s %(levelname)s %(message)s %(lineno)s %(module)s %(pathname)s '
                )
            )
            self.logger.addHandler(fh)

    @property
    def settings(self) -> ApplicationConfiguration:
        return CONFIGURATION.get()

    def suite_spec(self, name: str) -> SuiteSpec:
        return SuiteSpec(
            name=name,
            mode=self.settings.mode,
            seed=self.settings.seed,
            points=self.settings.points,
        )

    def provenance(self) -> str:
        settings = self.settings
        return f'# coxinv {tool_version()} seed={settings.seed} mode={settings.mode.value}'

    def verify(self, suite: str) -> list[VerifyReport]:
        """Runs one verification suite, or every suite when `suite` is `all`.

        Args:
            suite: the name of a suite or `all`.

        Returns:
            The reports, in declaration order.

        Raises:
            CLIException: if the suite is unknown or a computation fails unexpectedly.
        """
        threads = self.settings.worker_threads()
        try:
            if suite == ALL_SUITES:
                return run_all(self.suite_spec(suite), threads)
            if suite not in SUITES:
                raise CLIException(f'Unknown suite {suite}', extra={'suite': suite})
            return [run_suite(self.suite_spec(suite), threads)]
        except CLIException:
            raise
        except CoxinvException as e:
            self.logger.exception('Suite aborted', extra={'suite': suite})
            extra = {'suite': suite, 'error_message': str(e), **e.get_extra_details()}
            raise CLIException(f'The suite {suite} aborted: {e}', extra=extra) from e

    def emit_group(self, group_type: GroupType, variant: Variant) -> Emission:
        """Order, element count per trace and the normalized reflection forms of a group."""
        g = generators(group_type, variant)
        table = enumerate_group(g)
        ring = basic_invariants(group_type).ring
        forms = sorted(format_poly(r.form) for r in find_reflections(table, ring))
        traces = table.trace_counts()
        lines = [f'# W({group_type.value.upper()}) {variant.value}', f'order {table.order}']
        lines.extend(f'trace {t}: {count}' for t, count in traces)
        lines.append(f'reflections {len(forms)}')
        lines.extend(forms)
        payload = {
            'group': group_type.value,
            'variant': variant.value,
            'order': table.order,
            'traces': [{'trace': str(t), 'count': count} for t, count in traces],
            'reflection_forms': forms,
        }
        return Emission(g.label(), '\n'.join(lines), payload)

    def emit_invariant(self, name: str) -> Emission:
        try:
            return _element_emission(name, invariant_by_name(name))
        except KeyError as e:
            raise CLIException(f'Unknown invariant {name}', extra={'name': name}) from e

    def emit_discriminant(self, name: PrepotentialName) -> Emission:
        """The discriminant in its printed normalization where one exists.

        H4 is scaled by the integer that clears its coefficients and H4(9) is cleared by
        `72 * 10^6 * w0^10`; H3 and (H3)' are `det T` as computed.
        """
        p = prepotential(name)
        if name == PrepotentialName.H4_9:
            cleared = psi_tilde()
            if cleared is not None:
                return _element_emission(f'disc {name.value}', cleared)
        value = discriminant(p)
        if name == PrepotentialName.H4:
            value = value.scale(H4_DISC_FACTOR)
        return _element_emission(f'disc {name.value}', value)

    def emit_prepotential(self, name: PrepotentialName) -> Emission:
        p = prepotential(name)
        return _element_emission(f'prepotential {name.value}', p.expr, self.provenance())

    def emit_y_in_t(self, weight: int) -> Emission:
        """`w0^k * Y_j` in the H4(9) working coordinates.

        Raises:
            CLIException: if the expected power of `w0` does not clear the denominator.
        """
        cleared = cleared_y_in_t(weight)
        if cleared is None:
            raise CLIException(
                f'w0^{Y_W0_BOUNDS[weight]} does not clear the denominator of Y{weight}',
                extra={'weight': weight},
            )
        return _element_emission(f'w0^{Y_W0_BOUNDS[weight]}*Y{weight}', cleared, self.provenance())

    def solve(self, target_file: Path, group_type: GroupType) -> BasisExpr:
        """Rewrites the polynomial of a golden-format file in the basic invariants of a group.

        Args:
            target_file: a file whose ring line names the u-variables of the group.
            group_type: selects the basic invariants.

        Returns:
            The target as a polynomial in the invariant symbols.

        Raises:
            CLIException: if the file cannot be read, is not a polynomial in the u-ring or is not
            an invariant of the group.
        """
        basis = basic_invariants(group_type)
        try:
            target = single_expression(load_golden_file(target_file))
        except CoxinvException as e:
            raise CLIException(str(e), extra={'file': str(target_file)}) from e
        if not isinstance(target, Poly) or target.ring.names != basis.ring.names:
            raise CLIException(
                f'The target must be a polynomial in {", ".join(basis.ring.names)}',
                extra={'file': str(target_file)},
            )
        try:
            return express_in_invariants(
                target,
                basis,
                seed=self.settings.seed,
                point_cap=self.settings.solver_point_cap,
                holdout=self.settings.holdout_points,
                exact_check=self.settings.exact,
            )
        except (InconsistentSystemError, RankDeficientError) as e:
            raise CLIException(
                str(e), extra={'file': str(target_file), **e.get_extra_details()}
            ) from e

    def bench(self, workload: str) -> BenchRecord:
        started = time.perf_counter()
        if workload == 'mul210':
            record = self._bench_mul210()
        elif workload == 'theorem32':
            record = self._bench_theorem32()
        elif workload == 'ddet':
            record = self._bench_ddet()
        else:
            raise CLIException(f'Unknown workload {workload}', extra={'workload': workload})
        record.wall_time_ms = int((time.perf_counter() - started) * 1000)
        self.logger.info('Benchmark finished', extra=record.as_dict())
        return record

    def _bench_mul210(self) -> BenchRecord:
        stream = XorShift64(derive_seed(self.settings.seed, _BENCH_STREAM, 0))
        f = random_poly(U4, stream, terms=BENCH_TERMS, degree=BENCH_DEGREE)
        started = time.perf_counter()
        square = f * f
        return BenchRecord(
            'mul210',
            0,
            peak_terms={'factor': len(f), 'square': len(square)},
            timings_ms={'multiply': int((time.perf_counter() - started) * 1000)},
        )

    def _bench_theorem32(self) -> BenchRecord:
        spec = SuiteSpec('h4-theorem32', Mode.MODULAR, self.settings.seed, self.settings.points)
        timings = {}
        for index, degree in enumerate(H4_DEGREES):
            report = y_identity_check(spec, index)
            timings[f'Y{degree}'] = report.wall_time_ms
        return BenchRecord('theorem32', 0, timings_ms=timings)

    def _bench_ddet(self) -> BenchRecord:
        p = prepotential(PrepotentialName.H4)
        started = time.perf_counter()
        matrix = discriminant_matrix(p)
        built = time.perf_counter()
        value = determinant(matrix)
        finished = time.perf_counter()
        entries = max(len(entry) for row in matrix for entry in row)
        return BenchRecord(
            'ddet',
            0,
            peak_terms={'matrix_entry': entries, 'determinant': len(value)},
            timings_ms={
                'matrix': int((built - started) * 1000),
                'determinant': int((finished - built) * 1000),
            },
        )
