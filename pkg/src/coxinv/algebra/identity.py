"""Polynomial identity checks, exact or by evaluation at random points of three prime fields.

Modular checks evaluate both sides at `points` uniformly random points per prime. Each point is
drawn from its own seeded stream, so the verdict depends only on `(seed, points)`, never on how
the points were scheduled across worker threads.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import logging
import time

from coxinv.algebra.expr import Expression, Product, as_expression
from coxinv.algebra.format import format_golden, format_monomial
from coxinv.algebra.golden import Golden
from coxinv.algebra.locpoly import LocPoly
from coxinv.algebra.modular import ModCtx, modular_contexts, point_stream
from coxinv.algebra.poly import Poly
from coxinv.constants import (
    DEFAULT_POINTS_PER_PRIME,
    DEFAULT_SEED,
    LOGGER_NAME,
    MAX_RESAMPLES,
    SOLVER_COORDINATE_RANGE,
)
from coxinv.exceptions import BadPointError, RingMismatchError
from coxinv.models import Mode, VerifyReport

Side = Expression | Poly | LocPoly

logger = logging.getLogger(LOGGER_NAME)

_RATIO_STREAM = 0x5EED
_RATIO_ATTEMPTS = 64


@dataclass(frozen=True)
class PointOutcome:
    prime_index: int
    point_index: int
    agreed: bool
    point: tuple[int, ...] | None
    """`None` when every resample hit a vanishing denominator."""


def _evaluate_point(
    lhs: Expression, rhs: Expression, ctx: ModCtx, prime_index: int, point_index: int, seed: int
) -> PointOutcome:
    arity = lhs.ring.arity
    for attempt in range(MAX_RESAMPLES):
        stream = point_stream(seed, prime_index, point_index, attempt)
        point = [stream.residue(ctx.p) for _ in range(arity)]
        try:
            left = lhs.value_mod(point, ctx)
            right = rhs.value_mod(point, ctx)
        except BadPointError:
            logger.debug(
                'Resampling after a vanishing denominator',
                extra={'p': ctx.p, 'point_index': point_index, 'attempt': attempt},
            )
            continue
        return PointOutcome(prime_index, point_index, left == right, tuple(point))
    return PointOutcome(prime_index, point_index, False, None)


def difference_detail(lhs: Poly | LocPoly, rhs: Poly | LocPoly) -> str:
    """Describes the leading term of `lhs - rhs` (after clearing denominators)."""
    difference = lhs - rhs
    numerator = difference.numerator if isinstance(difference, LocPoly) else difference
    if numerator.is_zero():
        return 'sides agree'
    exponent, coefficient = numerator.leading_term()
    monomial = format_monomial(numerator.ring, exponent) or '1'
    return f'first differing term {format_golden(coefficient)}*{monomial}'


def check_exact(lhs: Side, rhs: Side, label: str) -> VerifyReport:
    report = VerifyReport(suite=label, mode=Mode.EXACT)
    started = time.perf_counter()
    left = as_expression(lhs).expand()
    right = as_expression(rhs).expand()
    if isinstance(left, Poly) and isinstance(right, Poly):
        agreed = left == right
    else:
        agreed = LocPoly.of(left) == right
    report.add_check(label, agreed, 'exact expansion' if agreed else difference_detail(left, right))
    report.wall_time_ms = int((time.perf_counter() - started) * 1000)
    return report


def check_modular(
    lhs: Side,
    rhs: Side,
    label: str,
    *,
    points: int = DEFAULT_POINTS_PER_PRIME,
    seed: int = DEFAULT_SEED,
    threads: int = 1,
) -> VerifyReport:
    left = as_expression(lhs)
    right = as_expression(rhs)
    if not left.ring.compatible(right.ring):
        raise RingMismatchError(
            f'Cannot compare [{left.ring}] with [{right.ring}]',
            extra={'label': label},
        )
    report = VerifyReport(suite=label, mode=Mode.MODULAR, seed=seed, points=points)
    started = time.perf_counter()
    contexts = modular_contexts(seed)
    jobs = [(i, ctx, j) for i, ctx in enumerate(contexts) for j in range(points)]

    def run(job: tuple[int, ModCtx, int]) -> PointOutcome:
        prime_index, ctx, point_index = job
        return _evaluate_point(left, right, ctx, prime_index, point_index, seed)

    with ThreadPoolExecutor(max_workers=max(threads, 1)) as executor:
        outcomes = list(executor.map(run, jobs))
    outcomes.sort(key=lambda outcome: (outcome.prime_index, outcome.point_index))
    failure = next((o for o in outcomes if not o.agreed), None)
    bound = max(left.degree_bound(), right.degree_bound())
    if failure is None:
        detail = f'{len(outcomes)} points over {len(contexts)} primes, degree bound {bound}'
    elif failure.point is None:
        detail = (
            f'no usable point after {MAX_RESAMPLES} resamples '
            f'(prime #{failure.prime_index}, point #{failure.point_index})'
        )
    else:
        detail = (
            f'sides differ at point #{failure.point_index} modulo '
            f'{contexts[failure.prime_index].p}: {list(failure.point)}'
        )
    report.add_check(label, failure is None, detail)
    report.wall_time_ms = int((time.perf_counter() - started) * 1000)
    return report


def identity_check(
    lhs: Side,
    rhs: Side,
    mode: Mode = Mode.MODULAR,
    label: str = 'identity',
    *,
    points: int = DEFAULT_POINTS_PER_PRIME,
    seed: int = DEFAULT_SEED,
    threads: int = 1,
) -> VerifyReport:
    """Checks `lhs == rhs` and reports the outcome; a mismatch is recorded, never raised."""
    logger.info('Checking identity', extra={'label': label, 'mode': mode.value})
    if mode == Mode.EXACT:
        report = check_exact(lhs, rhs, label)
    else:
        report = check_modular(lhs, rhs, label, points=points, seed=seed, threads=threads)
    logger.info(
        'Identity checked',
        extra={'label': label, 'status': report.status.value, 'ms': report.wall_time_ms},
    )
    return report


def small_point(seed: int, stream_index: int, attempt: int, arity: int) -> list[int]:
    low, high = SOLVER_COORDINATE_RANGE
    stream = point_stream(seed, stream_index, attempt)
    return [stream.small_int(low, high) for _ in range(arity)]


def derive_ratio(lhs: Side, rhs: Side, seed: int = DEFAULT_SEED) -> Golden | None:
    """`lhs / rhs` at the first small integer point where `rhs` does not vanish."""
    left = as_expression(lhs)
    right = as_expression(rhs)
    for attempt in range(_RATIO_ATTEMPTS):
        point = small_point(seed, _RATIO_STREAM, attempt, left.ring.arity)
        try:
            denominator = right.value(point)
            if not denominator:
                continue
            return left.value(point) / denominator
        except BadPointError:
            continue
    return None


def proportionality_check(
    lhs: Side,
    rhs: Side,
    mode: Mode,
    label: str,
    constant_name: str,
    *,
    scale: Side | None = None,
    points: int = DEFAULT_POINTS_PER_PRIME,
    seed: int = DEFAULT_SEED,
    threads: int = 1,
) -> VerifyReport:
    """Checks `lhs = c * scale * rhs` for a constant `c` derived exactly at one point.

    `scale` carries a known factor in symbolic parameters (a power of `m`, say), so that the
    remaining factor is a genuine constant.
    """
    right = as_expression(rhs)
    if scale is not None:
        right = Product([(right, 1), (as_expression(scale), 1)])
    ratio = derive_ratio(lhs, right, seed)
    if ratio is None or not ratio:
        report = VerifyReport(suite=label, mode=mode, seed=seed, points=points)
        report.add_check(label, False, 'no point gives a non-zero ratio')
        return report
    report = identity_check(
        lhs, Product([(right, 1)], ratio), mode, label, points=points, seed=seed, threads=threads
    )
    report.derive(constant_name, ratio)
    return report

