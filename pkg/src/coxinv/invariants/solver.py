"""Rewrites an invariant polynomial in the basic invariants by exact interpolation.

The invariant rings of W(H3) and W(H4) are polynomial rings, so an invariant of degree `d` is a
unique linear combination of the basis monomials `prod(B_i ** e_i)` with `sum(e_i * deg B_i) = d`.
The coefficients are found by evaluating both sides at small integer points and solving the
resulting square (or over-determined) system exactly.
"""

from collections.abc import Sequence
from dataclasses import dataclass
import logging
import time

from coxinv.algebra.expr import Expression, as_expression
from coxinv.algebra.golden import Golden
from coxinv.algebra.identity import small_point
from coxinv.algebra.linalg import solve
from coxinv.algebra.poly import Exponent, Poly, term_order_key
from coxinv.algebra.rings import VarRing
from coxinv.constants import (
    DEFAULT_HOLDOUT_POINTS,
    DEFAULT_SEED,
    DEFAULT_SOLVER_POINT_CAP,
    LOGGER_NAME,
)
from coxinv.exceptions import BadPointError, InconsistentSystemError, RankDeficientError
from coxinv.invariants.basic import InvariantSet

logger = logging.getLogger(LOGGER_NAME)

_SOLVER_STREAM = 0x501
_HOLDOUT_STREAM = 0x502
_EXTRA_POINTS = 3


@dataclass(frozen=True)
class BasisExpr:
    """A polynomial in the symbols of the basic invariants."""

    ring: VarRing
    expr: Poly

    def in_u(self, basis: InvariantSet) -> Poly:
        """Substitutes the basic invariants back for their symbols."""
        return self.expr.substitute(list(basis.polys))

    def __str__(self) -> str:
        return str(self.expr)


def basis_monomials(degrees: Sequence[int], degree: int) -> list[Exponent]:
    """Every exponent vector `e` with `sum(e[i] * degrees[i]) == degree`, in canonical order."""
    found: list[Exponent] = []

    def extend(position: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if position == len(degrees) - 1:
            if remaining % degrees[position] == 0:
                found.append(prefix + (remaining // degrees[position],))
            return
        for e in range(remaining // degrees[position] + 1):
            extend(position + 1, remaining - e * degrees[position], prefix + (e,))

    if degree >= 0:
        extend(0, degree, ())
    return sorted(found, key=term_order_key, reverse=True)


def _homogeneous_degree(target: Poly) -> int:
    degrees = {sum(exponent) for exponent in target.terms}
    if len(degrees) > 1:
        raise InconsistentSystemError(
            'The target is not homogeneous', extra={'degrees': sorted(degrees)}
        )
    return degrees.pop() if degrees else 0


def _row(
    monomials: Sequence[Exponent], basis: InvariantSet, point: Sequence[int]
) -> list[Golden]:
    values = [poly.evaluate(point) for poly in basis.polys]
    row = []
    for exponent in monomials:
        entry = Golden(1)
        for value, e in zip(values, exponent):
            if e:
                entry = entry * value**e
        row.append(entry)
    return row


def express_in_invariants(
    target: Expression | Poly,
    basis: InvariantSet,
    *,
    degree: int | None = None,
    seed: int = DEFAULT_SEED,
    point_cap: int = DEFAULT_SOLVER_POINT_CAP,
    holdout: int = DEFAULT_HOLDOUT_POINTS,
    exact_check: bool = False,
) -> BasisExpr:
    """Writes `target`, an invariant of the basis's group, as a polynomial in the basis.

    Args:
        target: a homogeneous polynomial in the u-ring, or an expression that evaluates to one.
        basis: the basic invariants to express the target in.
        degree: the u-degree of the target; required when the target is an expression.
        seed: selects the evaluation points.
        point_cap: the largest number of points drawn before giving up.
        holdout: extra points at which the solution is validated.
        exact_check: also expand the solution in u and compare it with the expanded target.

    Returns:
        The unique polynomial in the basis symbols that reproduces the target.

    Raises:
        InconsistentSystemError: the target is not a polynomial in the basis.
        RankDeficientError: the points drawn up to the cap did not determine the coefficients.
    """
    started = time.perf_counter()
    if degree is None:
        if not isinstance(target, Poly):
            raise ValueError('The degree of an expression target must be given')
        degree = _homogeneous_degree(target)
    expression = as_expression(target)
    arity = basis.ring.arity
    monomials = basis_monomials(basis.degrees, degree)
    if not monomials:
        raise InconsistentSystemError(
            f'No basis monomial has degree {degree}', extra={'degree': degree}
        )
    wanted = len(monomials) + _EXTRA_POINTS
    rows: list[list[Golden]] = []
    rhs: list[Golden] = []
    attempt = 0
    while True:
        while len(rows) < wanted and attempt < point_cap:
            point = small_point(seed, _SOLVER_STREAM, attempt, arity)
            attempt += 1
            try:
                value = expression.value(point)
            except BadPointError:
                continue
            rows.append(_row(monomials, basis, point))
            rhs.append(value)
        try:
            coefficients = solve(rows, rhs)
            break
        except RankDeficientError as e:
            if attempt >= point_cap:
                raise RankDeficientError(
                    f'Still rank deficient after {attempt} points',
                    extra={**e.get_extra_details(), 'points': attempt, 'cap': point_cap},
                ) from e
            wanted = min(2 * wanted, point_cap)
            logger.debug('Drawing more solver points', extra={'points': wanted})

    expr = Poly(basis.symbol_ring, dict(zip(monomials, coefficients)))
    for index in range(holdout):
        point = small_point(seed, _HOLDOUT_STREAM, index, arity)
        try:
            expected = expression.value(point)
        except BadPointError:
            continue
        if expr.evaluate([poly.evaluate(point) for poly in basis.polys]) != expected:
            raise InconsistentSystemError(
                'The solution does not reproduce the target at a held-out point',
                extra={'point': point},
            )
    if exact_check:
        expanded = expression.expand()
        if BasisExpr(basis.symbol_ring, expr).in_u(basis) != expanded:
            raise InconsistentSystemError('The expanded solution differs from the target')
    logger.info(
        'Expressed target in basic invariants',
        extra={
            'basis': list(basis.names),
            'degree': degree,
            'unknowns': len(monomials),
            'points': len(rows),
            'ms': int((time.perf_counter() - started) * 1000),
        },
    )
    return BasisExpr(basis.symbol_ring, expr)
