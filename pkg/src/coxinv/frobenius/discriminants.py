"""Discriminants of prepotentials from their matrices of second derivatives.

`C[i][j] = D_i D_{n-1-j} F` pairs each flat coordinate with its partner on the anti-diagonal of
the flat metric. The Euler-weighted matrix `T[i][j] = sum_k d_k y_k dC[i][j]/dy_k` runs over the
working coordinates `y_k` with their weights `d_k`; the discriminant is `det T`.
"""

import logging
import time

from coxinv.algebra.expr import Determinant, Product
from coxinv.algebra.linalg import determinant
from coxinv.algebra.locpoly import Element, LocPoly
from coxinv.algebra.poly import Poly
from coxinv.constants import LOGGER_NAME
from coxinv.frobenius.prepotentials import (
    Prepotential,
    PrepotentialName,
    prepotential,
    total_derivative,
)
from coxinv.models import VerifyReport

logger = logging.getLogger(LOGGER_NAME)

PSI_TILDE_FACTOR = 72 * 10**6
PSI_TILDE_W0_POWER = 10
H4_DISC_FACTOR = 2234061763179785156250000
"""The printed H4 discriminant is this multiple of `det T`, which is monic in `x4^4`."""

Matrix = list[list[Element]]


def second_derivatives(p: Prepotential) -> Matrix:
    """The anti-diagonal matrix of second total derivatives of the prepotential."""
    n = p.n
    first = {name: total_derivative(p, p.expr, name) for name in p.flat_names}
    return [
        [total_derivative(p, first[p.flat_names[n - 1 - j]], p.flat_names[i]) for j in range(n)]
        for i in range(n)
    ]


def euler_weighted(p: Prepotential, c: Matrix) -> Matrix:
    weights = p.ring.weights
    assert weights is not None
    variables = Poly.variables(p.ring)
    rows = []
    for row in c:
        weighted_row = []
        for entry in row:
            total: Element = p.lift(Poly.zero(p.ring))
            for weight, name, variable in zip(weights, p.ring.names, variables):
                total = total + (entry.diff(name) * variable).scale(weight)
            weighted_row.append(total)
        rows.append(weighted_row)
    return rows


def discriminant_matrix(p: Prepotential) -> Matrix:
    return euler_weighted(p, second_derivatives(p))


def _reduced(value: Element) -> Element:
    if isinstance(value, LocPoly):
        normalized = value.normalize()
        polynomial = normalized.as_poly()
        return polynomial if polynomial is not None else normalized
    return value


def discriminant(p: Prepotential) -> Element:
    """`det T`, expanded; a `LocPoly` when a declared denominator survives."""
    started = time.perf_counter()
    value = _reduced(determinant(discriminant_matrix(p)))
    logger.info(
        'Computed discriminant',
        extra={
            'prepotential': p.name.value,
            'terms': len(value) if isinstance(value, Poly) else len(value.numerator),
            'ms': int((time.perf_counter() - started) * 1000),
        },
    )
    return value


def discriminant_expression(p: Prepotential) -> Determinant:
    """`det T` kept unexpanded, for evaluation at points."""
    return Determinant(discriminant_matrix(p))


def w0_power(p: Prepotential, exponent: int) -> Poly:
    return Poly.variable(p.ring, 'w0') ** exponent


def psi_tilde() -> Poly | None:
    """`72 * 10^6 * w0^10 * det T` for H4(9); `None` when a denominator survives the clearing."""
    p = prepotential(PrepotentialName.H4_9)
    psi = LocPoly.of(discriminant(p))
    cleared = (psi * w0_power(p, PSI_TILDE_W0_POWER)).scale(PSI_TILDE_FACTOR)
    return cleared.as_poly()


def psi_tilde_expression() -> Product:
    p = prepotential(PrepotentialName.H4_9)
    return Product(
        [(discriminant_expression(p), 1), (w0_power(p, PSI_TILDE_W0_POWER), 1)],
        PSI_TILDE_FACTOR,
    )


def check_symmetry(p: Prepotential) -> VerifyReport:
    """`D_i D_j F = D_j D_i F` for every pair of flat coordinates."""
    report = VerifyReport(suite=f'symmetry {p.name.value}')
    first = {name: total_derivative(p, p.expr, name) for name in p.flat_names}
    for i, a in enumerate(p.flat_names):
        for b in p.flat_names[i + 1 :]:
            left = total_derivative(p, first[b], a)
            right = total_derivative(p, first[a], b)
            report.add_check(f'{p.name.value}: D_{a} D_{b} F = D_{b} D_{a} F', left == right)
    return report


def check_unit_field(p: Prepotential) -> VerifyReport:
    """The derivative of `C` along the last flat coordinate is the identity matrix."""
    report = VerifyReport(suite=f'unit field {p.name.value}')
    last = p.flat_names[-1]
    c = second_derivatives(p)
    identity = all(
        c[i][j].diff(last) == (1 if i == j else 0) for i in range(p.n) for j in range(p.n)
    )
    report.add_check(f'{p.name.value}: d C / d {last} is the identity', identity)
    return report

