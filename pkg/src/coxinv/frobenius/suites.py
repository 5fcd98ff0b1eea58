"""Verification suites for the prepotentials, their discriminants and the coordinate maps."""

from fractions import Fraction
import logging

from coxinv.algebra.golden import Golden
from coxinv.algebra.identity import identity_check, proportionality_check, small_point
from coxinv.algebra.locpoly import Element, LocPoly
from coxinv.algebra.parse import golden_assignments, golden_poly, parse_expression
from coxinv.algebra.poly import Poly, weighted_degree
from coxinv.algebra.rings import VarRing
from coxinv.constants import LOGGER_NAME, TWO_ROUTE_POINTS
from coxinv.exceptions import BadPointError
from coxinv.frobenius.bridge import fvw_bridge_report
from coxinv.frobenius.discriminants import (
    H4_DISC_FACTOR,
    check_symmetry,
    check_unit_field,
    discriminant,
    psi_tilde,
    psi_tilde_expression,
)
from coxinv.frobenius.prepotentials import (
    H3PRIME_RING,
    H4_9_RING,
    X3_RING,
    X4_RING,
    Prepotential,
    PrepotentialName,
    implicit_derivative,
    prepotential,
)
from coxinv.frobenius.transforms import (
    Y_W0_BOUNDS,
    check_composition,
    check_transform,
    coord_map,
    roundtrip_maps,
    weight_map_inverse_check,
    y_in_t,
    y_in_z,
)
from coxinv.invariants.basic import Z_RING
from coxinv.models import Mode, SuiteSpec, VerifyReport

logger = logging.getLogger(LOGGER_NAME)

WEIGHT_MAP_RING = VarRing.of('x1', 'x2', 'x3', 'm')
DISC_H3PRIME_RATIO = Golden(Fraction(1, 3000))
"""`det T` of (H3)' divided by the printed discriminant."""
_TWO_ROUTE_STREAM = 0x7E
_TWO_ROUTE_ATTEMPTS = 8


def _golden_in(name: str, ring: VarRing) -> Element:
    return golden_poly(name).to_ring(ring)


def _check_weighted_degree(report: VerifyReport, label: str, f: Poly, expected: Fraction) -> None:
    degree = weighted_degree(f)
    report.add_check(
        f'{label} is weighted homogeneous of degree {expected}', degree == expected, str(degree)
    )


def _check_coefficient(
    report: VerifyReport, label: str, f: Poly, exponent: tuple[int, ...], expected: Fraction
) -> None:
    coefficient = f.coefficient(exponent)
    report.add_check(
        f'{label} = {expected}', coefficient == Golden(expected), f'found {coefficient}'
    )


def _check_implicit(
    report: VerifyReport, p: Prepotential, expected: dict[str, tuple[str, str]]
) -> None:
    """Compares `d alg / d t` with closed forms `numerator / denominator` in the working ring."""
    for flat, (numerator, denominator) in expected.items():
        value = LocPoly(
            parse_expression(numerator, p.ring),  # type: ignore[arg-type]
            [parse_expression(denominator, p.ring)],  # type: ignore[list-item]
            [1],
        )
        report.add_check(
            f'd{p.alg_var}/d{flat} = ({numerator})/({denominator})',
            implicit_derivative(p, flat) == value,
        )


def _check_constraint(report: VerifyReport, p: Prepotential) -> None:
    assert p.constraint is not None and p.elimination is not None
    residue = LocPoly.of(p.elimination.reduce(p.constraint, p.ring))
    report.add_check(
        f'the constraint vanishes after eliminating {p.elimination.name}', residue.is_zero()
    )


def h3_disc_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    report.mode = Mode.EXACT
    p = prepotential(PrepotentialName.H3)
    _check_coefficient(report, 'F_H3 coefficient of x1^11', p.expr, (11, 0, 0), Fraction(1, 3960))

    delta = discriminant(p)
    report.include(identity_check(delta, _golden_in('disc_h3', X3_RING), Mode.EXACT, 'Delta_H3'))
    if isinstance(delta, Poly):
        _check_weighted_degree(report, 'Delta_H3', delta, Fraction(3))
    report.include(check_unit_field(p))
    report.include(check_symmetry(p))
    return report


def h4_disc_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    report.mode = Mode.EXACT
    p = prepotential(PrepotentialName.H4)
    _check_coefficient(
        report, 'F_H4 coefficient of x1^31', p.expr, (31, 0, 0, 0), Fraction(32, 22395255890625)
    )

    delta = discriminant(p)
    report.include(
        identity_check(
            delta.scale(H4_DISC_FACTOR),
            _golden_in('disc_h4', X4_RING),
            Mode.EXACT,
            f'{H4_DISC_FACTOR} * det T_H4 = Delta_H4',
        )
    )
    report.add_check('det T_H4 is monic in x4^4', delta.evaluate([0, 0, 0, 1]) == 1)
    if isinstance(delta, Poly):
        _check_weighted_degree(report, 'det T_H4', delta, Fraction(4))
    report.include(check_unit_field(p))
    return report


def h3prime_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    report.mode = Mode.EXACT
    p = prepotential(PrepotentialName.H3PRIME)
    full = golden_assignments('prepotential_h3prime')['F']
    _check_coefficient(
        report, "F_(H3)' coefficient of z^13", full, (0, 0, 0, 13), Fraction(-64, 585)
    )
    _check_constraint(report, p)
    _check_implicit(
        report,
        p,
        {'t1': ('-z', 't1+4*z^3'), 't2': ('-1', 't1+4*z^3'), 't3': ('0', '1')},
    )

    golden = _golden_in('disc_h3prime', H3PRIME_RING)
    report.include(
        proportionality_check(
            discriminant(p), golden, Mode.EXACT, "det T_(H3)' ~ Delta_(H3)'", 'disc_h3prime'
        )
    )
    report.expect_constant('disc_h3prime', DISC_H3PRIME_RATIO)
    _check_weighted_degree(report, "Delta_(H3)'", golden, Fraction(3))
    report.include(check_symmetry(p))
    return report


H4_9_IMPLICIT_DENOMINATOR = '-3/10*t1^2+2/5*t2*w0^4+8*t1*w0^7+12*w0^14'
"""`d E / d w0` after `t3` is eliminated, up to the cancelled factor `w0 / w0^2`."""


def _h4_9_implicit_forms() -> dict[str, tuple[str, str]]:
    m = H4_9_IMPLICIT_DENOMINATOR
    return {
        't1': ('-(3/10*t1+8/5*w0^7)*w0', m),
        't2': ('-1/5*w0^5', m),
        't3': ('w0^3', m),
        't4': ('0', '1'),
    }


def h4_9_psi_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    p = prepotential(PrepotentialName.H4_9)
    full = LocPoly.of(golden_assignments('prepotential_h4_9')['F']).normalize()
    w0 = Poly.variable(full.ring, 'w0')
    _check_coefficient(
        report,
        'F_H4(9) coefficient of w0^37',
        full.numerator,
        (0, 0, 0, 0, 37 + full.denominator_exponent(w0)),
        Fraction(-9072, 481),
    )
    _check_constraint(report, p)
    _check_implicit(report, p, _h4_9_implicit_forms())

    golden = _golden_in('psi_tilde_h4_9', H4_9_RING)
    cleared = psi_tilde()
    report.add_check('72 * 10^6 * w0^10 * Psi_H4(9) is a polynomial', cleared is not None)
    if spec.mode == Mode.EXACT:
        if cleared is not None:
            report.include(identity_check(cleared, golden, Mode.EXACT, 'Psi~_H4(9)'))
    else:
        report.include(
            identity_check(
                psi_tilde_expression(),
                golden,
                spec.mode,
                'Psi~_H4(9)',
                points=spec.points,
                seed=spec.seed,
                threads=threads,
            )
        )
    if isinstance(golden, Poly):
        _check_weighted_degree(report, 'Psi~_H4(9)', golden, Fraction(14, 3))
        leading = golden.specialize({'t4': 0, 'w0': 0})
        t1 = Poly.variable(golden.ring, 't1')
        report.add_check(
            'Psi~ with t4 = w0 = 0 is 23147208 t1^10', leading == (t1**10).scale(23147208)
        )
    report.include(check_symmetry(p))
    return report


def transforms_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    options = {'points': spec.points, 'seed': spec.seed, 'threads': threads}

    weight_map = coord_map('weight_map_h3')
    m = Poly.variable(WEIGHT_MAP_RING, 'm')
    report.include(
        check_transform(
            weight_map.pull_back(golden_poly('disc_h3prime')),  # type: ignore[arg-type]
            _golden_in('disc_h3', WEIGHT_MAP_RING),
            Mode.EXACT,
            "Delta_(H3)' along the weighted map ~ m^15 Delta_H3",
            'weight_map_h3',
            scale=m**15,
            **options,
        )
    )
    report.include(weight_map_inverse_check())

    psi = golden_poly('psi_tilde_h4_9')
    disc_h4 = golden_poly('disc_h4')
    d_tilde = _golden_in('d_tilde_h4', Z_RING)
    t_of_x = coord_map('map_t_x_h4')
    t_of_z = coord_map('map_t_z_h4')
    x_of_z = coord_map('map_x_z_h4')
    x1 = Poly.variable(disc_h4.ring, 'x1')
    z2 = Poly.variable(Z_RING, 'Z2')
    report.include(
        check_transform(
            t_of_x.expression(psi),
            disc_h4,
            spec.mode,
            'Psi~ along the map from x ~ x1^10 Delta_H4',
            'map_t_x_h4',
            scale=x1**10,
            **options,
        )
    )
    report.include(
        check_transform(
            t_of_z.expression(psi),
            d_tilde,
            spec.mode,
            'Psi~ along the map from Z ~ Z2^10 D~',
            'map_t_z_h4',
            scale=z2**10,
            **options,
        )
    )
    report.include(
        check_transform(
            x_of_z.expression(disc_h4),
            d_tilde,
            spec.mode,
            'Delta_H4 along the map from Z ~ D~',
            'map_x_z_h4',
            **options,
        )
    )
    report.include(check_composition(x_of_z, t_of_x, t_of_z))
    report.include(roundtrip_maps())
    return report


def fvw_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    return fvw_bridge_report(spec)


def _two_route_agreement(weight: int, seed: int) -> tuple[int, int]:
    """Evaluates `Y_j` through `Z(t)` and through its pulled-back form; returns (agreed, tried)."""
    z_of_t = coord_map('map_z_t_h4')
    y = y_in_z(weight)
    pulled = y_in_t(weight)
    agreed = tried = 0
    for index in range(TWO_ROUTE_POINTS):
        for attempt in range(_TWO_ROUTE_ATTEMPTS):
            point = small_point(seed, _TWO_ROUTE_STREAM + index, attempt, pulled.ring.arity)
            try:
                z_values = [z_of_t[name].evaluate(point) for name in y.ring.names]
                t_value = pulled.evaluate(point)
            except BadPointError:
                continue
            tried += 1
            agreed += y.evaluate(z_values) == t_value
            break
    return agreed, tried


def y_in_t_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    report.mode = Mode.EXACT
    for weight, bound in Y_W0_BOUNDS.items():
        value = y_in_t(weight)
        exponent = value.denominator_exponent(Poly.variable(value.ring, 'w0'))
        logger.info(
            'Pulled Y back to the H4(9) coordinates',
            extra={'weight': weight, 'w0_exponent': exponent, 'terms': len(value.numerator)},
        )
        report.add_check(
            f'w0^{bound} Y{weight} is a polynomial in t1, t2, t4, w0',
            exponent <= bound,
            f'w0 exponent {exponent}',
        )
        agreed, tried = _two_route_agreement(weight, spec.seed)
        report.add_check(
            f'Y{weight} agrees through Z and through t',
            tried == TWO_ROUTE_POINTS and agreed == tried,
            f'{agreed}/{tried} points',
        )
    return report
