"""Verification suites for the invariant theory of W(H3) and W(H4)."""

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
import logging

from coxinv.algebra.expr import Composed, Determinant, Expression, Product
from coxinv.algebra.golden import Golden
from coxinv.algebra.identity import identity_check, proportionality_check
from coxinv.algebra.parse import golden_assignments, golden_poly
from coxinv.algebra.poly import Poly, jacobian_det, product, weighted_degree
from coxinv.constants import LOGGER_NAME
from coxinv.coxeter.generators import GroupType, Variant, generators
from coxinv.invariants.basic import (
    H4_DEGREES,
    I_RING,
    U3,
    U4,
    Z_RING,
    basic_invariants_h3,
    basic_invariants_h4,
)
from coxinv.invariants.discriminant import (
    check_anti_invariance_by_forms,
    discriminant_expression,
    quotient_forms,
    reflection_forms,
    star_forms,
)
from coxinv.invariants.equivariant import (
    acted,
    check_intertwining,
    check_invariance,
    equivariant_map,
)
from coxinv.invariants.solver import express_in_invariants
from coxinv.models import Mode, SuiteSpec, VerifyReport

logger = logging.getLogger(LOGGER_NAME)

X_TO_I = {'x1': 'I1', 'x2': 'I2', 'x3': 'I3'}

DISCRIMINANT_FACTOR_H3 = -(2**15) * 5**2
C0 = Golden(Fraction(1, 4))
C1 = Golden(Fraction(1, 2**15))
C_PRIME = Golden(Fraction(1, 2**10 * 3**2))


def disc_h3_in_invariants() -> Poly:
    """The printed H3 discriminant with the flat coordinates renamed to `I1, I2, I3`."""
    return golden_poly('disc_h3').to_ring(I_RING, rename=X_TO_I)  # type: ignore[union-attr]


def h3_invariants_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    plain = generators(GroupType.H3, Variant.PLAIN)
    star = generators(GroupType.H3, Variant.STAR)
    invariants = basic_invariants_h3(Variant.PLAIN)
    star_invariants = basic_invariants_h3(Variant.STAR)
    for name, f in invariants.items():
        report.include(check_invariance(f, plain, Mode.EXACT, name))
    for name, f in star_invariants.items():
        report.include(check_invariance(f, star, Mode.EXACT, name))

    forms = reflection_forms(GroupType.H3)
    d = product(forms, U3)
    d_star = product(star_forms(forms), U3)
    report.include(check_invariance(d, plain, Mode.EXACT, 'D', anti=True))
    report.include(check_invariance(d_star, star, Mode.EXACT, 'D*', anti=True))
    report.add_check('D has degree 15', d.degree() == 15, f'degree {d.degree()}')

    jacobian = jacobian_det(list(invariants.polys), U3.names)
    report.include(
        proportionality_check(
            jacobian, d, Mode.EXACT, 'det d(I1,I2,I3)/du is a multiple of D', 'jacobian_I'
        )
    )

    disc = disc_h3_in_invariants()
    solved = express_in_invariants(d**2, invariants, seed=spec.seed, exact_check=True)
    expected = disc.scale(Fraction(1, DISCRIMINANT_FACTOR_H3))
    report.add_check(
        'D^2 written in I equals Delta_H3(I) / (-2^15 * 5^2)',
        solved.expr == expected,
        f'{len(solved.expr)} terms',
    )
    star_side = disc.substitute(list(star_invariants.polys))
    report.add_check(
        'Delta_H3(J1, J2, J3) = -2^15 * 5^2 * D*^2',
        star_side == (d_star**2).scale(DISCRIMINANT_FACTOR_H3),
    )
    degree = weighted_degree(disc)
    report.add_check(
        'Delta_H3(I) has weighted degree 30', degree == 30, f'weighted degree {degree}'
    )
    return report


def h3_intertwine_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    p = equivariant_map(GroupType.H3)
    report.include(
        check_intertwining(
            p,
            generators(GroupType.H3, Variant.PLAIN),
            generators(GroupType.H3, Variant.STAR),
            seed=spec.seed,
        )
    )
    invariants = basic_invariants_h3(Variant.PLAIN)
    star_invariants = basic_invariants_h3(Variant.STAR)
    images = list(p.components)
    solved = [
        express_in_invariants(j.substitute(images), invariants, seed=spec.seed)
        for j in star_invariants.polys
    ]
    c0 = solved[0].expr.coefficient((3, 0, 0))
    report.derive('c0', c0)
    report.expect_constant('c0', C0)

    expected = golden_assignments('star_in_plain_h3')
    for index, (name, result) in enumerate(zip(star_invariants.names, solved)):
        reference = expected[f'xs{index + 1}'].specialize({'c0': c0})  # type: ignore[union-attr]
        reference = reference.to_ring(I_RING, rename=X_TO_I)
        report.add_check(
            f'{name}(P(u)) written in I matches the star flat coordinate xs{index + 1}',
            result.expr == reference,
            str(result),
        )
    return report


def h3_jacobian_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    p = equivariant_map(GroupType.H3)
    invariants = basic_invariants_h3(Variant.PLAIN)
    i1, i2, _ = invariants.polys
    jacobian = jacobian_det(list(p.components), U3.names)
    report.include(
        proportionality_check(
            jacobian,
            i2 - i1**3,
            Mode.EXACT,
            'det d(P1,P2,P3)/du is a multiple of I2 - I1^3',
            'jacobian_P',
        )
    )

    forms = reflection_forms(GroupType.H3)
    quotients = quotient_forms(p, forms)
    divided = [q for q in quotients if isinstance(q, Poly)]
    report.add_check(
        'every star form of P is divisible by its plain form',
        len(divided) == len(forms),
        f'{len(forms) - len(divided)} forms do not divide',
    )
    report.add_check(
        'every quotient form has degree 2', all(q.degree() == 2 for q in divided)
    )

    q0 = golden_poly('q0_h3').to_ring(I_RING)  # type: ignore[union-attr]
    report.add_check('Q0 has leading term I1^15', q0.leading_term() == ((15, 0, 0), Golden(1)))
    q0_u = q0.substitute(list(invariants.polys))
    if len(divided) == len(forms):
        report.include(
            proportionality_check(
                product(divided, U3),
                q0_u,
                Mode.EXACT,
                'the product of the quotient forms is a multiple of Q0(I)',
                'c1',
            )
        )
        report.expect_constant('c1', C1)
    d_star_of_p = product([form.conj().substitute(list(p.components)) for form in forms], U3)
    report.add_check(
        'D*(P1, P2, P3) = c1 * Q0(I) * D',
        d_star_of_p == (q0_u * product(forms, U3)).scale(C1),
    )
    return report


def h4_invariants_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    mode = spec.mode
    for variant in (Variant.PLAIN, Variant.STAR):
        g = generators(GroupType.H4, variant)
        invariants = basic_invariants_h4(variant)
        for name, f in invariants.items():
            check_mode = Mode.EXACT if f.degree() <= 12 else mode
            report.include(
                check_invariance(
                    f, g, check_mode, name, points=spec.points, seed=spec.seed, threads=threads
                )
            )

    forms = reflection_forms(GroupType.H4)
    report.add_check('W(H4) has 60 reflections', len(forms) == 60, f'{len(forms)} forms')
    report.include(
        check_anti_invariance_by_forms(forms, generators(GroupType.H4, Variant.PLAIN), 'D')
    )
    report.include(
        check_anti_invariance_by_forms(
            star_forms(forms), generators(GroupType.H4, Variant.STAR), 'D*'
        )
    )

    invariants = basic_invariants_h4(Variant.PLAIN)
    d = discriminant_expression(forms)
    jacobian = Determinant([[f.diff(name) for name in U4.names] for f in invariants.polys])
    report.include(
        proportionality_check(
            jacobian,
            d,
            mode,
            'det d(Z2,Z12,Z20,Z30)/du is a multiple of D',
            'jacobian_Z',
            points=spec.points,
            seed=spec.seed,
            threads=threads,
        )
    )
    d_tilde = golden_poly('d_tilde_h4').to_ring(Z_RING)  # type: ignore[union-attr]
    report.include(
        proportionality_check(
            Product([(d, 2)]),
            Composed(d_tilde, list(invariants.polys)),
            mode,
            'D^2 is a multiple of D~(Z2, Z12, Z20, Z30)',
            'd_tilde',
            points=spec.points,
            seed=spec.seed,
            threads=threads,
        )
    )
    degree = weighted_degree(d_tilde)
    report.add_check('D~ has weighted degree 120', degree == 120, f'weighted degree {degree}')
    return report


def _y_references() -> dict[str, Poly]:
    return {
        name: value.to_ring(Z_RING)  # type: ignore[union-attr]
        for name, value in golden_assignments('y_in_z_h4').items()
    }


def star_of_p(index: int) -> Composed:
    """`Z*_j(P1, .., P4)` as an unexpanded expression in `u`."""
    star = basic_invariants_h4(Variant.STAR)
    return Composed(star.polys[index], list(equivariant_map(GroupType.H4).components))


def _theorem_task(spec: SuiteSpec, index: int) -> VerifyReport:
    name = f'Y{H4_DEGREES[index]}'
    logger.info('Checking a star invariant of the septic map', extra={'name': name})
    report = VerifyReport(suite=name)
    if index < 2:
        solved = express_in_invariants(
            star_of_p(index),
            basic_invariants_h4(Variant.PLAIN),
            degree=7 * H4_DEGREES[index],
            seed=spec.seed,
        )
        report.add_check(
            f'{name} written in Z matches the printed polynomial',
            solved.expr == _y_references()[name],
            f'{len(solved.expr)} terms',
        )
    return report.include(y_identity_check(spec, index))


def y_identity_check(spec: SuiteSpec, index: int) -> VerifyReport:
    """`Zs_j(P(u)) = Y_j(Z(u))`, expanded in exact mode and evaluated mod p otherwise."""
    name = f'Y{H4_DEGREES[index]}'
    return identity_check(
        star_of_p(index),
        Composed(_y_references()[name], list(basic_invariants_h4(Variant.PLAIN).polys)),
        spec.mode,
        f'Z*{H4_DEGREES[index]}(P) equals the printed {name}(Z)',
        points=spec.points,
        seed=spec.seed,
    )


def h4_theorem32_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    """The star invariants of W(H4) evaluated on the septic map, written in the plain invariants."""
    report = VerifyReport.for_spec(spec)
    p = equivariant_map(GroupType.H4)
    plain_gens = generators(GroupType.H4, Variant.PLAIN)
    report.include(
        check_intertwining(p, plain_gens, generators(GroupType.H4, Variant.STAR), seed=spec.seed)
    )
    with ThreadPoolExecutor(max_workers=max(threads, 1)) as executor:
        outcomes = list(executor.map(lambda index: _theorem_task(spec, index), range(4)))
    for outcome in outcomes:
        report.include(outcome)

    star = basic_invariants_h4(Variant.STAR)
    for index, f in enumerate(star.polys):
        name = f'Y{H4_DEGREES[index]}'
        y = star_of_p(index)
        for position, generator in enumerate(plain_gens.gens):
            moved = [Composed(component, acted(U4, generator)) for component in p.components]
            report.include(
                identity_check(
                    Composed(f, moved),
                    y,
                    spec.mode,
                    f'{name}(u s{position + 1}) = {name}(u)',
                    points=spec.points,
                    seed=spec.seed,
                    threads=threads,
                )
            )
    return report


def chain_factor() -> Poly:
    """`Z2^2 Z20 - Z12^2` as a polynomial in `u`."""
    z = basic_invariants_h4(Variant.PLAIN)
    return z['Z2'] ** 2 * z['Z20'] - z['Z12'] ** 2


def h4_jacobian_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    mode = spec.mode
    p = equivariant_map(GroupType.H4)
    components = list(p.components)
    factor = chain_factor()
    report.include(
        proportionality_check(
            jacobian_det(components, U4.names),
            factor,
            Mode.EXACT,
            'det d(P1,..,P4)/du is a multiple of Z2^2 Z20 - Z12^2',
            'jacobian_P',
        )
    )

    forms = reflection_forms(GroupType.H4)
    quotients = quotient_forms(p, forms)
    divided = [q for q in quotients if isinstance(q, Poly)]
    report.add_check(
        'every star form of P is divisible by its plain form',
        len(divided) == len(forms),
        f'{len(forms) - len(divided)} of {len(forms)} forms do not divide',
    )
    report.add_check(
        'every quotient form G has degree 6', all(q.degree() == 6 for q in divided)
    )
    if len(divided) != len(forms):
        return report

    star_of_forms: Expression = Product(
        [(Composed(form.conj(), components), 1) for form in forms]
    )
    report.include(
        identity_check(
            star_of_forms,
            Product([(g, 1) for g in divided] + [(form, 1) for form in forms]),
            mode,
            'D*(P1, .., P4) = prod(G) * D',
            points=spec.points,
            seed=spec.seed,
            threads=threads,
        )
    )

    plain = list(basic_invariants_h4(Variant.PLAIN).polys)
    references = _y_references()
    y_rows = [
        [Composed(references[f'Y{w}'].diff(name), plain) for name in Z_RING.names]
        for w in H4_DEGREES
    ]
    report.include(
        proportionality_check(
            Determinant(y_rows),
            Product([(factor, 1)] + [(g, 1) for g in divided]),
            mode,
            'det d(Y)/d(Z) at Z(u) is a multiple of (Z2^2 Z20 - Z12^2) * prod(G)',
            'c_prime',
            points=spec.points,
            seed=spec.seed,
            threads=threads,
        )
    )
    report.expect_constant('c_prime', C_PRIME)
    return report
