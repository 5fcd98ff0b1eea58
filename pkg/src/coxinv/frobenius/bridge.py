"""The bridge from the star flat coordinates of H3 to the (H3)' prepotential.

The star invariants evaluated on the cubic equivariant map are polynomials in the plain flat
coordinates. Pulling them back along the inverse weighted map writes them in the coordinates
`(t1, t3, z)` of the algebraic prepotential, with the free constants `c0` and `m` kept as ring
variables (`m` invertible). Tying `c0 = 40 m^3 / 3` recovers the bridge coordinates `y` of the
algebraic side after `t2` is eliminated through the constraint.
"""

from fractions import Fraction

from coxinv.algebra.locpoly import Element, LocPoly, poly_substitute
from coxinv.algebra.parse import golden_assignments
from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing
from coxinv.coxeter.generators import GroupType, Variant, generators
from coxinv.frobenius.prepotentials import H3PRIME_RING, PrepotentialName, prepotential
from coxinv.frobenius.transforms import coord_map
from coxinv.invariants.basic import U3, basic_invariants_h3, h_invariants
from coxinv.invariants.equivariant import acted, equivariant_map
from coxinv.invariants.suites import C0
from coxinv.models import Mode, SuiteSpec, VerifyReport

BRIDGE_RING = VarRing.of('t1', 't3', 'z', 'c0', 'm')
C0_IN_M = Fraction(40, 3)
"""`c0 = 40/3 * m^3` ties the two free constants."""


def _in_bridge(value: Element) -> Element:
    return value.to_ring(BRIDGE_RING)


def _variable(name: str) -> Poly:
    return Poly.variable(BRIDGE_RING, name)


def y_coordinates() -> tuple[Poly, Poly, Poly]:
    """`(y1, y2, y3)` as polynomials in `u`: the h-invariants of degrees 2, 6 and 10."""
    return h_invariants(U3, Variant.PLAIN)


def star_in_flat() -> dict[str, Element]:
    """The star flat coordinates `xs1 .. xs3` pulled back to `(t1, t3, z)` with `c0` and `m`."""
    inverse = coord_map('weight_map_h3_inverse')
    images = [_in_bridge(inverse[name]) for name in ('x1', 'x2', 'x3')] + [_variable('c0')]
    return {
        name: poly_substitute(xs, images)  # type: ignore[arg-type]
        for name, xs in golden_assignments('star_in_plain_h3').items()
    }


def star_y(xs: dict[str, Element]) -> dict[str, Element]:
    """`ys1 = xs1/2`, `ys2 = xs2/20`, `ys3 = (10 xs3 + xs1^5)/800`."""
    xs1, xs2, xs3 = (LocPoly.of(xs[name]) for name in ('xs1', 'xs2', 'xs3'))
    return {
        'ys1': xs1.scale(Fraction(1, 2)),
        'ys2': xs2.scale(Fraction(1, 20)),
        'ys3': (xs3.scale(10) + xs1**5).scale(Fraction(1, 800)),
    }


def tie_parameters(value: Element) -> Element:
    """Substitutes `c0 = 40/3 * m^3`."""
    m = _variable('m')
    images = [_variable('t1'), _variable('t3'), _variable('z'), (m**3).scale(C0_IN_M), m]
    if isinstance(value, Poly):
        return poly_substitute(value, images)
    return value.substitute(images)


def eliminate_t2(value: Poly) -> Poly:
    """Rewrites a polynomial in `(t1, t2, t3, z)` on the constraint surface of (H3)'."""
    p = prepotential(PrepotentialName.H3PRIME)
    assert p.elimination is not None
    return p.elimination.reduce(value, H3PRIME_RING)  # type: ignore[return-value]


def fvw_bridge_report(spec: SuiteSpec) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    report.mode = Mode.EXACT

    plain = basic_invariants_h3(Variant.PLAIN)
    p = equivariant_map(GroupType.H3)
    y = list(y_coordinates())
    for index, y_i in enumerate(y):
        report.add_check(
            f'y{index + 1} is invariant under the plain generators',
            all(y_i.substitute(acted(U3, s)) == y_i for s in generators(GroupType.H3).gens),
        )
    for name, expression in golden_assignments('invariants_from_y_h3').items():
        report.add_check(
            f'{name} written in y1, y2, y3 matches the basic invariant',
            expression.substitute(y) == plain[name],  # type: ignore[arg-type]
        )

    star = basic_invariants_h3(Variant.STAR)
    for index, (name, xs) in enumerate(golden_assignments('star_in_plain_h3').items()):
        images = list(plain.polys) + [Poly.constant(U3, C0)]
        j_of_p = star.polys[index].substitute(list(p.components))
        report.add_check(
            f'{name} with x -> I and c0 = 1/4 equals J{index + 1}(P)',
            xs.substitute(images) == j_of_p,  # type: ignore[union-attr]
        )

    at_invariants = {
        name: xs.substitute(list(plain.polys) + [Poly.constant(U3, C0)])
        for name, xs in golden_assignments('star_in_plain_h3').items()
    }
    star_y_at_invariants = star_y(at_invariants)  # type: ignore[arg-type]
    for index, y_i in enumerate(y):
        report.add_check(
            f'conjugate of y{index + 1} on the cubic map equals ys{index + 1} at x = I',
            y_i.conj().substitute(list(p.components)) == star_y_at_invariants[f'ys{index + 1}'],
        )

    xs = star_in_flat()
    for name, expected in golden_assignments('star_in_flat_h3prime').items():
        report.add_check(
            f'{name} pulled back along the inverse weighted map matches the printed form',
            xs[name] == _in_bridge(expected),
        )
    ys = star_y(xs)
    for name, expected in golden_assignments('ystar_in_flat_h3prime').items():
        report.add_check(
            f'{name} built from the star flat coordinates matches the printed form',
            ys[name] == _in_bridge(expected),
        )

    reduced = golden_assignments('y_in_reduced_h3prime')
    for index, (name, expected) in enumerate(reduced.items()):
        report.add_check(
            f'ys{index + 1} with c0 = 40/3 m^3 equals {name} in (t1, t3, z)',
            tie_parameters(ys[f'ys{index + 1}']) == _in_bridge(expected),
        )
    for name, value in golden_assignments('y_in_flat_h3prime').items():
        report.add_check(
            f'{name} with t2 = -t1 z - z^4 equals its reduced form',
            eliminate_t2(value) == reduced[name].to_ring(H3PRIME_RING),  # type: ignore[arg-type]
        )
    return report
