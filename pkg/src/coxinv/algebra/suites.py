"""The `kernel` suite: algebraic laws of the polynomial kernel on seeded random instances."""

from coxinv.algebra.golden import Golden
from coxinv.algebra.locpoly import LocPoly
from coxinv.algebra.modular import XorShift64, derive_seed, modular_contexts
from coxinv.algebra.poly import DivisibilityFailure, Poly, poly_div_exact
from coxinv.algebra.rings import VarRing
from coxinv.models import SuiteSpec, VerifyReport

KERNEL_RING = VarRing.of('u1', 'u2', 'u3')
OUTER_RING = VarRing.of('x1', 'x2', 'x3')

_KERNEL_STREAM = 0x4B
_INSTANCES = 8


def random_poly(ring: VarRing, stream: XorShift64, terms: int = 6, degree: int = 4) -> Poly:
    """A polynomial with up to `terms` terms of degree at most `degree`, coefficients in Z[sqrt 5]."""
    result = Poly.zero(ring)
    for _ in range(terms):
        exponent = [0] * ring.arity
        for _ in range(stream.next() % (degree + 1)):
            exponent[stream.next() % ring.arity] += 1
        coefficient = Golden(stream.small_int(), stream.small_int(-3, 3))
        result = result + Poly.monomial(ring, tuple(exponent), coefficient)
    return result


def _instance(seed: int, index: int, ring: VarRing = KERNEL_RING) -> tuple[Poly, Poly, Poly]:
    stream = XorShift64(derive_seed(seed, _KERNEL_STREAM, index))
    return random_poly(ring, stream), random_poly(ring, stream), random_poly(ring, stream)


def _nonzero(f: Poly) -> Poly:
    return f if not f.is_zero() else Poly.constant(f.ring, 1)


def check_ring_laws(f: Poly, g: Poly, h: Poly) -> bool:
    return (
        f + g == g + f
        and f * g == g * f
        and (f * g) * h == f * (g * h)
        and f * (g + h) == f * g + f * h
        and f - f == Poly.zero(f.ring)
    )


def check_conjugation(f: Poly, g: Poly) -> bool:
    return (f * g).conj() == f.conj() * g.conj() and (f + g).conj() == f.conj() + g.conj()


def check_chain_rule(outer: Poly, images: list[Poly], name: str) -> bool:
    """`d/d name outer(images) = sum_k (d outer/d x_k)(images) * d images[k]/d name`."""
    composed = outer.substitute(images)
    expected = Poly.zero(images[0].ring)
    for variable, image in zip(outer.ring.names, images):
        expected = expected + outer.diff(variable).substitute(images) * image.diff(name)
    return composed.diff(name) == expected


def check_division(f: Poly, g: Poly) -> bool:
    divisor = _nonzero(g)
    quotient = poly_div_exact(f * divisor, divisor)
    if isinstance(quotient, DivisibilityFailure) or quotient != f:
        return False
    if divisor.degree() == 0:
        return True
    return isinstance(poly_div_exact(f * divisor + 1, divisor), DivisibilityFailure)


def check_modular_homomorphism(f: Poly, g: Poly, point: list[int], seed: int) -> bool:
    for ctx in modular_contexts(seed):
        left = (f * g + f).evaluate_mod(point, ctx)
        right = (f.evaluate_mod(point, ctx) * g.evaluate_mod(point, ctx)) % ctx.p
        right = (right + f.evaluate_mod(point, ctx)) % ctx.p
        if left != right or ctx.reduce(f.evaluate(point)) != f.evaluate_mod(point, ctx):
            return False
    return True


def check_representation_independence(f: Poly, g: Poly, h: Poly) -> bool:
    """`f / g` and `(f h) / (g h)` are the same element of the localized ring."""
    g, h = _nonzero(g), _nonzero(h)
    a = LocPoly(f, [g], [1])
    b = LocPoly(f * h, [g, h], [1, 1])
    return a == b and a.normalize() == b.normalize()


def kernel_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    checks = {
        'ring laws': [],
        'conjugation is a ring homomorphism': [],
        'chain rule': [],
        'exact division round trip': [],
        'reduction modulo p is a ring homomorphism': [],
        'localized values do not depend on the representation': [],
    }
    for index in range(_INSTANCES):
        f, g, h = _instance(spec.seed, index)
        outer, _, _ = _instance(spec.seed, _INSTANCES + index, OUTER_RING)
        stream = XorShift64(derive_seed(spec.seed, _KERNEL_STREAM, 2 * _INSTANCES + index))
        point = [stream.small_int() for _ in range(KERNEL_RING.arity)]
        checks['ring laws'].append(check_ring_laws(f, g, h))
        checks['conjugation is a ring homomorphism'].append(check_conjugation(f, g))
        checks['chain rule'].append(check_chain_rule(outer, [f, g, h], 'u1'))
        checks['exact division round trip'].append(check_division(f, g))
        checks['reduction modulo p is a ring homomorphism'].append(
            check_modular_homomorphism(f, g, point, spec.seed)
        )
        checks['localized values do not depend on the representation'].append(
            check_representation_independence(f, g, h)
        )
    for label, outcomes in checks.items():
        failed = [index for index, passed in enumerate(outcomes) if not passed]
        detail = f'{len(outcomes)} instances' if not failed else f'failing instances {failed}'
        report.add_check(label, not failed, detail)
    return report
