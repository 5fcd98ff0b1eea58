"""Basic invariants of W(H3) and W(H4) and their star (Galois-conjugate) versions."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from coxinv.algebra.golden import SQRT5
from coxinv.algebra.parse import golden_assignments
from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing
from coxinv.coxeter.generators import GroupType, Variant

U3 = VarRing.of('u1', 'u2', 'u3')
U4 = VarRing.of('u1', 'u2', 'u3', 'u4')

H3_DEGREES = (2, 6, 10)
H4_DEGREES = (2, 12, 20, 30)

I_RING = VarRing.of('I1', 'I2', 'I3', weights=H3_DEGREES)
J_RING = VarRing.of('J1', 'J2', 'J3', weights=H3_DEGREES)
Z_RING = VarRing.of('Z2', 'Z12', 'Z20', 'Z30', weights=H4_DEGREES)
ZS_RING = VarRing.of('Zs2', 'Zs12', 'Zs20', 'Zs30', weights=H4_DEGREES)


@dataclass(frozen=True)
class InvariantSet:
    """Named basic invariants of one group, as polynomials in the u-ring."""

    group_type: GroupType
    variant: Variant
    ring: VarRing
    names: tuple[str, ...]
    polys: tuple[Poly, ...]
    degrees: tuple[int, ...]
    symbol_ring: VarRing
    """Weighted ring whose variables stand for the invariants, for rewriting in the invariants."""

    def __getitem__(self, name: str) -> Poly:
        return self.polys[self.names.index(name)]

    def items(self) -> list[tuple[str, Poly]]:
        return list(zip(self.names, self.polys))


def elementary_data(u_ring: VarRing, names: tuple[str, str, str] | None = None):
    """Elementary symmetric functions of the squared coordinates and their difference product.

    Returns `(e1, e2, e3, delta)`; `names` selects the coordinates (the first three by default).
    """
    names = names or (u_ring.names[0], u_ring.names[1], u_ring.names[2])
    s1, s2, s3 = (Poly.variable(u_ring, name) ** 2 for name in names)
    e1 = s1 + s2 + s3
    e2 = s1 * s2 + s1 * s3 + s2 * s3
    e3 = s1 * s2 * s3
    delta = (s1 - s2) * (s1 - s3) * (s2 - s3)
    return e1, e2, e3, delta


def h_invariants(u_ring: VarRing, variant: Variant = Variant.PLAIN) -> tuple[Poly, Poly, Poly]:
    """`(h2, h6, h10)` of the first three coordinates; the star variant gives `(k2, k6, k10)`.

    With these, `I1 = 2*h2`, `I2 = 20*h6` and `I3 = 80*(h10 - h2^5/25)`.
    """
    e1, e2, e3, delta = elementary_data(u_ring)
    h2 = e1
    h6 = e3 * -11 + e1 * e2 + delta * SQRT5
    h10 = (
        e2 * e3 * 95
        - e1**2 * e3 * 32
        - e1 * e2**2 * 5
        + e1**3 * e2 * 2
        + e2 * delta * (SQRT5 * 3)
    )
    if variant == Variant.STAR:
        return h2.conj(), h6.conj(), h10.conj()
    return h2, h6, h10


@lru_cache(maxsize=None)
def basic_invariants_h3(variant: Variant = Variant.PLAIN) -> InvariantSet:
    h2, h6, h10 = h_invariants(U3, variant)
    polys = (h2 * 2, h6 * 20, (h10 - h2**5 * Fraction(1, 25)) * 80)
    if variant == Variant.STAR:
        return InvariantSet(GroupType.H3, variant, U3, J_RING.names, polys, H3_DEGREES, J_RING)
    return InvariantSet(GroupType.H3, variant, U3, I_RING.names, polys, H3_DEGREES, I_RING)


@lru_cache(maxsize=None)
def basic_invariants_h4(variant: Variant = Variant.PLAIN) -> InvariantSet:
    h2, h6, h10 = h_invariants(U4, variant)
    u4 = Poly.variable(U4, 'u4')
    images = [h2, h6, h10, u4]
    templates = golden_assignments('invariants_h4')
    polys = tuple(templates[name].substitute(images) for name in Z_RING.names)  # type: ignore[union-attr]
    ring = ZS_RING if variant == Variant.STAR else Z_RING
    return InvariantSet(GroupType.H4, variant, U4, ring.names, polys, H4_DEGREES, ring)


def basic_invariants(group_type: GroupType, variant: Variant = Variant.PLAIN) -> InvariantSet:
    if group_type == GroupType.H3:
        return basic_invariants_h3(variant)
    return basic_invariants_h4(variant)


INVARIANT_NAMES = (
    I_RING.names
    + J_RING.names
    + Z_RING.names
    + ZS_RING.names
    + ('h2', 'h6', 'h10', 'k2', 'k6', 'k10')
)


def invariant_by_name(name: str) -> Poly:
    """Looks up an invariant the way the command line names it (`I2`, `Zs30`, `k6`, ...)."""
    if name not in INVARIANT_NAMES:
        raise KeyError(name)
    if name[0] in 'hk':
        variant = Variant.PLAIN if name[0] == 'h' else Variant.STAR
        return h_invariants(U3, variant)[H3_DEGREES.index(int(name[1:]))]
    for ring, build, variant in (
        (I_RING, basic_invariants_h3, Variant.PLAIN),
        (J_RING, basic_invariants_h3, Variant.STAR),
        (Z_RING, basic_invariants_h4, Variant.PLAIN),
        (ZS_RING, basic_invariants_h4, Variant.STAR),
    ):
        if ring.has(name):
            return build(variant)[name]
    raise KeyError(name)
