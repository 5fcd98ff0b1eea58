"""Coordinate maps between flat coordinates, basic invariants and algebraic working coordinates."""

from dataclasses import dataclass
from functools import lru_cache

from coxinv.algebra.expr import Composed, Expression
from coxinv.algebra.identity import identity_check, proportionality_check
from coxinv.algebra.locpoly import Element, LocPoly, poly_substitute
from coxinv.algebra.parse import golden_assignments
from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing
from coxinv.constants import DEFAULT_POINTS_PER_PRIME, DEFAULT_SEED
from coxinv.models import Mode, VerifyReport


@dataclass(frozen=True)
class CoordMap:
    """`target[k] = images[k](source)`; symbolic parameters such as `m` are source variables."""

    name: str
    source: VarRing
    target_names: tuple[str, ...]
    images: tuple[Element, ...]

    def __getitem__(self, name: str) -> Element:
        return self.images[self.target_names.index(name)]

    def pull_back(self, f: Element) -> Element:
        """`f` composed with the map; the variables of `f` are matched by name with the targets."""
        images = [self._image_for(name) for name in f.ring.names]
        if isinstance(f, Poly):
            return poly_substitute(f, images)
        return f.substitute(images)

    def expression(self, f: Element) -> Composed:
        """The composition kept unexpanded."""
        return Composed(f, [self._image_for(name) for name in f.ring.names])

    def then(self, other: 'CoordMap', name: str | None = None) -> 'CoordMap':
        """The map `other(self(.))`: the targets of `self` feed the source of `other`."""
        images = tuple(self.pull_back(image) for image in other.images)
        label = name or f'{other.name}.{self.name}'
        return CoordMap(label, self.source, other.target_names, images)

    def _image_for(self, name: str) -> Element:
        if name in self.target_names:
            return self[name]
        if self.source.has(name):
            return Poly.variable(self.source, name)
        raise KeyError(f'{name} is neither a target of {self.name} nor a parameter')


@lru_cache(maxsize=None)
def coord_map(name: str) -> CoordMap:
    """Reads a map from the golden file of the same name."""
    entries = golden_assignments(name)
    images = tuple(entries.values())
    return CoordMap(name, images[0].ring, tuple(entries), images)


def check_transform(
    source_disc: Element | Expression,
    target_disc: Element,
    mode: Mode,
    label: str,
    constant_name: str,
    *,
    scale: Element | None = None,
    points: int = DEFAULT_POINTS_PER_PRIME,
    seed: int = DEFAULT_SEED,
    threads: int = 1,
) -> VerifyReport:
    """Checks that a pulled-back discriminant is a constant multiple of `scale * target_disc`.

    The constant is derived exactly and recorded; it must not vanish.
    """
    report = proportionality_check(
        source_disc,
        target_disc,
        mode,
        label,
        constant_name,
        scale=scale,
        points=points,
        seed=seed,
        threads=threads,
    )
    constant = report.derived_constants.get(constant_name)
    report.add_check(f'{constant_name} is a non-zero constant', bool(constant))
    return report


def check_identity_map(composite: CoordMap, label: str) -> VerifyReport:
    """Every image of `composite` equals the variable of the same name."""
    report = VerifyReport(suite=label, mode=Mode.EXACT)
    for name, image in zip(composite.target_names, composite.images):
        variable = Poly.variable(image.ring, name)
        report.add_check(f'{label}: {name} -> {name}', image == variable)
    return report


def roundtrip_maps() -> VerifyReport:
    """The maps between the basic invariants of W(H4) and the H4(9) coordinates are inverse."""
    report = VerifyReport(suite='roundtrip', mode=Mode.EXACT)
    t_of_z = coord_map('map_t_z_h4')
    z_of_t = coord_map('map_z_t_h4')
    report.include(check_identity_map(z_of_t.then(t_of_z, 't.z.t'), 't -> Z -> t'))
    report.include(check_identity_map(t_of_z.then(z_of_t, 'z.t.z'), 'Z -> t -> Z'))
    return report


def weight_map_inverse_check() -> VerifyReport:
    """The weighted map to the (H3)' coordinates and its inverse compose to the identity."""
    report = VerifyReport(suite='weight map inverse', mode=Mode.EXACT)
    forward = coord_map('weight_map_h3')
    inverse = coord_map('weight_map_h3_inverse')
    report.include(check_identity_map(forward.then(inverse, 'x.t.x'), 'x -> t -> x'))
    report.include(check_identity_map(inverse.then(forward, 't.x.t'), 't -> x -> t'))
    return report


def check_composition(first: CoordMap, second: CoordMap, expected: CoordMap) -> VerifyReport:
    """`second(first(.))` agrees with `expected` component by component."""
    label = f'{second.name} after {first.name} = {expected.name}'
    report = VerifyReport(suite=label, mode=Mode.EXACT)
    composite = first.then(second)
    for name in expected.target_names:
        report.include(
            identity_check(composite[name], expected[name], Mode.EXACT, f'{label}: {name}')
        )
    return report


Y_W0_BOUNDS = {2: 0, 12: 7, 20: 10, 30: 15}
"""Largest power of `w0` that may divide each `Y_j` written in the H4(9) coordinates."""


def y_in_z(weight: int) -> Poly:
    return golden_assignments('y_in_z_h4')[f'Y{weight}']  # type: ignore[return-value]


@lru_cache(maxsize=None)
def y_in_t(weight: int) -> LocPoly:
    """`Y_j` pulled back to `(t1, t2, t4, w0)`, with every cancellable power of `w0` cancelled."""
    return LocPoly.of(coord_map('map_z_t_h4').pull_back(y_in_z(weight))).normalize()


def cleared_y_in_t(weight: int) -> Poly | None:
    """`w0^k * Y_j` for the expected bound `k`; `None` when that does not clear the denominator."""
    value = y_in_t(weight)
    w0 = Poly.variable(value.ring, 'w0')
    return (value * w0 ** Y_W0_BOUNDS[weight]).as_poly()
