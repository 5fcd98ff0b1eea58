"""The four prepotentials and derivatives along their flat coordinates.

An algebraic prepotential depends on an extra variable (`z` or `w0`) defined implicitly by a
constraint `E = 0`. One flat coordinate is eliminated through the constraint, so every function
on the manifold is written in the working coordinates and derivatives along a flat coordinate
`t` are total derivatives `d/dt + (d alg/dt) * d/d alg`.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from coxinv.algebra.locpoly import Element, LocPoly, poly_substitute
from coxinv.algebra.parse import golden_assignments, golden_poly
from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing


class PrepotentialName(Enum):
    H3 = 'h3'
    H4 = 'h4'
    H3PRIME = 'h3prime'
    H4_9 = 'h4_9'


H3_WEIGHTS = (Fraction(1, 5), Fraction(3, 5), Fraction(1))
H4_WEIGHTS = (Fraction(1, 15), Fraction(2, 5), Fraction(2, 3), Fraction(1))
H3PRIME_WEIGHTS = (Fraction(3, 5), Fraction(1), Fraction(1, 5))
H4_9_WEIGHTS = (Fraction(7, 15), Fraction(2, 3), Fraction(1), Fraction(1, 15))

X3_RING = VarRing.of('x1', 'x2', 'x3', weights=H3_WEIGHTS)
X4_RING = VarRing.of('x1', 'x2', 'x3', 'x4', weights=H4_WEIGHTS)
H3PRIME_RING = VarRing.of('t1', 't3', 'z', weights=H3PRIME_WEIGHTS)
H4_9_RING = VarRing.of('t1', 't2', 't4', 'w0', weights=H4_9_WEIGHTS)


@dataclass(frozen=True)
class Elimination:
    """A flat coordinate replaced by an expression in the working coordinates."""

    name: str
    image: Element
    full_ring: VarRing
    """The ring of the flat coordinates together with the algebraic variable."""

    def reduce(self, f: Element, working: VarRing) -> Element:
        """Rewrites a function of the full ring in the working coordinates."""
        images: list[Element] = [
            self.image if name == self.name else Poly.variable(working, name)
            for name in self.full_ring.names
        ]
        if isinstance(f, Poly):
            return poly_substitute(f, images)
        return f.substitute(images)


@dataclass(frozen=True)
class Prepotential:
    name: PrepotentialName
    flat_names: tuple[str, ...]
    ring: VarRing
    """Working coordinates, weighted."""
    expr: Element
    basis: tuple[Poly, ...] = ()
    """Declared denominators of every derivative."""
    alg_var: str | None = None
    constraint: Poly | None = None
    """The defining equation of the algebraic variable, in the full ring."""
    elimination: Elimination | None = None
    implicit: dict[str, LocPoly] = field(default_factory=dict, compare=False)
    """`d alg / d t` for every flat coordinate `t`."""

    @property
    def is_algebraic(self) -> bool:
        return self.alg_var is not None

    @property
    def n(self) -> int:
        return len(self.flat_names)

    def lift(self, value: Element) -> Element:
        """The value over the declared denominators; polynomial prepotentials keep polynomials."""
        if not self.is_algebraic:
            return value
        return LocPoly.of(value).with_basis(self.basis)


def implicit_derivative(p: Prepotential, flat_var: str) -> LocPoly:
    """`d alg / d flat_var = -(dE/d flat_var) / (dE/d alg)` in the working coordinates.

    Returns zero when the constraint does not involve `flat_var`.
    """
    if not p.is_algebraic:
        raise ValueError(f'The {p.name.value} prepotential has no algebraic variable')
    assert p.constraint is not None and p.elimination is not None and p.alg_var is not None
    if not p.constraint.involves(flat_var):
        return LocPoly(Poly.zero(p.ring), p.basis)
    numerator = p.elimination.reduce(p.constraint.diff(flat_var), p.ring)
    denominator = p.elimination.reduce(p.constraint.diff(p.alg_var), p.ring)
    inverse = LocPoly.of(denominator).with_basis(p.basis).inverse()
    return (LocPoly.of(numerator).with_basis(p.basis) * inverse).scale(-1).normalize()


def total_derivative(p: Prepotential, f: Element, flat_var: str) -> Element:
    """Derivative of `f` along the flat coordinate `flat_var`."""
    partial = f.diff(flat_var) if p.ring.has(flat_var) else Poly.zero(p.ring)
    if not p.is_algebraic:
        return partial
    assert p.alg_var is not None
    return p.lift(partial) + p.implicit[flat_var] * f.diff(p.alg_var)


def _polynomial(name: PrepotentialName, ring: VarRing, golden: str) -> Prepotential:
    expr = golden_poly(golden).to_ring(ring)  # type: ignore[union-attr]
    return Prepotential(name, ring.names, ring, expr)


def _algebraic(
    name: PrepotentialName,
    golden: str,
    working: VarRing,
    flat_names: tuple[str, ...],
    alg_var: str,
    eliminated: str,
) -> Prepotential:
    entries = golden_assignments(golden)
    constraint = entries['constraint']
    if not isinstance(constraint, Poly):
        raise ValueError(f'The constraint of {name.value} must be a polynomial')
    full_ring = constraint.ring
    elimination = Elimination(eliminated, entries[eliminated].to_ring(working), full_ring)

    # the denominators of the eliminated coordinate, then the derivative of the constraint
    image_basis = (
        list(elimination.image.basis) if isinstance(elimination.image, LocPoly) else []
    )
    derivative = LocPoly.of(elimination.reduce(constraint.diff(alg_var), working)).normalize()
    basis = tuple(image_basis + [derivative.numerator])
    draft = Prepotential(
        name,
        flat_names,
        working,
        elimination.reduce(entries['F'], working),
        basis,
        alg_var,
        constraint,
        elimination,
    )
    implicit = {flat: implicit_derivative(draft, flat) for flat in flat_names}
    return Prepotential(
        name,
        flat_names,
        working,
        draft.lift(draft.expr),
        basis,
        alg_var,
        constraint,
        elimination,
        implicit,
    )


@lru_cache(maxsize=None)
def prepotential(name: PrepotentialName) -> Prepotential:
    if name == PrepotentialName.H3:
        return _polynomial(name, X3_RING, 'prepotential_h3')
    if name == PrepotentialName.H4:
        return _polynomial(name, X4_RING, 'prepotential_h4')
    if name == PrepotentialName.H3PRIME:
        return _algebraic(
            name, 'prepotential_h3prime', H3PRIME_RING, ('t1', 't2', 't3'), 'z', 't2'
        )
    return _algebraic(
        name, 'prepotential_h4_9', H4_9_RING, ('t1', 't2', 't3', 't4'), 'w0', 't3'
    )
