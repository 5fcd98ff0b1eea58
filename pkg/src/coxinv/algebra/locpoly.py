"""Polynomials localized at a declared set of denominators.

A `LocPoly` is `numerator / prod(basis[i] ** exps[i])`. No general polynomial GCD is ever computed:
the only denominators that can appear are products of the declared basis polynomials, and
normalization removes basis factors by trial division.
"""

from collections.abc import Sequence
from fractions import Fraction
from typing import TYPE_CHECKING, Union

from coxinv.algebra.golden import ONE, Golden, Scalar
from coxinv.algebra.poly import Poly, horner_substitute, poly_div_exact
from coxinv.algebra.rings import VarRing
from coxinv.exceptions import (
    ArityError,
    BadPointError,
    NotInDenominatorBasisError,
    RingMismatchError,
)

if TYPE_CHECKING:
    from coxinv.algebra.modular import ModCtx


class LocPoly:
    __slots__ = ('numerator', 'basis', 'exps')

    def __init__(
        self,
        numerator: Poly,
        basis: Sequence[Poly] = (),
        exps: Sequence[int] | None = None,
    ):
        basis = tuple(basis)
        exps = tuple(exps) if exps is not None else (0,) * len(basis)
        if len(exps) != len(basis):
            raise ArityError('One exponent per denominator basis element is required')
        if any(e < 0 for e in exps):
            raise ValueError(f'Denominator exponents must be non-negative: {exps}')
        for base in basis:
            if not base.ring.compatible(numerator.ring):
                raise RingMismatchError(
                    f'Denominator in [{base.ring}] does not match numerator ring [{numerator.ring}]'
                )
            if base.is_zero():
                raise ValueError('The zero polynomial cannot be a denominator')
        self.numerator = numerator
        self.basis: tuple[Poly, ...] = basis
        self.exps: tuple[int, ...] = exps

    @classmethod
    def of(cls, value: 'Poly | LocPoly', basis: Sequence[Poly] = ()) -> 'LocPoly':
        if isinstance(value, LocPoly):
            return value.with_basis(basis) if basis else value
        return cls(value, basis)

    @property
    def ring(self) -> VarRing:
        return self.numerator.ring

    def denominator(self) -> Poly:
        result = Poly.constant(self.ring, ONE)
        for base, e in zip(self.basis, self.exps):
            if e:
                result = result * base**e
        return result

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    # -- basis bookkeeping --

    def with_basis(self, extra: Sequence[Poly]) -> 'LocPoly':
        """The same value over a basis extended by `extra` (elements already present are skipped)."""
        basis = list(self.basis)
        exps = list(self.exps)
        for base in extra:
            if _position(basis, base) is None:
                basis.append(base)
                exps.append(0)
        return LocPoly(self.numerator, basis, exps)

    def _aligned(self, other: 'LocPoly') -> tuple[list[Poly], Poly, Poly, list[int]]:
        """Brings both operands over a common denominator, returning the adjusted numerators."""
        basis = list(self.basis)
        for base in other.basis:
            if _position(basis, base) is None:
                basis.append(base)
        left = _exponents_over(self, basis)
        right = _exponents_over(other, basis)
        common = [max(a, b) for a, b in zip(left, right)]
        left_numerator = self.numerator
        right_numerator = other.numerator
        for base, target, a, b in zip(basis, common, left, right):
            if target > a:
                left_numerator = left_numerator * base ** (target - a)
            if target > b:
                right_numerator = right_numerator * base ** (target - b)
        return basis, left_numerator, right_numerator, common

    def _coerce(self, other) -> 'LocPoly | None':
        if isinstance(other, LocPoly):
            if not self.ring.compatible(other.ring):
                raise RingMismatchError(f'Ring mismatch: [{self.ring}] versus [{other.ring}]')
            return other
        if isinstance(other, Poly):
            if not self.ring.compatible(other.ring):
                raise RingMismatchError(f'Ring mismatch: [{self.ring}] versus [{other.ring}]')
            return LocPoly(other)
        if isinstance(other, (int, Fraction, Golden)):
            return LocPoly(Poly.constant(self.ring, other))
        return None

    # -- arithmetic --

    def __add__(self, other) -> 'LocPoly':
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        basis, left, right, exps = self._aligned(value)
        return LocPoly(left + right, basis, exps)

    __radd__ = __add__

    def __neg__(self) -> 'LocPoly':
        return LocPoly(-self.numerator, self.basis, self.exps)

    def __sub__(self, other) -> 'LocPoly':
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return self + (-value)

    def __rsub__(self, other) -> 'LocPoly':
        return (-self) + other

    def __mul__(self, other) -> 'LocPoly':
        if isinstance(other, (int, Fraction, Golden)):
            return LocPoly(self.numerator.scale(other), self.basis, self.exps)
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        basis = list(self.basis)
        for base in value.basis:
            if _position(basis, base) is None:
                basis.append(base)
        left = _exponents_over(self, basis)
        right = _exponents_over(value, basis)
        return LocPoly(
            self.numerator * value.numerator, basis, [a + b for a, b in zip(left, right)]
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'LocPoly':
        if exponent < 0:
            return self.inverse() ** -exponent
        return LocPoly(self.numerator**exponent, self.basis, [e * exponent for e in self.exps])

    def inverse(self) -> 'LocPoly':
        """The inverse, defined when the numerator is a constant times a product of basis elements."""
        remaining = self.numerator
        powers = [0] * len(self.basis)
        for position, base in enumerate(self.basis):
            while not remaining.is_constant() and not base.is_constant():
                quotient = poly_div_exact(remaining, base)
                if not isinstance(quotient, Poly):
                    break
                remaining = quotient
                powers[position] += 1
        if remaining.is_zero() or not remaining.is_constant():
            raise NotInDenominatorBasisError(
                'Cannot invert an element whose numerator is not a product of declared denominators',
                extra={'basis': [str(b) for b in self.basis]},
            )
        scale = remaining.constant_value().inverse()
        numerator = self.denominator().scale(scale)
        return LocPoly(numerator, self.basis, powers)

    def __truediv__(self, other) -> 'LocPoly':
        if isinstance(other, (int, Fraction, Golden)):
            return LocPoly(self.numerator.scale(Golden.of(other).inverse()), self.basis, self.exps)
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        value = value.with_basis(self.basis)
        return self * value.inverse()

    def __rtruediv__(self, other) -> 'LocPoly':
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return value / self

    def __eq__(self, other) -> bool:
        if not isinstance(other, (LocPoly, Poly, int, Fraction, Golden)):
            return NotImplemented
        value = self._coerce(other)
        _, left, right, _ = self._aligned(value)  # type: ignore[arg-type]
        return left == right

    __hash__ = None  # type: ignore[assignment]

    def scale(self, factor: Scalar) -> 'LocPoly':
        return LocPoly(self.numerator.scale(factor), self.basis, self.exps)

    def conj(self) -> 'LocPoly':
        return LocPoly(self.numerator.conj(), [b.conj() for b in self.basis], self.exps)

    # -- normalization --

    def normalize(self) -> 'LocPoly':
        """Cancels every basis factor that exactly divides the numerator."""
        numerator = self.numerator
        exps = list(self.exps)
        for position, base in enumerate(self.basis):
            if not exps[position]:
                continue
            if base.is_monomial():
                numerator, exps[position] = _cancel_monomial(numerator, base, exps[position])
                continue
            while exps[position]:
                quotient = poly_div_exact(numerator, base)
                if not isinstance(quotient, Poly):
                    break
                numerator = quotient
                exps[position] -= 1
        return LocPoly(numerator, self.basis, exps)

    def is_polynomial(self) -> bool:
        return not any(self.normalize().exps)

    def as_poly(self) -> Poly | None:
        """The polynomial value, or `None` when a denominator survives normalization."""
        reduced = self.normalize()
        if any(reduced.exps):
            return None
        return reduced.numerator

    def denominator_exponent(self, base: Poly) -> int:
        position = _position(list(self.basis), base)
        if position is None:
            return 0
        return self.exps[position]

    # -- calculus and evaluation --

    def diff(self, name: str) -> 'LocPoly':
        """Quotient-rule derivative; each present denominator exponent grows by one."""
        numerator = self.numerator
        active = [i for i, e in enumerate(self.exps) if e]
        if not active:
            return LocPoly(numerator.diff(name), self.basis, self.exps)
        product_all = Poly.constant(self.ring, ONE)
        for i in active:
            product_all = product_all * self.basis[i]
        result = numerator.diff(name) * product_all
        for k in active:
            base_derivative = self.basis[k].diff(name)
            if base_derivative.is_zero():
                continue
            others = Poly.constant(self.ring, ONE)
            for j in active:
                if j != k:
                    others = others * self.basis[j]
            result = result - (numerator * base_derivative * others).scale(self.exps[k])
        exps = [e + 1 if e else 0 for e in self.exps]
        return LocPoly(result, self.basis, exps)

    def evaluate(self, point: Sequence[Scalar]) -> Golden:
        denominator = ONE
        for base, e in zip(self.basis, self.exps):
            if e:
                value = base.evaluate(point)
                if not value:
                    raise BadPointError('A denominator vanishes at the evaluation point')
                denominator = denominator * value**e
        return self.numerator.evaluate(point) * denominator.inverse()

    def evaluate_mod(self, point: Sequence[int], ctx: 'ModCtx') -> int:
        denominator = 1
        for base, e in zip(self.basis, self.exps):
            if e:
                value = base.evaluate_mod(point, ctx)
                if not value:
                    raise BadPointError(
                        'A denominator vanishes modulo p at the evaluation point',
                        extra={'p': ctx.p},
                    )
                denominator = denominator * pow(value, e, ctx.p) % ctx.p
        return self.numerator.evaluate_mod(point, ctx) * ctx.inverse(denominator) % ctx.p

    def substitute(self, images: Sequence['Poly | LocPoly']) -> 'LocPoly':
        """Composes with one image per variable; each denominator is carried into the target."""
        numerator = poly_substitute(self.numerator, images)
        result = LocPoly.of(numerator)
        for base, e in zip(self.basis, self.exps):
            if not e:
                continue
            image = poly_substitute(base, images)
            if isinstance(image, Poly):
                result = result * LocPoly(Poly.constant(image.ring, ONE), [image], [e])
            else:
                result = result * image.with_basis(result.basis).inverse() ** e
        return result

    def to_ring(self, ring: VarRing, rename=None) -> 'LocPoly':
        return LocPoly(
            self.numerator.to_ring(ring, rename),
            [b.to_ring(ring, rename) for b in self.basis],
            self.exps,
        )

    def __repr__(self) -> str:
        return f'LocPoly([{self.ring}], {len(self.numerator)} terms, exps={self.exps})'

    def __str__(self) -> str:
        from coxinv.algebra.format import format_locpoly

        return format_locpoly(self)


def _position(basis: Sequence[Poly], base: Poly) -> int | None:
    for position, candidate in enumerate(basis):
        if candidate == base:
            return position
    return None


def _exponents_over(value: LocPoly, basis: Sequence[Poly]) -> list[int]:
    exps = [0] * len(basis)
    for base, e in zip(value.basis, value.exps):
        position = _position(basis, base)
        exps[position] += e  # type: ignore[index]
    return exps


def _cancel_monomial(numerator: Poly, base: Poly, available: int) -> tuple[Poly, int]:
    if numerator.is_zero():
        return numerator, 0
    shift, coefficient = next(iter(base.terms.items()))
    times = available
    for exponent in numerator.terms:
        for e, s in zip(exponent, shift):
            if s:
                times = min(times, e // s)
        if not times:
            return numerator, available
    inverse = coefficient.inverse() ** times
    terms = {
        tuple(e - s * times for e, s in zip(exponent, shift)): c * inverse
        for exponent, c in numerator.terms.items()
    }
    return Poly(numerator.ring, terms, trusted=True), available - times


Element = Union[Poly, LocPoly]


def poly_substitute(f: Poly, images: Sequence[Element]) -> Element:
    """Composes `f` with the images; the result is a `Poly` exactly when every image is one."""
    if len(images) != f.ring.arity:
        raise ArityError(
            f'Expected {f.ring.arity} images, got {len(images)}',
            extra={'ring': list(f.ring.names)},
        )
    if all(isinstance(image, Poly) for image in images):
        return f.substitute(images)  # type: ignore[arg-type]
    target = images[0].ring
    basis: list[Poly] = []
    for image in images:
        if not image.ring.compatible(target):
            raise RingMismatchError('All images must share one ring')
        if isinstance(image, LocPoly):
            for base in image.basis:
                if _position(basis, base) is None:
                    basis.append(base)
    lifted = [LocPoly.of(image).with_basis(basis) for image in images]
    if not f.terms:
        return LocPoly(Poly(target), basis)
    return horner_substitute(
        f, lifted, lambda value: LocPoly(Poly.constant(target, value), basis)
    )
