"""Lazy expression trees over polynomials.

Identities of very high degree are cheap to evaluate at a point but expensive to expand. An
`Expression` records how a value is built from polynomials (composition, products, linear
combinations, determinants) so that one description serves exact evaluation, evaluation modulo a
prime and, on request, full expansion.

Evaluation caches node values by identity for the duration of one point, so shared subtrees (the
same equivariant map feeding many compositions, say) are evaluated once per point.
"""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from fractions import Fraction
from typing import TYPE_CHECKING, Union

from coxinv.algebra.golden import ONE, ZERO, Golden, Scalar
from coxinv.algebra.linalg import determinant
from coxinv.algebra.locpoly import LocPoly, poly_substitute
from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing
from coxinv.exceptions import ArityError, RingMismatchError

if TYPE_CHECKING:
    from coxinv.algebra.modular import ModCtx

Element = Union[Poly, LocPoly]


class Expression(ABC):
    ring: VarRing

    def value(self, point: Sequence[Scalar]) -> Golden:
        """Exact value at a point of Q(sqrt 5)^n."""
        return self._evaluate(point, {})

    def value_mod(self, point: Sequence[int], ctx: 'ModCtx') -> int:
        """Value at a point of F_p^n; raises `BadPointError` when a denominator vanishes."""
        return self._evaluate_mod(point, ctx, {})

    def _evaluate(self, point: Sequence[Scalar], cache: dict) -> Golden:
        key = id(self)
        if key not in cache:
            cache[key] = self._compute(point, cache)
        return cache[key]

    def _evaluate_mod(self, point: Sequence[int], ctx: 'ModCtx', cache: dict) -> int:
        key = id(self)
        if key not in cache:
            cache[key] = self._compute_mod(point, ctx, cache)
        return cache[key]

    @abstractmethod
    def _compute(self, point: Sequence[Scalar], cache: dict) -> Golden:
        pass

    @abstractmethod
    def _compute_mod(self, point: Sequence[int], ctx: 'ModCtx', cache: dict) -> int:
        pass

    @abstractmethod
    def expand(self) -> Element:
        pass

    @abstractmethod
    def degree_bound(self) -> int:
        """An upper bound for the total degree of the expanded numerator."""

    def __add__(self, other) -> 'Expression':
        return LinearCombination([(ONE, self), (ONE, as_expression(other, self.ring))])

    def __radd__(self, other) -> 'Expression':
        return self + other

    def __sub__(self, other) -> 'Expression':
        return LinearCombination([(ONE, self), (-ONE, as_expression(other, self.ring))])

    def __rsub__(self, other) -> 'Expression':
        return as_expression(other, self.ring) - self

    def __neg__(self) -> 'Expression':
        return LinearCombination([(-ONE, self)])

    def __mul__(self, other) -> 'Expression':
        if isinstance(other, (int, Fraction, Golden)):
            return Product([(self, 1)], Golden.of(other))
        return Product([(self, 1), (as_expression(other, self.ring), 1)])

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Expression':
        return Product([(self, exponent)])


class Leaf(Expression):
    """A polynomial or localized polynomial taken as is."""

    def __init__(self, element: Element):
        self.element = element
        self.ring = element.ring

    def _compute(self, point, cache):
        return self.element.evaluate(point)

    def _compute_mod(self, point, ctx, cache):
        return self.element.evaluate_mod(point, ctx)

    def expand(self) -> Element:
        return self.element

    def degree_bound(self) -> int:
        if isinstance(self.element, Poly):
            return max(self.element.degree(), 0)
        return max(self.element.numerator.degree(), 0) + sum(
            max(b.degree(), 0) * e for b, e in zip(self.element.basis, self.element.exps)
        )


class Composed(Expression):
    """`outer(images[0], ..., images[n-1])`; the images live in a common ring."""

    def __init__(self, outer: 'Expression | Element', images: Sequence['Expression | Element']):
        self.outer = as_expression(outer)
        if len(images) != self.outer.ring.arity:
            raise ArityError(
                f'Expected {self.outer.ring.arity} images, got {len(images)}',
                extra={'ring': list(self.outer.ring.names)},
            )
        self.images = [as_expression(image) for image in images]
        self.ring = self.images[0].ring
        for image in self.images[1:]:
            if not image.ring.compatible(self.ring):
                raise RingMismatchError('All images of a composition must share one ring')

    def _compute(self, point, cache):
        values = [image._evaluate(point, cache) for image in self.images]
        return self.outer._evaluate(values, {})

    def _compute_mod(self, point, ctx, cache):
        values = [image._evaluate_mod(point, ctx, cache) for image in self.images]
        return self.outer._evaluate_mod(values, ctx, {})

    def expand(self) -> Element:
        outer = self.outer.expand()
        images = [image.expand() for image in self.images]
        if isinstance(outer, Poly):
            return poly_substitute(outer, images)
        return outer.substitute(images)

    def degree_bound(self) -> int:
        return self.outer.degree_bound() * max(image.degree_bound() for image in self.images)


class Product(Expression):
    """`scalar * prod(factor ** exponent)` with non-negative integer exponents."""

    def __init__(self, factors: Sequence[tuple['Expression | Element', int]], scalar: Scalar = 1):
        if not factors:
            raise ArityError('A product needs at least one factor')
        self.factors = [(as_expression(f), e) for f, e in factors]
        self.scalar = Golden.of(scalar)
        self.ring = self.factors[0][0].ring
        for factor, exponent in self.factors:
            if not factor.ring.compatible(self.ring):
                raise RingMismatchError('All factors of a product must share one ring')
            if exponent < 0:
                raise ValueError('Product exponents must be non-negative')

    def _compute(self, point, cache):
        result = self.scalar
        for factor, exponent in self.factors:
            result = result * factor._evaluate(point, cache) ** exponent
        return result

    def _compute_mod(self, point, ctx, cache):
        result = ctx.reduce(self.scalar)
        for factor, exponent in self.factors:
            result = result * pow(factor._evaluate_mod(point, ctx, cache), exponent, ctx.p) % ctx.p
        return result

    def expand(self) -> Element:
        result: Element = Poly.constant(self.ring, self.scalar)
        for factor, exponent in self.factors:
            result = result * factor.expand() ** exponent
        return result

    def degree_bound(self) -> int:
        return sum(factor.degree_bound() * exponent for factor, exponent in self.factors)


class LinearCombination(Expression):
    def __init__(self, terms: Sequence[tuple[Scalar, 'Expression | Element']]):
        if not terms:
            raise ArityError('A linear combination needs at least one term')
        self.terms = [(Golden.of(c), as_expression(e)) for c, e in terms]
        self.ring = self.terms[0][1].ring
        for _, term in self.terms:
            if not term.ring.compatible(self.ring):
                raise RingMismatchError('All terms of a linear combination must share one ring')

    def _compute(self, point, cache):
        total = ZERO
        for coefficient, term in self.terms:
            total = total + coefficient * term._evaluate(point, cache)
        return total

    def _compute_mod(self, point, ctx, cache):
        total = 0
        for coefficient, term in self.terms:
            total += ctx.reduce(coefficient) * term._evaluate_mod(point, ctx, cache)
        return total % ctx.p

    def expand(self) -> Element:
        result: Element = Poly(self.ring)
        for coefficient, term in self.terms:
            result = result + term.expand() * coefficient
        return result

    def degree_bound(self) -> int:
        return max(term.degree_bound() for _, term in self.terms)


class Determinant(Expression):
    """Determinant of a square matrix of expressions (at most 4x4 in practice)."""

    def __init__(self, rows: Sequence[Sequence['Expression | Element']]):
        n = len(rows)
        if not n or any(len(row) != n for row in rows):
            raise ArityError('A determinant needs a square matrix')
        self.rows = [[as_expression(entry) for entry in row] for row in rows]
        self.ring = self.rows[0][0].ring

    def _compute(self, point, cache):
        return determinant([[entry._evaluate(point, cache) for entry in row] for row in self.rows])

    def _compute_mod(self, point, ctx, cache):
        values = [[entry._evaluate_mod(point, ctx, cache) for entry in row] for row in self.rows]
        return determinant(values) % ctx.p

    def expand(self) -> Element:
        return determinant([[entry.expand() for entry in row] for row in self.rows])

    def degree_bound(self) -> int:
        return sum(max(entry.degree_bound() for entry in row) for row in self.rows)


def as_expression(value: 'Expression | Element | Scalar', ring: VarRing | None = None) -> Expression:
    if isinstance(value, Expression):
        return value
    if isinstance(value, (Poly, LocPoly)):
        return Leaf(value)
    if ring is not None and isinstance(value, (int, Fraction, Golden)):
        return Leaf(Poly.constant(ring, value))
    raise TypeError(f'Cannot turn {value!r} into an expression')


def compose(outer: 'Expression | Element', images: Sequence['Expression | Element']) -> Composed:
    return Composed(outer, images)
