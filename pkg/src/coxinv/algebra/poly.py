"""Sparse multivariate polynomials over Q(sqrt 5).

Terms are kept in a dictionary from exponent tuples to non-zero `Golden` coefficients. Products go
through an integer representation: every coefficient is written as `(x + y*sqrt 5) / den` over one
common denominator and every exponent tuple is packed into a single integer, so the inner loop only
touches Python integers.
"""

from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
import heapq
from math import lcm
from typing import TYPE_CHECKING, Any

from coxinv.algebra.golden import ONE, ZERO, Golden, Scalar
from coxinv.algebra.rings import VarRing
from coxinv.exceptions import ArityError, RingMismatchError, ZeroDivisorError

if TYPE_CHECKING:
    from coxinv.algebra.modular import ModCtx

Exponent = tuple[int, ...]

_BITS = 24
_MASK = (1 << _BITS) - 1


def _pack(exponent: Exponent) -> int:
    packed = 0
    for position, e in enumerate(exponent):
        packed |= e << (_BITS * position)
    return packed


def _unpack(packed: int, arity: int) -> Exponent:
    return tuple((packed >> (_BITS * position)) & _MASK for position in range(arity))


def term_order_key(exponent: Exponent) -> tuple[int, Exponent]:
    """Graded lexicographic key; larger keys come first in canonical order."""
    return sum(exponent), exponent


class Poly:
    """A polynomial in the variables of `ring` with coefficients in Q(sqrt 5).

    Polynomials are treated as immutable values: no method modifies `terms` in place.
    """

    __slots__ = ('ring', 'terms', '_int_form', '_mod_cache')

    def __init__(
        self,
        ring: VarRing,
        terms: Mapping[Exponent, Scalar] | None = None,
        *,
        trusted: bool = False,
    ):
        self.ring = ring
        self._int_form: tuple[int, list[tuple[int, int, int]]] | None = None
        self._mod_cache: dict[tuple[int, int], list[tuple[Exponent, int]]] = {}
        if not terms:
            self.terms: dict[Exponent, Golden] = {}
        elif trusted:
            self.terms = dict(terms)  # type: ignore[arg-type]
        else:
            cleaned: dict[Exponent, Golden] = {}
            for exponent, coefficient in terms.items():
                exponent = tuple(exponent)
                if len(exponent) != ring.arity:
                    raise ArityError(
                        f'Exponent {exponent} does not fit the ring {ring}',
                        extra={'exponent': exponent, 'ring': list(ring.names)},
                    )
                value = Golden.of(coefficient)
                if value:
                    cleaned[exponent] = value
            self.terms = cleaned

    # -- construction --

    @classmethod
    def zero(cls, ring: VarRing) -> 'Poly':
        return cls(ring)

    @classmethod
    def constant(cls, ring: VarRing, value: Scalar) -> 'Poly':
        return cls(ring, {(0,) * ring.arity: value})

    @classmethod
    def monomial(cls, ring: VarRing, exponent: Exponent, coefficient: Scalar = 1) -> 'Poly':
        return cls(ring, {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, ring: VarRing, name: str) -> 'Poly':
        exponent = [0] * ring.arity
        exponent[ring.index(name)] = 1
        return cls(ring, {tuple(exponent): ONE}, trusted=True)

    @classmethod
    def variables(cls, ring: VarRing) -> tuple['Poly', ...]:
        return tuple(cls.variable(ring, name) for name in ring.names)

    @classmethod
    def linear_form(cls, ring: VarRing, coefficients: Sequence[Scalar]) -> 'Poly':
        terms = {}
        for position, coefficient in enumerate(coefficients):
            exponent = [0] * ring.arity
            exponent[position] = 1
            terms[tuple(exponent)] = coefficient
        return cls(ring, terms)

    # -- inspection --

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Golden:
        """The value of a constant polynomial; raises `ValueError` for non-constants."""
        if not self.terms:
            return ZERO
        if not self.is_constant():
            raise ValueError('The polynomial is not constant')
        return next(iter(self.terms.values()))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exponent: Exponent) -> Golden:
        return self.terms.get(tuple(exponent), ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def involves(self, name: str) -> bool:
        position = self.ring.index(name)
        return any(e[position] for e in self.terms)

    def sorted_terms(self) -> list[tuple[Exponent, Golden]]:
        """Terms in canonical order: graded lexicographic, descending."""
        return sorted(self.terms.items(), key=lambda item: term_order_key(item[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, Golden]:
        if not self.terms:
            raise ValueError('The zero polynomial has no leading term')
        exponent = max(self.terms, key=term_order_key)
        return exponent, self.terms[exponent]

    # -- arithmetic --

    def _check_ring(self, other: 'Poly') -> None:
        if not self.ring.compatible(other.ring):
            raise RingMismatchError(
                f'Ring mismatch: [{self.ring}] versus [{other.ring}]',
                extra={'left': list(self.ring.names), 'right': list(other.ring.names)},
            )

    def _coerce(self, other: Any) -> 'Poly | None':
        if isinstance(other, Poly):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction, Golden)):
            return Poly.constant(self.ring, other)
        return None

    def __add__(self, other) -> 'Poly':
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        if not other_poly.terms:
            return self
        if not self.terms:
            return Poly(self.ring, other_poly.terms, trusted=True)
        terms = dict(self.terms)
        for exponent, coefficient in other_poly.terms.items():
            value = terms.get(exponent)
            if value is None:
                terms[exponent] = coefficient
            else:
                value = value + coefficient
                if value:
                    terms[exponent] = value
                else:
                    del terms[exponent]
        return Poly(self.ring, terms, trusted=True)

    __radd__ = __add__

    def __neg__(self) -> 'Poly':
        return Poly(self.ring, {e: -c for e, c in self.terms.items()}, trusted=True)

    def __sub__(self, other) -> 'Poly':
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other) -> 'Poly':
        return (-self) + other

    def scale(self, factor: Scalar) -> 'Poly':
        factor = Golden.of(factor)
        if not factor:
            return Poly(self.ring)
        if factor == ONE:
            return self
        return Poly(self.ring, {e: c * factor for e, c in self.terms.items()}, trusted=True)

    def integer_form(self) -> tuple[int, list[tuple[int, int, int]]]:
        """Returns `(den, [(packed exponent, x, y), ...])` with coefficient `(x + y*sqrt 5) / den`."""
        if self._int_form is None:
            den = 1
            for coefficient in self.terms.values():
                den = lcm(den, coefficient.a.denominator, coefficient.b.denominator)
            items = []
            for exponent, coefficient in self.terms.items():
                x = coefficient.a.numerator * (den // coefficient.a.denominator)
                y = coefficient.b.numerator * (den // coefficient.b.denominator)
                items.append((_pack(exponent), x, y))
            self._int_form = (den, items)
        return self._int_form

    def __mul__(self, other) -> 'Poly':
        if isinstance(other, (int, Fraction, Golden)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        if not self.terms or not other.terms:
            return Poly(self.ring)
        den_left, left = self.integer_form()
        den_right, right = other.integer_form()
        acc_x: dict[int, int] = {}
        if all(not y for _, _, y in left) and all(not y for _, _, y in right):
            get = acc_x.get
            for key_left, x_left, _ in left:
                for key_right, x_right, _ in right:
                    key = key_left + key_right
                    acc_x[key] = get(key, 0) + x_left * x_right
            acc_y: dict[int, int] = {}
        else:
            acc_y = {}
            get_x = acc_x.get
            get_y = acc_y.get
            for key_left, x_left, y_left in left:
                for key_right, x_right, y_right in right:
                    key = key_left + key_right
                    acc_x[key] = get_x(key, 0) + x_left * x_right + 5 * y_left * y_right
                    acc_y[key] = get_y(key, 0) + x_left * y_right + y_left * x_right
        den = den_left * den_right
        arity = self.ring.arity
        terms: dict[Exponent, Golden] = {}
        for key, x in acc_x.items():
            y = acc_y.get(key, 0)
            if x or y:
                terms[_unpack(key, arity)] = Golden(Fraction(x, den), Fraction(y, den))
        return Poly(self.ring, terms, trusted=True)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Poly':
        if exponent < 0:
            raise ValueError('Negative powers of polynomials are not polynomials')
        result = Poly.constant(self.ring, ONE)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring.compatible(other.ring) and self.terms == other.terms
        if isinstance(other, (int, Fraction, Golden)):
            return self.terms == Poly.constant(self.ring, other).terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def conj(self) -> 'Poly':
        """Applies the Galois conjugation `sqrt 5 -> -sqrt 5` to every coefficient."""
        return Poly(self.ring, {e: c.conj() for e, c in self.terms.items()}, trusted=True)

    def diff(self, name: str) -> 'Poly':
        position = self.ring.index(name)
        terms: dict[Exponent, Golden] = {}
        for exponent, coefficient in self.terms.items():
            power = exponent[position]
            if power:
                lowered = exponent[:position] + (power - 1,) + exponent[position + 1 :]
                terms[lowered] = coefficient * power
        return Poly(self.ring, terms, trusted=True)

    # -- evaluation --

    def evaluate(self, point: Sequence[Scalar]) -> Golden:
        """Exact value at a point of Q(sqrt 5)^n."""
        if len(point) != self.ring.arity:
            raise ArityError(f'Expected {self.ring.arity} coordinates, got {len(point)}')
        if not self.terms:
            return ZERO
        if all(isinstance(v, int) for v in point):
            return self._evaluate_integer(point)  # type: ignore[arg-type]
        values = [Golden.of(v) for v in point]
        powers = _power_tables(values, self._max_exponents(), ONE)
        total = ZERO
        for exponent, coefficient in self.terms.items():
            monomial = coefficient
            for position, e in enumerate(exponent):
                if e:
                    monomial = monomial * powers[position][e]
            total = total + monomial
        return total

    def _evaluate_integer(self, point: Sequence[int]) -> Golden:
        den, items = self.integer_form()
        arity = self.ring.arity
        powers = _power_tables(list(point), self._max_exponents(), 1)
        total_x = 0
        total_y = 0
        for key, x, y in items:
            value = 1
            for position in range(arity):
                e = (key >> (_BITS * position)) & _MASK
                if e:
                    value *= powers[position][e]
            total_x += x * value
            total_y += y * value
        return Golden(Fraction(total_x, den), Fraction(total_y, den))

    def evaluate_mod(self, point: Sequence[int], ctx: 'ModCtx') -> int:
        """Image of the polynomial at a point of F_p^n."""
        if len(point) != self.ring.arity:
            raise ArityError(f'Expected {self.ring.arity} coordinates, got {len(point)}')
        p = ctx.p
        cache_key = (p, ctx.sqrt5)
        reduced = self._mod_cache.get(cache_key)
        if reduced is None:
            den, items = self.integer_form()
            inverse = ctx.inverse(den)
            arity = self.ring.arity
            reduced = [
                (_unpack(key, arity), (x + y * ctx.sqrt5) * inverse % p) for key, x, y in items
            ]
            reduced = self._mod_cache.setdefault(cache_key, reduced)
        powers = _power_tables_mod(point, self._max_exponents(), p)
        total = 0
        for exponent, coefficient in reduced:
            value = coefficient
            for position, e in enumerate(exponent):
                if e:
                    value = value * powers[position][e] % p
            total += value
        return total % p

    def _max_exponents(self) -> list[int]:
        maxima = [0] * self.ring.arity
        for exponent in self.terms:
            for position, e in enumerate(exponent):
                if e > maxima[position]:
                    maxima[position] = e
        return maxima

    # -- composition --

    def substitute(self, images: Sequence['Poly']) -> 'Poly':
        """Composes the polynomial with one polynomial image per variable."""
        if len(images) != self.ring.arity:
            raise ArityError(
                f'Expected {self.ring.arity} images, got {len(images)}',
                extra={'ring': list(self.ring.names)},
            )
        if not images:
            return self
        target = images[0].ring
        for image in images[1:]:
            if not image.ring.compatible(target):
                raise RingMismatchError('All images must share one ring')
        return horner_substitute(self, images, lambda value: Poly.constant(target, value))

    def to_ring(self, ring: VarRing, rename: Mapping[str, str] | None = None) -> 'Poly':
        """Re-expresses the polynomial in `ring`, matching variables by (optionally renamed) name.

        Variables missing from `ring` may be dropped as long as no term involves them.
        """
        rename = rename or {}
        used = [any(exponent[k] for exponent in self.terms) for k in range(self.ring.arity)]
        positions = [
            ring.index(rename.get(name, name)) if in_use else -1
            for name, in_use in zip(self.ring.names, used)
        ]
        terms: dict[Exponent, Golden] = {}
        for exponent, coefficient in self.terms.items():
            target = [0] * ring.arity
            for source_position, e in enumerate(exponent):
                if e:
                    target[positions[source_position]] += e
            terms[tuple(target)] = coefficient
        return Poly(ring, terms, trusted=True)

    def specialize(self, values: Mapping[str, Scalar]) -> 'Poly':
        """Substitutes constants for some variables, keeping the ring."""
        fixed = {self.ring.index(name): Golden.of(value) for name, value in values.items()}
        terms: dict[Exponent, Golden] = {}
        for exponent, coefficient in self.terms.items():
            value = coefficient
            reduced = list(exponent)
            for position, constant in fixed.items():
                if reduced[position]:
                    value = value * constant ** reduced[position]
                    reduced[position] = 0
            key = tuple(reduced)
            total = terms.get(key, ZERO) + value
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return Poly(self.ring, terms, trusted=True)

    def __repr__(self) -> str:
        return f'Poly([{self.ring}], {len(self.terms)} terms)'

    def __str__(self) -> str:
        from coxinv.algebra.format import format_poly

        return format_poly(self)


def _power_tables(values: Sequence[Any], maxima: Sequence[int], one: Any) -> list[list[Any]]:
    tables = []
    for value, top in zip(values, maxima):
        table = [one]
        for _ in range(top):
            table.append(table[-1] * value)
        tables.append(table)
    return tables


def _power_tables_mod(values: Sequence[int], maxima: Sequence[int], p: int) -> list[list[int]]:
    tables = []
    for value, top in zip(values, maxima):
        value %= p
        table = [1]
        for _ in range(top):
            table.append(table[-1] * value % p)
        tables.append(table)
    return tables


def horner_substitute(f: Poly, images: Sequence[Any], lift: Callable[[Golden], Any]) -> Any:
    """Composes `f` with `images` by Horner's rule, one variable at a time.

    `images` may be any ring elements supporting `+`, `*` and `**`; `lift` embeds a coefficient into
    that ring.
    """
    power_cache: dict[tuple[int, int], Any] = {}

    def power(position: int, exponent: int):
        key = (position, exponent)
        if key not in power_cache:
            power_cache[key] = images[position] ** exponent
        return power_cache[key]

    def compose(terms: list[tuple[Exponent, Golden]], position: int):
        if position == len(images):
            total = ZERO
            for _, coefficient in terms:
                total = total + coefficient
            return lift(total)
        groups: dict[int, list[tuple[Exponent, Golden]]] = {}
        for exponent, coefficient in terms:
            groups.setdefault(exponent[position], []).append((exponent, coefficient))
        degrees = sorted(groups, reverse=True)
        accumulator = None
        for index, degree in enumerate(degrees):
            inner = compose(groups[degree], position + 1)
            accumulator = inner if accumulator is None else accumulator + inner
            following = degrees[index + 1] if index + 1 < len(degrees) else 0
            gap = degree - following
            if gap:
                accumulator = accumulator * power(position, gap)
        return accumulator

    if not f.terms:
        return lift(ZERO)
    return compose(list(f.terms.items()), 0)


@dataclass(frozen=True)
class DivisibilityFailure:
    """Returned by `poly_div_exact` when the remainder has a term the divisor cannot cancel."""

    obstruction: Exponent
    coefficient: Golden

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class NotHomogeneous:
    """Two terms of different weighted degree."""

    first: Exponent
    second: Exponent


class AnyDegree:
    """The weighted degree of the zero polynomial: it is homogeneous of every degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'ANY_DEGREE'


ANY_DEGREE = AnyDegree()


def poly_div_exact(f: Poly, g: Poly) -> Poly | DivisibilityFailure:
    """Exact quotient `f / g`, or the first obstructing remainder term."""
    f._check_ring(g)
    if g.is_zero():
        raise ZeroDivisorError('Division by the zero polynomial')
    lead_exponent, lead_coefficient = g.leading_term()
    lead_inverse = lead_coefficient.inverse()
    divisor = list(g.terms.items())
    remainder = dict(f.terms)
    heap = [(_heap_key(e), e) for e in remainder]
    heapq.heapify(heap)
    quotient: dict[Exponent, Golden] = {}
    while heap:
        _, exponent = heapq.heappop(heap)
        coefficient = remainder.get(exponent)
        if coefficient is None:
            continue
        shift = tuple(a - b for a, b in zip(exponent, lead_exponent))
        if any(s < 0 for s in shift):
            return DivisibilityFailure(exponent, coefficient)
        factor = coefficient * lead_inverse
        quotient[shift] = factor
        for divisor_exponent, divisor_coefficient in divisor:
            target = tuple(a + b for a, b in zip(shift, divisor_exponent))
            current = remainder.get(target)
            if current is None:
                remainder[target] = -(factor * divisor_coefficient)
                heapq.heappush(heap, (_heap_key(target), target))
            else:
                value = current - factor * divisor_coefficient
                if value:
                    remainder[target] = value
                else:
                    del remainder[target]
    return Poly(f.ring, quotient, trusted=True)


def _heap_key(exponent: Exponent) -> tuple[int, tuple[int, ...]]:
    return -sum(exponent), tuple(-e for e in exponent)


def weighted_degree(f: Poly) -> Fraction | NotHomogeneous | AnyDegree:
    """Common weighted degree of all terms of `f`, using the weights of its ring."""
    if f.ring.weights is None:
        raise ValueError(f'The ring [{f.ring}] carries no weights')
    if not f.terms:
        return ANY_DEGREE
    weights = f.ring.weights
    first_exponent = None
    first_degree = None
    for exponent in sorted(f.terms, key=term_order_key, reverse=True):
        degree = sum((w * e for w, e in zip(weights, exponent)), Fraction(0))
        if first_degree is None:
            first_exponent, first_degree = exponent, degree
        elif degree != first_degree:
            return NotHomogeneous(first_exponent, exponent)  # type: ignore[arg-type]
    return first_degree  # type: ignore[return-value]


def jacobian_det(fs: Sequence[Poly], names: Sequence[str]) -> Poly:
    """Determinant of the matrix of partial derivatives `d fs[i] / d names[j]`."""
    from coxinv.algebra.linalg import determinant

    if len(fs) != len(names) or not fs or len(fs) > 4:
        raise ArityError(
            f'A Jacobian needs as many functions as variables (at most 4): {len(fs)} vs {len(names)}'
        )
    rows = [[f.diff(name) for name in names] for f in fs]
    return determinant(rows)


def product(factors: Iterable[Poly], ring: VarRing) -> Poly:
    """Balanced product of many polynomials, keeping intermediate operands of similar size."""
    items = list(factors)
    if not items:
        return Poly.constant(ring, ONE)
    while len(items) > 1:
        paired = [items[i] * items[i + 1] for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            paired.append(items[-1])
        items = paired
    return items[0]
