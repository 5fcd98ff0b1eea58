"""Exact arithmetic in the real quadratic field Q(sqrt 5)."""

from fractions import Fraction
from typing import Union

from coxinv.exceptions import ZeroDivisorError

Scalar = Union['Golden', Fraction, int]


class Golden:
    """An element `a + b*sqrt(5)` with rational `a` and `b`.

    Instances are immutable. Plain integers and fractions mix freely with `Golden` values in
    arithmetic and comparisons.
    """

    __slots__ = ('a', 'b')

    def __init__(self, a: Fraction | int = 0, b: Fraction | int = 0):
        object.__setattr__(self, 'a', a if isinstance(a, Fraction) else Fraction(a))
        object.__setattr__(self, 'b', b if isinstance(b, Fraction) else Fraction(b))

    def __setattr__(self, key, value):
        raise AttributeError('Golden values are immutable')

    def __reduce__(self):
        return Golden, (self.a, self.b)

    def __copy__(self) -> 'Golden':
        return self

    def __deepcopy__(self, memo) -> 'Golden':
        return self

    @classmethod
    def of(cls, value: Scalar) -> 'Golden':
        """Coerces an integer, a fraction or a `Golden` into a `Golden`."""
        if isinstance(value, Golden):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f'Cannot interpret {value!r} as an element of Q(sqrt 5)')

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def is_rational(self) -> bool:
        return not self.b

    def conj(self) -> 'Golden':
        """The Galois conjugate `a - b*sqrt(5)`."""
        return Golden(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> 'Golden':
        norm = self.norm()
        if not norm:
            raise ZeroDivisorError('Zero has no inverse in Q(sqrt 5)')
        return Golden(self.a / norm, -self.b / norm)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> 'Golden':
        return Golden(-self.a, -self.b)

    def __pos__(self) -> 'Golden':
        return self

    def __add__(self, other: Scalar) -> 'Golden':
        if isinstance(other, Golden):
            return Golden(self.a + other.a, self.b + other.b)
        if isinstance(other, (int, Fraction)):
            return Golden(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> 'Golden':
        if isinstance(other, Golden):
            return Golden(self.a - other.a, self.b - other.b)
        if isinstance(other, (int, Fraction)):
            return Golden(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other: Scalar) -> 'Golden':
        return (-self).__add__(other)

    def __mul__(self, other: Scalar) -> 'Golden':
        if isinstance(other, Golden):
            a, b, c, d = self.a, self.b, other.a, other.b
            if not b and not d:
                return Golden(a * c)
            return Golden(a * c + 5 * b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return Golden(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> 'Golden':
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisorError('Division by zero in Q(sqrt 5)')
            return Golden(self.a / other, self.b / other)
        if isinstance(other, Golden):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other: Scalar) -> 'Golden':
        return Golden.of(other) * self.inverse()

    def __pow__(self, exponent: int) -> 'Golden':
        if exponent < 0:
            return self.inverse() ** -exponent
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Golden):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        return f'Golden({self.a}, {self.b})'

    def __str__(self) -> str:
        from coxinv.algebra.format import format_golden

        return format_golden(self)


ZERO = Golden(0)
ONE = Golden(1)
SQRT5 = Golden(0, 1)
PHI = Golden(Fraction(1, 2), Fraction(1, 2))
"""The golden ratio `a = (1 + sqrt 5) / 2`."""
PHI_BAR = Golden(Fraction(1, 2), Fraction(-1, 2))
"""The conjugate `abar = (1 - sqrt 5) / 2`."""
