"""Reduction of Q(sqrt 5) into prime fields and the seeded point generator used for identity testing.

The three primes are fixed 62-bit primes congruent to 11 modulo 20, so 5 is a quadratic residue and
the field embeds. The generator is xorshift64 with shifts (13, 7, 17), seeded through splitmix64.
Every sample point owns a stream derived from `(seed, prime index, point index, attempt)`, which
keeps the chosen points independent of evaluation order.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import isprime
from sympy.ntheory import sqrt_mod

from coxinv.algebra.golden import Golden
from coxinv.exceptions import BadPointError

PRIMES: tuple[int, ...] = (
    4611686018427387751,
    4611686018427387631,
    4611686018427387271,
)

MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(value: int) -> int:
    z = (value + _GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, *path: int) -> int:
    state = splitmix64(seed & MASK64)
    for step in path:
        state = splitmix64(state ^ (step & MASK64))
    return state


class XorShift64:
    """64-bit xorshift generator with shifts (13, 7, 17)."""

    def __init__(self, seed: int):
        state = splitmix64(seed & MASK64)
        self.state = state or _GOLDEN_GAMMA

    def next(self) -> int:
        x = self.state
        x ^= (x << 13) & MASK64
        x ^= x >> 7
        x ^= (x << 17) & MASK64
        self.state = x
        return x

    def residue(self, p: int) -> int:
        """Uniform value in [0, p) by rejection on 62-bit draws; requires p <= 2^62."""
        while True:
            candidate = self.next() >> 2
            if candidate < p:
                return candidate

    def small_int(self, low: int = -9, high: int = 9) -> int:
        return low + self.next() % (high - low + 1)


def point_stream(seed: int, prime_index: int, point_index: int, attempt: int = 0) -> XorShift64:
    return XorShift64(derive_seed(seed, prime_index, point_index, attempt))


@dataclass(frozen=True)
class ModCtx:
    """A prime field F_p together with the chosen square root of 5."""

    p: int
    sqrt5: int
    seed: int = 0

    @classmethod
    def for_prime(cls, p: int, seed: int = 0) -> 'ModCtx':
        if not isprime(p):
            raise ValueError(f'{p} is not prime')
        roots = sqrt_mod(5, p, all_roots=True)
        if not roots:
            raise ValueError(f'5 is not a square modulo {p}')
        return cls(p, min(roots), seed)

    def inverse(self, value: int) -> int:
        value %= self.p
        if not value:
            raise BadPointError(f'{value} is not invertible modulo {self.p}', extra={'p': self.p})
        return pow(value, -1, self.p)

    def reduce_rational(self, value: Fraction) -> int:
        return value.numerator * self.inverse(value.denominator) % self.p

    def reduce(self, value: Golden) -> int:
        """The image of `a + b*sqrt 5` in F_p."""
        image = self.reduce_rational(value.a)
        if value.b:
            image += self.reduce_rational(value.b) * self.sqrt5
        return image % self.p


@lru_cache(maxsize=16)
def modular_contexts(seed: int = 0) -> tuple[ModCtx, ...]:
    return tuple(ModCtx.for_prime(p, seed) for p in PRIMES)
