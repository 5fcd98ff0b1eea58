"""Reader for golden files: polynomials transcribed in the canonical text format.

A golden file starts with `#` header lines. `# ring: x1 x2 x3` names the variables and
`# denominators: w0` declares the variables that may appear in denominators. The body is either
one expression, a list with one expression per line, or assignments `NAME = expression` whose
right-hand side may continue on the following lines.

Expressions use `+ - * / ^`, parentheses, rational numbers and the constants `a` (the golden ratio),
`abar` (its conjugate) and `r5` (the square root of 5). Division is only allowed by a non-zero
constant times a monomial in the declared denominator variables.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
import re

from coxinv.algebra.golden import PHI, PHI_BAR, SQRT5, Golden
from coxinv.algebra.locpoly import LocPoly
from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing
from coxinv.exceptions import GoldenFileError

GOLDEN_PACKAGE = 'coxinv.golden'

_CONSTANTS = {'a': PHI, 'abar': PHI_BAR, 'r5': SQRT5}
_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))')
_ASSIGNMENT = re.compile(r'^([A-Za-z_][A-Za-z0-9_]*)\s*=(.*)$')


@dataclass
class GoldenFile:
    name: str
    ring: VarRing
    denominators: tuple[str, ...] = ()
    comments: list[str] = field(default_factory=list)
    body: list[tuple[int, str]] = field(default_factory=list)
    """Non-header lines with their 1-based line numbers."""


@dataclass(frozen=True)
class _Fraction:
    """A polynomial over a monomial in the denominator variables."""

    numerator: Poly
    shift: tuple[int, ...]


class _Parser:
    def __init__(self, text: str, ring: VarRing, denominators: tuple[str, ...], where: str):
        self.ring = ring
        self.where = where
        self.denominator_positions = [ring.index(name) for name in denominators]
        self.tokens: list[tuple[str, str]] = []
        position = 0
        text = text.strip()
        while position < len(text):
            match = _TOKEN.match(text, position)
            if match is None:
                break
            number, name, symbol = match.groups()
            if number is not None:
                self.tokens.append(('num', number))
            elif name is not None:
                self.tokens.append(('name', name))
            else:
                self.tokens.append(('sym', symbol))
            position = match.end()
        self.index = 0

    def fail(self, message: str):
        raise GoldenFileError(f'{self.where}: {message}', extra={'location': self.where})

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        token = self.peek()
        if token is None:
            self.fail('unexpected end of expression')
        self.index += 1
        return token  # type: ignore[return-value]

    def accept(self, symbol: str) -> bool:
        token = self.peek()
        if token is not None and token[0] == 'sym' and token[1] == symbol:
            self.index += 1
            return True
        return False

    def zero_shift(self) -> tuple[int, ...]:
        return (0,) * self.ring.arity

    def parse(self) -> _Fraction:
        value = self.expression()
        if self.peek() is not None:
            self.fail(f'unexpected token {self.peek()[1]!r}')  # type: ignore[index]
        return value

    def expression(self) -> _Fraction:
        value = self.term()
        while True:
            if self.accept('+'):
                value = self.add(value, self.term())
            elif self.accept('-'):
                value = self.add(value, self.negate(self.term()))
            else:
                return value

    def term(self) -> _Fraction:
        value = self.unary()
        while True:
            if self.accept('*'):
                value = self.multiply(value, self.unary())
            elif self.accept('/'):
                value = self.divide(value, self.unary())
            else:
                return value

    def unary(self) -> _Fraction:
        if self.accept('-'):
            return self.negate(self.unary())
        if self.accept('+'):
            return self.unary()
        return self.power()

    def power(self) -> _Fraction:
        base = self.atom()
        if self.accept('^'):
            kind, text = self.take()
            if kind != 'num':
                self.fail(f'exponent must be a non-negative integer, got {text!r}')
            exponent = int(text)
            return _Fraction(base.numerator**exponent, tuple(s * exponent for s in base.shift))
        return base

    def atom(self) -> _Fraction:
        kind, text = self.take()
        if kind == 'num':
            return _Fraction(Poly.constant(self.ring, int(text)), self.zero_shift())
        if kind == 'name':
            if text in _CONSTANTS:
                return _Fraction(Poly.constant(self.ring, _CONSTANTS[text]), self.zero_shift())
            if not self.ring.has(text):
                self.fail(f'unknown variable {text!r}')
            return _Fraction(Poly.variable(self.ring, text), self.zero_shift())
        if text == '(':
            value = self.expression()
            if not self.accept(')'):
                self.fail('missing closing parenthesis')
            return value
        self.fail(f'unexpected symbol {text!r}')
        raise AssertionError  # unreachable

    def negate(self, value: _Fraction) -> _Fraction:
        return _Fraction(-value.numerator, value.shift)

    def multiply(self, left: _Fraction, right: _Fraction) -> _Fraction:
        return _Fraction(
            left.numerator * right.numerator, tuple(a + b for a, b in zip(left.shift, right.shift))
        )

    def add(self, left: _Fraction, right: _Fraction) -> _Fraction:
        common = tuple(max(a, b) for a, b in zip(left.shift, right.shift))
        return _Fraction(
            self.lift(left, common).numerator + self.lift(right, common).numerator, common
        )

    def lift(self, value: _Fraction, shift: tuple[int, ...]) -> _Fraction:
        extra = tuple(t - s for t, s in zip(shift, value.shift))
        if not any(extra):
            return value
        return _Fraction(value.numerator * Poly.monomial(self.ring, extra), shift)

    def divide(self, left: _Fraction, right: _Fraction) -> _Fraction:
        if not right.numerator.is_monomial():
            self.fail('division is only allowed by a constant times a monomial')
        exponent, coefficient = next(iter(right.numerator.terms.items()))
        for position, e in enumerate(exponent):
            if e and position not in self.denominator_positions:
                self.fail(f'{self.ring.names[position]} is not a declared denominator')
        shift = tuple(a + e - b for a, e, b in zip(left.shift, exponent, right.shift))
        numerator = left.numerator.scale(coefficient.inverse())
        # a negative entry means the divisor's own denominator moves into the numerator
        lift = tuple(max(-s, 0) for s in shift)
        if any(lift):
            numerator = numerator * Poly.monomial(self.ring, lift)
        return _Fraction(numerator, tuple(max(s, 0) for s in shift))


def _to_element(value: _Fraction, ring: VarRing, denominators: tuple[str, ...]) -> Poly | LocPoly:
    if not any(value.shift):
        return value.numerator
    basis = [Poly.variable(ring, name) for name in denominators]
    exps = [value.shift[ring.index(name)] for name in denominators]
    normalized = LocPoly(value.numerator, basis, exps).normalize()
    if not any(normalized.exps):
        return normalized.numerator
    return normalized


def parse_expression(
    text: str,
    ring: VarRing,
    denominators: tuple[str, ...] = (),
    where: str = '<expression>',
) -> Poly | LocPoly:
    """Parses one expression; the result is a `Poly` unless a denominator remains."""
    return _to_element(_Parser(text, ring, denominators, where).parse(), ring, denominators)


def parse_golden_text(text: str, name: str = '<text>') -> GoldenFile:
    ring: VarRing | None = None
    denominators: tuple[str, ...] = ()
    comments: list[str] = []
    body: list[tuple[int, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line.strip():
            continue
        if line.startswith('#'):
            content = line[1:].strip()
            if content.startswith('ring:'):
                ring = VarRing(tuple(content[len('ring:') :].split()))
            elif content.startswith('denominators:'):
                denominators = tuple(content[len('denominators:') :].split())
            else:
                comments.append(content)
            continue
        body.append((number, line))
    if ring is None:
        raise GoldenFileError(f'{name}: missing "# ring:" header', extra={'file': name})
    for variable in denominators:
        if not ring.has(variable):
            raise GoldenFileError(
                f'{name}: denominator {variable} is not a ring variable', extra={'file': name}
            )
    return GoldenFile(name, ring, denominators, comments, body)


def load_golden_file(path: Path | str) -> GoldenFile:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise GoldenFileError(f'Unable to read {path}: {e}', extra={'file': str(path)}) from e
    return parse_golden_text(text, path.name)


@lru_cache(maxsize=None)
def read_golden(name: str) -> GoldenFile:
    """Reads a packaged golden file by stem, e.g. `disc_h3`."""
    resource = resources.files(GOLDEN_PACKAGE).joinpath(f'{name}.txt')
    if not resource.is_file():
        raise GoldenFileError(f'No golden file named {name}', extra={'file': name})
    return parse_golden_text(resource.read_text(encoding='utf-8'), f'{name}.txt')


def single_expression(golden: GoldenFile) -> Poly | LocPoly:
    where = f'{golden.name}:{golden.body[0][0]}' if golden.body else golden.name
    text = ' '.join(line for _, line in golden.body)
    if not text:
        raise GoldenFileError(f'{golden.name}: empty body', extra={'file': golden.name})
    return parse_expression(text, golden.ring, golden.denominators, where)


def assignments(golden: GoldenFile) -> dict[str, Poly | LocPoly]:
    entries: list[tuple[str, int, list[str]]] = []
    for number, line in golden.body:
        match = _ASSIGNMENT.match(line)
        if match:
            entries.append((match.group(1), number, [match.group(2)]))
        elif entries:
            entries[-1][2].append(line)
        else:
            raise GoldenFileError(
                f'{golden.name}:{number}: expected an assignment', extra={'file': golden.name}
            )
    result: dict[str, Poly | LocPoly] = {}
    for target, number, lines in entries:
        result[target] = parse_expression(
            ' '.join(lines), golden.ring, golden.denominators, f'{golden.name}:{number}'
        )
    return result


def expression_list(golden: GoldenFile) -> list[Poly | LocPoly]:
    return [
        parse_expression(line, golden.ring, golden.denominators, f'{golden.name}:{number}')
        for number, line in golden.body
    ]


@lru_cache(maxsize=None)
def golden_poly(name: str) -> Poly | LocPoly:
    return single_expression(read_golden(name))


@lru_cache(maxsize=None)
def golden_assignments(name: str) -> dict[str, Poly | LocPoly]:
    return assignments(read_golden(name))


@lru_cache(maxsize=None)
def golden_list(name: str) -> tuple[Poly | LocPoly, ...]:
    return tuple(expression_list(read_golden(name)))


def golden_names() -> list[str]:
    return sorted(
        entry.name[: -len('.txt')]
        for entry in resources.files(GOLDEN_PACKAGE).iterdir()
        if entry.name.endswith('.txt')
    )


def parse_scalar(text: str) -> Golden:
    """Parses a constant such as `-3/2+1/2*r5`."""
    value = parse_expression(text, VarRing(()))
    if not isinstance(value, Poly) or not value.is_constant():
        raise GoldenFileError(f'{text!r} is not a constant')
    return value.constant_value()

