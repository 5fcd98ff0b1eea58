"""Canonical text and JSON renderings of field elements and polynomials.

The text form is whitespace-free: terms in graded lexicographic order (descending), `r5` for the
square root of 5, monomials as `x^e*y` with unit exponents elided. Golden files are stored in this
form and `coxinv.algebra.parse` reads it back.
"""

from fractions import Fraction
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from coxinv.algebra.golden import Golden
    from coxinv.algebra.locpoly import LocPoly
    from coxinv.algebra.poly import Exponent, Poly
    from coxinv.algebra.rings import VarRing


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def format_golden(value: 'Golden') -> str:
    a, b = value.a, value.b
    if not b:
        return format_rational(a)
    if b == 1:
        irrational = 'r5'
    elif b == -1:
        irrational = '-r5'
    else:
        irrational = f'{format_rational(b)}*r5'
    if not a:
        return irrational
    if irrational.startswith('-'):
        return f'{format_rational(a)}{irrational}'
    return f'{format_rational(a)}+{irrational}'


def format_monomial(ring: 'VarRing', exponent: 'Exponent') -> str:
    factors = []
    for name, e in zip(ring.names, exponent):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f'{name}^{e}')
    return '*'.join(factors)


def _format_term(coefficient: 'Golden', monomial: str) -> str:
    if not monomial:
        text = format_golden(coefficient)
        if coefficient.a and coefficient.b:
            return f'({text})'
        return text
    if coefficient == 1:
        return monomial
    if coefficient == -1:
        return f'-{monomial}'
    if coefficient.a and coefficient.b:
        return f'({format_golden(coefficient)})*{monomial}'
    return f'{format_golden(coefficient)}*{monomial}'


def format_poly(poly: 'Poly') -> str:
    """The canonical text of a polynomial; `0` for the zero polynomial."""
    if poly.is_zero():
        return '0'
    pieces = []
    for exponent, coefficient in poly.sorted_terms():
        term = _format_term(coefficient, format_monomial(poly.ring, exponent))
        if pieces and not term.startswith('-'):
            pieces.append('+')
        pieces.append(term)
    return ''.join(pieces)


def _wrapped(poly: 'Poly') -> str:
    text = format_poly(poly)
    if len(poly) == 1 and not text.startswith('('):
        return text
    return f'({text})'


def format_locpoly(value: 'LocPoly') -> str:
    """`(numerator)/(b1^e1*b2^e2)`; a bare polynomial when no denominator remains."""
    factors = []
    for base, e in zip(value.basis, value.exps):
        if e == 1:
            factors.append(_wrapped(base))
        elif e:
            factors.append(f'{_wrapped(base)}^{e}')
    if not factors:
        return format_poly(value.numerator)
    return f'({format_poly(value.numerator)})/({"*".join(factors)})'


def poly_to_json(poly: 'Poly') -> dict[str, Any]:
    return {
        'ring': list(poly.ring.names),
        'terms': [
            {
                'exp': list(exponent),
                'a': format_rational(coefficient.a),
                'b': format_rational(coefficient.b),
            }
            for exponent, coefficient in poly.sorted_terms()
        ],
    }


def locpoly_to_json(value: 'LocPoly') -> dict[str, Any]:
    return {
        'numerator': poly_to_json(value.numerator),
        'denominators': [
            {'base': poly_to_json(base), 'exp': e} for base, e in zip(value.basis, value.exps)
        ],
    }
