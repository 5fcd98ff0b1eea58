"""Products of reflection forms, their star versions, and quotient forms of equivariant maps."""

from collections.abc import Sequence
from functools import lru_cache

from coxinv.algebra.expr import Product
from coxinv.algebra.golden import ONE, Golden
from coxinv.algebra.matrix import Matrix
from coxinv.algebra.parse import golden_list
from coxinv.algebra.poly import DivisibilityFailure, Poly, poly_div_exact
from coxinv.coxeter.generators import GeneratorSet, GroupType, generators
from coxinv.coxeter.groups import Reflection, enumerate_group, find_reflections, normalize_form
from coxinv.invariants.basic import U3, U4
from coxinv.invariants.equivariant import EquivariantMap
from coxinv.models import VerifyReport

_FORM_FILES = {GroupType.H3: 'forms_h3', GroupType.H4: 'forms_h4'}


@lru_cache(maxsize=None)
def reference_forms(group_type: GroupType) -> tuple[Poly, ...]:
    """The transcribed reflection forms, in the ring `u1 .. un`, with their printed scaling."""
    ring = U3 if group_type == GroupType.H3 else U4
    forms = golden_list(_FORM_FILES[group_type])
    return tuple(form.to_ring(ring) for form in forms)  # type: ignore[union-attr]


def form_coefficients(form: Poly) -> list[Golden]:
    arity = form.ring.arity
    return [
        form.coefficient(tuple(1 if k == position else 0 for k in range(arity)))
        for position in range(arity)
    ]


def scaled_like(reflections: Sequence[Reflection], reference: Sequence[Poly]) -> list[Poly]:
    """The reflection forms, each replaced by the reference form defining the same hyperplane.

    Raises:
        ValueError: a reflection has no counterpart in `reference`.
    """
    by_normal = {str(normalize_form(form)): form for form in reference}
    scaled = []
    for reflection in reflections:
        key = str(reflection.form)
        if key not in by_normal:
            raise ValueError(f'No reference form defines the hyperplane {key} = 0')
        scaled.append(by_normal[key])
    return scaled


def discriminant_expression(forms: Sequence[Poly]) -> Product:
    """The product of the forms kept unexpanded, for evaluation at points."""
    return Product([(form, 1) for form in forms])


def star_forms(forms: Sequence[Poly]) -> list[Poly]:
    return [form.conj() for form in forms]


def permutation_character(forms: Sequence[Poly], matrix: Matrix) -> Golden | None:
    """The factor `c` with `prod(forms)(u * matrix) = c * prod(forms)(u)`.

    Each form is moved by the matrix and matched, up to a scalar, with a form of the list. The
    factor is the product of these scalars; `None` means the list is not permuted.
    """
    by_normal = {str(normalize_form(form)): form for form in forms}
    seen = set()
    factor = ONE
    for form in forms:
        coefficients = form_coefficients(form)
        moved = matrix.act_column(coefficients)
        image = Poly.linear_form(form.ring, moved)
        key = str(normalize_form(image))
        target = by_normal.get(key)
        if target is None or key in seen:
            return None
        seen.add(key)
        target_coefficients = form_coefficients(target)
        position = next(k for k, value in enumerate(target_coefficients) if value)
        factor = factor * moved[position] / target_coefficients[position]
    return factor


def check_anti_invariance_by_forms(
    forms: Sequence[Poly], g: GeneratorSet, name: str = 'D'
) -> VerifyReport:
    """Anti-invariance of a product of linear forms without expanding it."""
    report = VerifyReport(suite=f'anti-invariance of {name}')
    for index, generator in enumerate(g.gens):
        factor = permutation_character(forms, generator)
        expected = generator.det()
        report.add_check(
            f'{g.label()}: {name}(u s{index + 1}) = det(s{index + 1}) * {name}(u)',
            factor == expected,
            'the forms are not permuted' if factor is None else f'factor {factor}',
        )
    return report


def quotient_forms(p: EquivariantMap, forms: Sequence[Poly]) -> list[Poly | DivisibilityFailure]:
    """`star(l)(P(u)) / l(u)` for every form `l`; a failure marks a form that does not divide."""
    return [poly_div_exact(form.conj().substitute(list(p.components)), form) for form in forms]


@lru_cache(maxsize=None)
def reflection_forms(group_type: GroupType) -> tuple[Poly, ...]:
    """Forms of the reflections found by enumerating the plain group, scaled like the reference."""
    ring = U3 if group_type == GroupType.H3 else U4
    reflections = find_reflections(enumerate_group(generators(group_type)), ring)
    return tuple(scaled_like(reflections, reference_forms(group_type)))
