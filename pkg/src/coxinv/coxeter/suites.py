"""The `groups` suite: the four generator sets, their closures, reflections and characters."""

from coxinv.algebra.golden import Golden
from coxinv.coxeter.generators import GroupType, Variant, check_relations, generators
from coxinv.coxeter.groups import (
    character_mismatch,
    enumerate_group,
    find_reflections,
    forms_match,
    lattice_conj,
    lattice_orthogonal,
)
from coxinv.invariants.basic import U3, U4
from coxinv.invariants.discriminant import reference_forms
from coxinv.models import SuiteSpec, VerifyReport

GROUP_ORDERS = {GroupType.H3: 120, GroupType.H4: 14400}
REFLECTION_COUNTS = {GroupType.H3: 15, GroupType.H4: 60}


def groups_suite(spec: SuiteSpec, threads: int = 1) -> VerifyReport:
    report = VerifyReport.for_spec(spec)
    for group_type in (GroupType.H3, GroupType.H4):
        ring = U3 if group_type == GroupType.H3 else U4
        plain = generators(group_type, Variant.PLAIN)
        star = generators(group_type, Variant.STAR)
        tables = {}
        for g in (plain, star):
            report.include(check_relations(g))
            report.add_check(
                f'{g.label()}: every generator has determinant -1',
                all(generator.det() == Golden(-1) for generator in g.gens),
            )
            table = enumerate_group(g)
            tables[g.variant] = table
            expected = GROUP_ORDERS[group_type]
            report.add_check(
                f'{g.label()}: the group has order {expected}',
                table.order == expected,
                f'order {table.order}',
            )
            report.add_check(
                f'{g.label()}: every element is orthogonal',
                all(lattice_orthogonal(key, g.n) for key in table.keys),
            )

        star_keys = tables[Variant.STAR].key_set()
        report.add_check(
            f'{group_type.value}: conjugating the plain group gives the star group',
            all(lattice_conj(key) in star_keys for key in tables[Variant.PLAIN].keys),
        )
        reflections = find_reflections(tables[Variant.PLAIN], ring)
        count = REFLECTION_COUNTS[group_type]
        report.add_check(
            f'{group_type.value}: the group has {count} reflections',
            len(reflections) == count,
            f'{len(reflections)} reflections',
        )
        report.add_check(
            f'{group_type.value}: reflection forms match the printed list up to scalars',
            forms_match([r.form for r in reflections], reference_forms(group_type)),
        )
        report.include(character_mismatch(plain, star))
    return report
