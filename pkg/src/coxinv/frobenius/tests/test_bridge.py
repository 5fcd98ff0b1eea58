from fractions import Fraction

import pytest

from coxinv.algebra.parse import parse_expression
from coxinv.algebra.poly import Poly
from coxinv.coxeter.generators import GroupType, generators
from coxinv.frobenius.bridge import (
    BRIDGE_RING,
    eliminate_t2,
    star_in_flat,
    star_y,
    tie_parameters,
    y_coordinates,
)
from coxinv.frobenius.prepotentials import H3PRIME_RING, PrepotentialName, prepotential
from coxinv.invariants.basic import U3, basic_invariants_h3
from coxinv.invariants.equivariant import acted


@pytest.mark.parametrize('index', [0, 1, 2])
def test_y_coordinates_are_invariant(index: int):
    # GIVEN
    y = y_coordinates()[index]
    # WHEN/THEN
    for generator in generators(GroupType.H3).gens:
        assert y.substitute(acted(U3, generator)) == y


def test_y1_is_half_of_i1():
    # THEN
    assert y_coordinates()[0].scale(2) == basic_invariants_h3()['I1']


def test_star_y():
    # GIVEN
    t1, t3, z = (Poly.variable(BRIDGE_RING, name) for name in ('t1', 't3', 'z'))
    # WHEN
    ys = star_y({'xs1': t1.scale(2), 'xs2': t3.scale(20), 'xs3': z})
    # THEN
    assert ys['ys1'] == t1
    assert ys['ys2'] == t3
    assert ys['ys3'] == (z.scale(10) + t1**5 * 32).scale(Fraction(1, 800))


def test_tie_parameters():
    # GIVEN
    c0 = Poly.variable(BRIDGE_RING, 'c0')
    m = Poly.variable(BRIDGE_RING, 'm')
    # WHEN
    tied = tie_parameters(c0 * m)
    # THEN
    assert tied == (m**4).scale(Fraction(40, 3))


def test_eliminate_t2():
    # GIVEN
    elimination = prepotential(PrepotentialName.H3PRIME).elimination
    assert elimination is not None
    t2 = Poly.variable(elimination.full_ring, 't2')
    # WHEN
    reduced = eliminate_t2(t2)
    # THEN
    assert reduced == parse_expression('-t1*z-z^4', H3PRIME_RING)


def test_star_flat_coordinates_live_in_the_bridge_ring():
    # WHEN
    xs = star_in_flat()
    # THEN
    assert sorted(xs) == ['xs1', 'xs2', 'xs3']
    assert all(value.ring.compatible(BRIDGE_RING) for value in xs.values())
