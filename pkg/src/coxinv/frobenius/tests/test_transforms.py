import pytest

from coxinv.algebra.poly import Poly
from coxinv.algebra.rings import VarRing
from coxinv.frobenius.transforms import (
    Y_W0_BOUNDS,
    CoordMap,
    check_composition,
    check_identity_map,
    cleared_y_in_t,
    coord_map,
    roundtrip_maps,
    weight_map_inverse_check,
    y_in_t,
)
from coxinv.models import SuiteSpec


@pytest.fixture
def ab_ring() -> VarRing:
    return VarRing.of('a1', 'a2')


@pytest.fixture
def shear(ab_ring: VarRing) -> CoordMap:
    a1, a2 = Poly.variables(ab_ring)
    return CoordMap('shear', ab_ring, ('a1', 'a2'), (a1 + a2**2, a2))


@pytest.fixture
def unshear(ab_ring: VarRing) -> CoordMap:
    a1, a2 = Poly.variables(ab_ring)
    return CoordMap('unshear', ab_ring, ('a1', 'a2'), (a1 - a2**2, a2))


def test_pull_back(shear: CoordMap, ab_ring: VarRing):
    # GIVEN
    a1, a2 = Poly.variables(ab_ring)
    # WHEN
    result = shear.pull_back(a1 * a2)
    # THEN
    assert result == a1 * a2 + a2**3


def test_inverse_maps_compose_to_the_identity(shear: CoordMap, unshear: CoordMap):
    # WHEN
    report = check_identity_map(shear.then(unshear), 'shear round trip')
    # THEN
    assert report.passed
    assert len(report.checks) == 2


def test_a_map_that_is_not_an_inverse(shear: CoordMap):
    # WHEN
    report = check_identity_map(shear.then(shear), 'double shear')
    # THEN
    assert not report.passed


def test_composition(shear: CoordMap, ab_ring: VarRing):
    # GIVEN
    a1, a2 = Poly.variables(ab_ring)
    twice = CoordMap('twice', ab_ring, ('a1', 'a2'), (a1 + a2**2 * 2, a2))
    # WHEN
    report = check_composition(shear, shear, twice)
    # THEN
    assert report.passed


def test_unknown_variables_are_rejected(shear: CoordMap):
    # GIVEN
    other = Poly.variable(VarRing.of('b'), 'b')
    # WHEN/THEN
    with pytest.raises(KeyError):
        shear.pull_back(other)


def test_weight_map_and_its_inverse():
    # WHEN
    report = weight_map_inverse_check()
    # THEN
    assert report.passed, report.failures()


def test_packaged_maps_name_their_targets():
    # WHEN
    t_of_z = coord_map('map_t_z_h4')
    z_of_t = coord_map('map_z_t_h4')
    # THEN
    assert set(z_of_t.target_names) == {'Z2', 'Z12', 'Z20', 'Z30'}
    assert set(t_of_z.target_names) == {'t1', 't2', 't4', 'w0'}


def test_y2_needs_no_power_of_w0():
    # WHEN
    value = y_in_t(2)
    # THEN
    assert Y_W0_BOUNDS[2] == 0
    assert value.is_polynomial()
    assert cleared_y_in_t(2) == value.as_poly()


@pytest.mark.slow
def test_roundtrip_between_invariants_and_working_coordinates():
    # WHEN
    report = roundtrip_maps()
    # THEN
    assert report.passed, report.failures()


@pytest.mark.slow
@pytest.mark.parametrize('weight', [12, 20, 30])
def test_w0_bounds_clear_the_denominators(weight: int):
    # WHEN
    result = cleared_y_in_t(weight)
    # THEN
    assert result is not None


@pytest.mark.slow
def test_transforms_suite(modular_spec: SuiteSpec):
    from coxinv.frobenius.suites import transforms_suite

    # WHEN
    report = transforms_suite(modular_spec)
    # THEN
    assert report.passed, report.failures()
