import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ornalat.building import PointedSet, left_segment
from ornalat.exceptions import NotInFiberError, NotTransitiveError, PreconditionError, SpecParseError
from ornalat.lattice import enumerate_lattice
from ornalat.ornament import (
    Ornamentation,
    binary_join,
    binary_meet,
    is_ornamentation,
    join,
    largest_between,
    leq,
    maximum,
    meet,
    minimum,
    ornamentation_from_dict,
    ornamentations_between,
    parse_ornamentation_label,
    principal_embed,
    validate_orn,
)

TAMARI4 = left_segment(4)
TAMARI4_ELEMENTS = enumerate_lattice(TAMARI4).elements


class TestValidation:
    def test_valid(self, tamari3):
        rho = validate_orn(tamari3, [0b111, 0b110, 0b100])
        assert rho == maximum(tamari3)

    def test_not_in_fiber(self, tamari3):
        with pytest.raises(NotInFiberError) as excinfo:
            validate_orn(tamari3, [0b101, 0b010, 0b100])
        assert excinfo.value.point == 0

    def test_not_transitive(self, tamari3):
        with pytest.raises(NotTransitiveError) as excinfo:
            validate_orn(tamari3, [0b011, 0b110, 0b100])
        assert (excinfo.value.point, excinfo.value.inner) == (0, 1)
        assert not is_ornamentation(tamari3, [0b011, 0b110, 0b100])

    def test_wrong_length(self, tamari3):
        with pytest.raises(PreconditionError):
            validate_orn(tamari3, [0b001])

    def test_extremes(self, k3):
        assert minimum(k3).values == (0b001, 0b010, 0b100)
        assert maximum(k3).values == (0b111, 0b111, 0b111)
        assert leq(minimum(k3), maximum(k3))
        assert not leq(maximum(k3), minimum(k3))


class TestLabels:
    def test_format(self, tamari3):
        assert maximum(tamari3).format() == "[{1,2,3},{2,3},{3}]"
        assert Ornamentation((0b01, 0b10)).format(["a", "b"]) == "[{a},{b}]"

    def test_parse_roundtrip(self, tamari3):
        rho = validate_orn(tamari3, [0b011, 0b010, 0b100])
        assert parse_ornamentation_label(tamari3, rho.format()) == rho

    def test_parse_with_labels(self):
        b = left_segment(2)
        rho = parse_ornamentation_label(b, "[{a,b},{b}]", ["a", "b"])
        assert rho == maximum(b)

    @pytest.mark.parametrize("label", ["[{1},{2}]", "[{1},{2},{x}]"])
    def test_parse_errors(self, tamari3, label):
        with pytest.raises(SpecParseError):
            parse_ornamentation_label(tamari3, label)

    def test_from_dict(self, tamari3):
        rho = ornamentation_from_dict(tamari3, {"values": [[1, 2], [2], [3]]})
        assert rho.values == (0b011, 0b010, 0b100)
        assert rho.to_dict() == {"values": [[1, 2], [2], [3]]}
        with pytest.raises(SpecParseError):
            ornamentation_from_dict(tamari3, {"vals": []})


class TestOperations:
    def test_join_closes_transitively(self, tamari3):
        sigma = validate_orn(tamari3, [0b011, 0b010, 0b100])
        rho = validate_orn(tamari3, [0b001, 0b110, 0b100])
        assert binary_join(tamari3, sigma, rho) == maximum(tamari3)

    def test_meet_takes_largest_member_inside(self, k3):
        sigma = validate_orn(k3, [0b011, 0b011, 0b100])
        rho = validate_orn(k3, [0b101, 0b010, 0b101])
        assert binary_meet(k3, sigma, rho) == minimum(k3)

    def test_empty_family(self, tamari3):
        with pytest.raises(PreconditionError):
            join(tamari3, [])
        with pytest.raises(PreconditionError):
            meet(tamari3, [])

    def test_principal_embed(self, tamari3):
        rho = principal_embed(tamari3, PointedSet(0b110, 1))
        assert rho.values == (0b001, 0b110, 0b100)
        with pytest.raises(NotInFiberError):
            principal_embed(tamari3, PointedSet(0b101, 0))


class TestBoundedSearch:
    def test_full_box_is_the_whole_lattice(self, tamari3, tamari3_lattice):
        found = list(ornamentations_between(tamari3, minimum(tamari3).values, maximum(tamari3).values))
        assert len(found) == len(tamari3_lattice)
        assert set(found) == set(tamari3_lattice.elements)

    def test_pointwise_bound_is_not_transitive(self, tamari3):
        ceiling = (0b011, 0b110, 0b100)
        assert not is_ornamentation(tamari3, ceiling)
        found = set(ornamentations_between(tamari3, minimum(tamari3).values, ceiling))
        assert found == {
            Ornamentation((0b001, 0b010, 0b100)),
            Ornamentation((0b011, 0b010, 0b100)),
            Ornamentation((0b001, 0b110, 0b100)),
        }

    def test_largest_between(self, tamari3):
        floor = (0b001, 0b110, 0b100)
        assert largest_between(tamari3, floor, (0b011, 0b110, 0b100)) == Ornamentation(floor)
        assert largest_between(tamari3, minimum(tamari3).values, (0b011, 0b010, 0b100)).values == (0b011, 0b010, 0b100)

    def test_no_greatest_element(self, tamari3):
        with pytest.raises(PreconditionError, match="no greatest"):
            largest_between(tamari3, minimum(tamari3).values, (0b011, 0b110, 0b100))

    def test_empty_box(self, tamari3):
        with pytest.raises(PreconditionError, match="no ornamentation"):
            largest_between(tamari3, (0b011, 0b010, 0b100), (0b001, 0b110, 0b100))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(TAMARI4_ELEMENTS), min_size=1, max_size=4))
def test_join_is_least_upper_bound(family):
    joined = join(TAMARI4, family)
    upper = [tau for tau in TAMARI4_ELEMENTS if all(leq(rho, tau) for rho in family)]
    assert joined in upper
    assert all(leq(joined, tau) for tau in upper)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from(TAMARI4_ELEMENTS), min_size=1, max_size=4))
def test_meet_is_greatest_lower_bound(family):
    met = meet(TAMARI4, family)
    lower = [tau for tau in TAMARI4_ELEMENTS if all(leq(tau, rho) for rho in family)]
    assert met in lower
    assert all(leq(tau, met) for tau in lower)
