import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ornalat.building import left_segment
from ornalat.exceptions import (
    Not312AvoidingError,
    NotInFiberError,
    NotTransitiveError,
    PreconditionError,
    SpecParseError,
)
from ornalat.lattice import is_semidistributive
from ornalat.maps import (
    InversionSet,
    TotalOrder,
    all_orders,
    find_312_pattern,
    inversion_set,
    is_312_avoiding,
    is_transitive_relation,
    order_from_inversions,
    order_to_orn,
    orn_to_order,
    ornamentation_to_relation,
    relation_to_ornamentation,
    weak312_iso_check,
    weak_join,
    weak_meet,
    weak_order_poset,
)
from ornalat.ornament import maximum, minimum

WEAK4 = weak_order_poset(4)


class TestTotalOrders:
    def test_parse_and_format(self):
        t = TotalOrder.parse("3,1,2")
        assert t.perm == (2, 0, 1)
        assert t.format() == "3,1,2"
        assert TotalOrder.parse("3 1 2") == t

    def test_bad_orders(self):
        with pytest.raises(SpecParseError):
            TotalOrder.parse("a,b")
        with pytest.raises(PreconditionError):
            TotalOrder((0, 0))

    def test_inversions(self):
        inv = inversion_set(TotalOrder.parse("3,1,2"))
        assert inv.pairs() == [(0, 2), (1, 2)]
        assert inv.is_transitively_closed()
        assert inv.is_transitively_coclosed()

    def test_reverse_inverts_everything(self):
        assert len(inversion_set(TotalOrder.reverse(4)).pairs()) == 6
        assert inversion_set(TotalOrder.identity(4)).pairs() == []

    def test_not_an_inversion_set(self):
        lonely = InversionSet(3, (0b100, 0, 0))
        assert not lonely.is_transitively_coclosed()
        with pytest.raises(PreconditionError):
            order_from_inversions(3, lonely.rows)

    def test_312_patterns(self):
        assert find_312_pattern(TotalOrder.parse("3,1,2")) == (0, 1, 2)
        assert is_312_avoiding(TotalOrder.parse("2,3,1"))
        assert sum(is_312_avoiding(t) for t in all_orders(4)) == 14


class TestTamariBridge:
    def test_extremes(self, tamari3):
        assert order_to_orn(tamari3, TotalOrder.identity(3)) == minimum(tamari3)
        assert order_to_orn(tamari3, TotalOrder.reverse(3)) == maximum(tamari3)
        assert orn_to_order(tamari3, maximum(tamari3)) == TotalOrder.reverse(3)

    def test_312_rejected(self, tamari3):
        with pytest.raises(Not312AvoidingError) as excinfo:
            order_to_orn(tamari3, TotalOrder.parse("3,1,2"))
        assert excinfo.value.pattern == (0, 1, 2)

    def test_requires_tamari(self, k3):
        with pytest.raises(PreconditionError):
            order_to_orn(k3, TotalOrder.identity(3))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_weak312_isomorphism(self, n):
        report = weak312_iso_check(n)
        assert report, report.detail


class TestWeakOrder:
    def test_join_and_meet_of_atoms(self):
        s, t = TotalOrder.parse("2,1,3"), TotalOrder.parse("1,3,2")
        assert weak_join([s, t]) == TotalOrder.reverse(3)
        assert weak_meet([s, t]) == TotalOrder.identity(3)
        assert weak_join([s]) == s

    def test_empty_and_mixed(self):
        with pytest.raises(PreconditionError):
            weak_join([])
        with pytest.raises(PreconditionError):
            weak_join([TotalOrder.identity(2), TotalOrder.identity(3)])

    def test_poset(self):
        poset = weak_order_poset(3)
        assert len(poset) == 6
        assert poset.is_lattice()
        assert poset.longest_chain() == 4
        assert len(WEAK4) == 24
        assert is_semidistributive(WEAK4)


@settings(max_examples=50, deadline=None)
@given(st.permutations(range(4)), st.permutations(range(4)))
def test_weak_join_is_the_least_upper_bound(first, second):
    s, t = TotalOrder(tuple(first)), TotalOrder(tuple(second))
    lub = WEAK4.join_index(WEAK4.index[inversion_set(s).rows], WEAK4.index[inversion_set(t).rows])
    assert WEAK4.vectors[lub] == inversion_set(weak_join([s, t])).rows
    glb = WEAK4.meet_index(WEAK4.index[inversion_set(s).rows], WEAK4.index[inversion_set(t).rows])
    assert WEAK4.vectors[glb] == inversion_set(weak_meet([s, t])).rows


@settings(max_examples=50)
@given(st.permutations(range(5)))
def test_inversion_set_determines_the_order(perm):
    t = TotalOrder(tuple(perm))
    assert order_from_inversions(5, inversion_set(t).rows) == t


class TestRelations:
    def test_relation_of_an_ornamentation(self, k3):
        rho = relation_to_ornamentation(k3, {(0, 1), (1, 2), (0, 2)})
        assert rho.values == (0b111, 0b110, 0b100)
        assert ornamentation_to_relation(rho) == {(0, 1), (1, 2), (0, 2)}

    def test_non_transitive_relation(self, k3):
        assert not is_transitive_relation(3, {(0, 1), (1, 2)})
        with pytest.raises(NotTransitiveError):
            relation_to_ornamentation(k3, {(0, 1), (1, 2)})

    def test_relation_outside_the_building_set(self, natural3):
        with pytest.raises(NotInFiberError):
            relation_to_ornamentation(natural3, {(1, 0)})

    def test_k3_elements_are_the_preorders(self, k3_lattice):
        relations = [ornamentation_to_relation(rho) for rho in k3_lattice.elements]
        assert all(is_transitive_relation(3, r) for r in relations)
        assert len(set(relations)) == 29

    def test_tamari_relations_are_inversions(self):
        b = left_segment(4)
        for t in all_orders(4):
            if is_312_avoiding(t):
                assert ornamentation_to_relation(order_to_orn(b, t)) == set(inversion_set(t).pairs())
