import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ornalat.building import (
    PointedBuildingSet,
    PointedSet,
    acyclicity_witness,
    boolean_tower_level,
    building_set_from_dict,
    building_set_to_dict,
    chain_tower_level,
    check_building_set,
    digraphical,
    fiber_join_irreducibles,
    fibers_are_atomic,
    fibers_are_chains,
    from_building_set_all_points,
    from_building_set_min_points,
    from_union_closed_family,
    graphical,
    has_unit_step_fibers,
    is_acyclic,
    left_segment,
    load_building_set,
    pointwise_union_closure,
    save_building_set,
    union_of_fibers,
    validate,
)
from ornalat.exceptions import (
    BuildingSetError,
    MissingSingletonError,
    NotABuildingSetError,
    NotPointedError,
    PreconditionError,
    SpecParseError,
    TransitivityViolationError,
    UnionViolationError,
)
from ornalat.universe import Digraph, Graph, iter_members, mask_of


def sets(*groups):
    return [mask_of(k - 1 for k in group) for group in groups]


class TestValidate:
    def test_tamari_is_valid(self, tamari3):
        assert validate(3, tamari3.fibers) == tamari3

    def test_missing_singleton(self):
        with pytest.raises(MissingSingletonError) as excinfo:
            validate(2, [sets([1]), []])
        assert excinfo.value.point == 1

    def test_union_axiom(self):
        with pytest.raises(UnionViolationError) as excinfo:
            validate(3, [sets([1], [1, 2], [1, 3]), sets([2]), sets([3])])
        assert {excinfo.value.first, excinfo.value.second} == {0b011, 0b101}
        assert "{1,2} and {1,3} are pointed at 1" in str(excinfo.value)
        assert "union {1,2,3} is not" in str(excinfo.value)

    def test_transitivity_axiom(self):
        fibers = [sets([1], [1, 2]), sets([2], [2, 3]), sets([3])]
        with pytest.raises(TransitivityViolationError) as excinfo:
            validate(3, fibers)
        assert excinfo.value.point == 0
        assert "{1,2,3}" in str(excinfo.value)

    def test_transitivity_reported_before_union(self):
        fibers = [sets([1], [1, 2], [1, 3]), sets([2], [2, 3]), sets([3])]
        with pytest.raises(TransitivityViolationError) as excinfo:
            validate(3, fibers)
        assert excinfo.value.point == 0

    def test_unpointed_member(self):
        with pytest.raises(NotPointedError):
            PointedBuildingSet(2, ((0b10,), (0b10,)))

    def test_fibers_sorted_by_size(self, k3):
        assert k3.fiber(0) == (0b001, 0b011, 0b101, 0b111)
        assert k3.size == 12

    def test_format(self):
        assert left_segment(2).format() == "B|1: {1} {1,2}\nB|2: {2}"
        assert PointedSet(0b11, 1).format() == "({1,2}, 2)"


class TestConstructors:
    def test_path_gives_left_segments(self):
        for n in range(1, 6):
            assert digraphical(Digraph.path(n)) == left_segment(n)

    def test_cycle_fibers_are_arcs(self):
        b = digraphical(Digraph.cycle(3))
        assert b.fiber(0) == (0b001, 0b011, 0b111)
        assert b.fiber(2) == (0b100, 0b101, 0b111)

    def test_graphical_complete_graph_has_every_pointed_subset(self):
        b = graphical(Graph.complete(4))
        assert all(len(b.fiber(i)) == 8 for i in range(4))

    def test_edgeless(self):
        b = graphical(Graph.edgeless(3))
        assert b.fibers == ((0b001,), (0b010,), (0b100,))

    def test_all_points(self):
        b = from_building_set_all_points(sets([1], [2], [1, 2]), 2)
        assert b == graphical(Graph.complete(2))

    def test_min_points(self):
        family = sets([1], [2], [3], [4], [1, 2], [1, 3], [1, 2, 3], [3, 4], [1, 3, 4], [1, 2, 3, 4])
        b = from_building_set_min_points(family, 4)
        assert b.fiber(0) == (0b0001, 0b0011, 0b0101, 0b0111, 0b1101, 0b1111)
        assert b.fiber(2) == tuple(sets([3], [3, 4]))

    @pytest.mark.parametrize(
        ("family", "n"),
        [
            (sets([1], [1, 2]), 2),
            (sets([1], [2], [3], [1, 2], [2, 3]), 3),
        ],
    )
    def test_not_a_building_set(self, family, n):
        with pytest.raises(NotABuildingSetError):
            check_building_set(family, n)

    def test_union_closed_family(self):
        b = from_union_closed_family({0b01, 0b11}, 2)
        assert b.n == 3
        assert b.fiber(2) == (0b100, 0b101, 0b111)

    def test_union_closed_family_rejects_non_closed(self):
        with pytest.raises(PreconditionError):
            from_union_closed_family({0b01, 0b10}, 2)

    def test_pointwise_union_closure(self):
        fibers = pointwise_union_closure([PointedSet(0b011, 0), PointedSet(0b101, 0)], 3)
        assert fibers == ((0b011, 0b101, 0b111), (), ())

    def test_union_of_fibers(self):
        merged = union_of_fibers([chain_tower_level(3), left_segment(3)])
        assert merged[0] == (0b001, 0b011, 0b111)
        assert merged[1] == (0b010, 0b110)

    def test_tower_levels(self):
        assert fibers_are_chains(chain_tower_level(4))
        assert boolean_tower_level(2).n == 3
        assert len(boolean_tower_level(2).fiber(0)) == 4


class TestStructure:
    def test_acyclicity(self, tamari3, k3):
        assert is_acyclic(tamari3)
        assert acyclicity_witness(k3) == (0, 1)

    def test_chain_fibers(self, tamari3, k3):
        assert fibers_are_chains(tamari3)
        assert not fibers_are_chains(k3)

    def test_unit_steps(self, tamari3):
        assert has_unit_step_fibers(tamari3)
        assert not has_unit_step_fibers(from_union_closed_family({0b11}, 2))

    def test_atomic_fibers(self, tamari3, k3):
        assert fibers_are_atomic(k3)
        assert not fibers_are_atomic(tamari3)

    def test_fiber_join_irreducibles(self, tamari3):
        found = {(p.mask, p.point) for p in fiber_join_irreducibles(tamari3)}
        assert found == {(0b011, 0), (0b111, 0), (0b110, 1)}


class TestSerialization:
    def test_dict_form(self):
        assert building_set_to_dict(left_segment(2)) == {"n": 2, "fibers": [[[1], [1, 2]], [[2]]]}

    def test_file_roundtrip(self, tmp_path, k3):
        path = tmp_path / "k3.json"
        save_building_set(k3, path)
        assert load_building_set(path) == k3

    @pytest.mark.parametrize(
        "data",
        [{}, {"n": 2}, {"n": 2, "fibers": [[[1]]]}, {"n": 1, "fibers": [[["x"]]]}],
    )
    def test_bad_schema(self, data):
        with pytest.raises(SpecParseError):
            building_set_from_dict(data)

    def test_axiom_failure_is_a_building_set_error(self):
        with pytest.raises(BuildingSetError):
            building_set_from_dict({"n": 2, "fibers": [[[1]], [[1]]]})

    def test_unreadable_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(SpecParseError):
            load_building_set(path)


@st.composite
def edge_lists(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    if not pairs:
        return n, []
    return n, draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3 * n))


def connected_family(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return [
        mask
        for mask in range(1, 1 << g.n)
        if nx.is_connected(nxg.subgraph(list(iter_members(mask))))
    ]


@settings(max_examples=80, deadline=None)
@given(edge_lists())
def test_digraphical_passes_validate(data):
    n, edges = data
    b = digraphical(Digraph.from_edges(n, edges))
    assert validate(n, b.fibers) == b


@settings(max_examples=80, deadline=None)
@given(edge_lists())
def test_graphical_matches_connected_sets(data):
    n, edges = data
    g = Graph.from_edges(n, edges)
    b = graphical(g)
    assert validate(n, b.fibers) == b
    all_points = from_building_set_all_points(connected_family(g), n)
    assert all_points == b
    assert validate(n, all_points.fibers) == all_points


@settings(max_examples=80, deadline=None)
@given(edge_lists())
def test_union_closure_of_a_building_set_is_itself(data):
    n, edges = data
    b = digraphical(Digraph.from_edges(n, edges))
    fibers = pointwise_union_closure(b.pointed_sets(), n)
    assert fibers == b.fibers
    assert validate(n, fibers) == b


@st.composite
def pointed_families(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    masks = st.integers(min_value=1, max_value=(1 << n) - 1)
    raw = draw(st.lists(st.tuples(masks, st.integers(0, n - 1)), max_size=8))
    return n, [PointedSet(mask, point) for mask, point in raw if mask >> point & 1]


@settings(max_examples=80, deadline=None)
@given(pointed_families())
def test_union_closure_is_extensive_and_idempotent(data):
    n, pointed = data
    fibers = pointwise_union_closure(pointed, n)
    for mask, point in pointed:
        assert mask in fibers[point]
    again = [PointedSet(mask, i) for i, fiber in enumerate(fibers) for mask in fiber]
    assert pointwise_union_closure(again, n) == fibers
