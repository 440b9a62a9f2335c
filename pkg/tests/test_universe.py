import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ornalat.exceptions import InvalidGroundSetError, PreconditionError, SpecParseError
from ornalat.universe import (
    Digraph,
    Graph,
    dags,
    digraphs,
    directed_trees,
    format_mask,
    is_subset,
    iter_members,
    load_edge_list,
    mask_of,
    members,
    parse_edge_list,
    parse_members,
    popcount,
    reachable_from,
    transitive_closure,
)


class TestSubsets:
    def test_mask_roundtrip(self):
        assert mask_of([0, 2]) == 0b101
        assert members(0b101) == [0, 2]
        assert popcount(0b1011) == 3

    def test_format_is_one_based(self):
        assert format_mask(0b101) == "{1,3}"
        assert format_mask(0b101, ["a", "b", "c"]) == "{a,c}"
        assert format_mask(0) == "{}"

    def test_parse_members(self):
        assert parse_members([1, 3], 3) == 0b101

    def test_out_of_range_index(self):
        with pytest.raises(InvalidGroundSetError):
            mask_of([3], 3)
        with pytest.raises(InvalidGroundSetError):
            parse_members([0], 3)

    @pytest.mark.parametrize("n", [0, 65])
    def test_ground_size_bounds(self, n):
        with pytest.raises(InvalidGroundSetError):
            Digraph.edgeless(n)

    @given(st.integers(min_value=0, max_value=2**20), st.integers(min_value=0, max_value=2**20))
    def test_subset_matches_set_semantics(self, a, b):
        assert is_subset(a, b) == set(iter_members(a)).issubset(iter_members(b))


class TestGraphs:
    def test_named_digraphs(self):
        assert Digraph.path(3).edges() == [(0, 1), (1, 2)]
        assert Digraph.cycle(3).edges() == [(0, 1), (1, 2), (2, 0)]
        assert Digraph.complete_dag(3).edge_count == 3
        assert Digraph.in_star(4).edges() == [(1, 0), (2, 0), (3, 0)]

    def test_small_cycles_rejected(self):
        with pytest.raises(PreconditionError):
            Digraph.cycle(1)
        with pytest.raises(PreconditionError):
            Graph.cycle(2)

    def test_self_loop_rejected(self):
        with pytest.raises(InvalidGroundSetError):
            Digraph.from_edges(2, [(1, 1)])

    def test_graph_is_symmetric(self):
        d = Graph.path(3).as_digraph()
        assert d.has_edge(0, 1) and d.has_edge(1, 0)
        assert not d.has_edge(0, 2)

    def test_trees(self):
        assert Digraph.path(4).is_tree()
        assert Digraph.in_star(4).is_tree()
        assert not Digraph.cycle(3).is_tree()
        assert not Digraph.edgeless(2).is_tree()

    def test_reachable_from_stays_inside(self):
        d = Digraph.path(4)
        assert reachable_from(d, 0, 0b1111) == 0b1111
        assert reachable_from(d, 0, 0b1011) == 0b0011
        with pytest.raises(PreconditionError):
            reachable_from(d, 2, 0b0011)

    def test_transitive_closure(self):
        closure = transitive_closure(Digraph.path(3))
        assert closure.edges() == [(0, 1), (0, 2), (1, 2)]
        assert transitive_closure(Digraph.cycle(3)).edge_count == 6

    @pytest.mark.parametrize(("n", "count"), [(1, 1), (2, 2), (3, 6)])
    def test_dags_up_to_isomorphism(self, n, count):
        found = list(dags(n))
        assert len(found) == count
        assert all(d.is_acyclic() for d in found)

    @pytest.mark.parametrize(("n", "count"), [(1, 1), (2, 3), (3, 16)])
    def test_digraphs_up_to_isomorphism(self, n, count):
        assert len(list(digraphs(n))) == count

    def test_directed_trees_are_trees(self):
        trees = list(directed_trees(4))
        assert all(d.is_tree() for d in trees)
        # two unlabeled trees with 3 edges, 8 orientations each
        assert len(trees) == 16


class TestEdgeLists:
    def test_parse(self):
        n, edges = parse_edge_list("# path\n1 2\n2 3  # tail\n")
        assert n == 3
        assert edges == [(0, 1), (1, 2)]

    def test_declared_size(self):
        n, edges = parse_edge_list("n 5\n1 2\n")
        assert n == 5

    @pytest.mark.parametrize("text", ["1 2 3\n", "a b\n", "0 1\n", ""])
    def test_malformed(self, text):
        with pytest.raises(SpecParseError):
            parse_edge_list(text)

    def test_load(self, tmp_path):
        path = tmp_path / "star.txt"
        path.write_text("2 1\n3 1\n")
        n, edges = load_edge_list(path)
        assert Digraph.from_edges(n, edges) == Digraph.in_star(3)

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecParseError):
            load_edge_list(tmp_path / "absent.txt")


@settings(max_examples=30)
@given(st.integers(min_value=1, max_value=6), st.data())
def test_reachability_is_monotone_in_allowed_set(n, data):
    d = Digraph.cycle(n) if n > 1 else Digraph.edgeless(1)
    inner = data.draw(st.integers(min_value=0, max_value=(1 << n) - 1)) | 1
    outer = inner | data.draw(st.integers(min_value=0, max_value=(1 << n) - 1))
    assert is_subset(reachable_from(d, 0, inner), reachable_from(d, 0, outer))
