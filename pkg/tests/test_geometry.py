from math import factorial

import numpy as np
import pytest

from ornalat.building import digraphical, graphical
from ornalat.exceptions import PreconditionError
from ornalat.geometry import (
    RootVector,
    associative_quasitrivial_tables,
    bicl_subposet,
    find_bicl_non_lattice,
    format_table,
    is_associative,
    is_biclosed,
    is_closed,
    is_coclosed,
    is_quasitrivial,
    ornamentation_from_table,
    phi,
    quasitrivial_op,
    v_of,
)
from ornalat.lattice import enumerate_lattice, iso_check
from ornalat.maps import weak_order_poset
from ornalat.ornament import maximum, minimum, validate_orn
from ornalat.universe import Digraph, Graph


class TestRoots:
    def test_phi_of_tamari(self, tamari3):
        assert phi(tamari3) == {RootVector(1, 0), RootVector(2, 0), RootVector(2, 1)}
        assert v_of(maximum(tamari3)) == phi(tamari3)
        assert v_of(minimum(tamari3)) == set()

    def test_format(self):
        assert RootVector(1, 0).format() == "e2-e1"

    def test_closed_and_coclosed(self, tamari3):
        universe = phi(tamari3)
        # e2-e1 + e3-e2 = e3-e1
        assert not is_closed({RootVector(1, 0), RootVector(2, 1)}, universe)
        assert is_closed({RootVector(1, 0), RootVector(2, 1), RootVector(2, 0)}, universe)
        assert not is_coclosed({RootVector(2, 0)}, universe)
        assert is_coclosed({RootVector(2, 0), RootVector(1, 0)}, universe)


class TestBiclosed:
    def test_quasitrivial_counterexample(self, k3):
        rho = validate_orn(k3, [0b011, 0b010, 0b100])
        assert not is_biclosed(k3, rho)
        assert not is_associative(quasitrivial_op(rho))

    def test_extremes_are_biclosed(self, k3):
        assert is_biclosed(k3, minimum(k3))
        assert is_biclosed(k3, maximum(k3))

    @pytest.mark.parametrize("d", [Digraph.path(3), Digraph.in_star(4), Digraph.from_edges(4, [(0, 1), (2, 1), (2, 3)])])
    def test_tree_ornamentations_are_biclosed(self, d):
        lat = enumerate_lattice(digraphical(d))
        assert len(bicl_subposet(lat)) == len(lat)

    def test_roots_outside_phi(self, tamari3, k3):
        with pytest.raises(PreconditionError):
            is_biclosed(tamari3, maximum(k3))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_natural_order_gives_weak_order(self, n):
        subposet = bicl_subposet(enumerate_lattice(digraphical(Digraph.complete_dag(n))))
        assert len(subposet) == factorial(n)
        assert subposet.is_lattice
        assert iso_check(subposet.poset, weak_order_poset(n))

    def test_no_small_non_lattice(self):
        assert find_bicl_non_lattice(max_n=2) is None


class TestQuasitrivial:
    def test_table_of_the_bottom(self):
        b = graphical(Graph.complete(2))
        table = quasitrivial_op(minimum(b))
        assert format_table(table) == "1 1\n2 2"
        assert is_quasitrivial(table)

    def test_not_quasitrivial(self, k3):
        table = np.array([[0, 2, 0], [1, 1, 1], [2, 2, 2]])
        assert not is_quasitrivial(table)
        with pytest.raises(PreconditionError):
            ornamentation_from_table(k3, table)

    def test_two_points(self):
        assert len(list(associative_quasitrivial_tables(2))) == 4

    def test_associative_tables_are_the_biclosed_ornamentations(self, k3, k3_lattice):
        biclosed = set()
        for rho in k3_lattice.elements:
            table = quasitrivial_op(rho)
            assert is_associative(table) == is_biclosed(k3, rho)
            if is_biclosed(k3, rho):
                biclosed.add(table.tobytes())
        associative = list(associative_quasitrivial_tables(3))
        assert {table.tobytes() for table in associative} == biclosed
        for table in associative:
            assert quasitrivial_op(ornamentation_from_table(k3, table)).tobytes() == table.tobytes()
