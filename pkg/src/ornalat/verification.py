"""
Acceptance suite for the ornamentation-lattice library.

Each check enumerates small instances, compares them with independent
brute-force counts or with the structural statements they should satisfy,
and records PASS/FAIL, a detail string and the elapsed time. Results can be
dumped as JSON or as a pandas table.
"""

import json
import time
from itertools import combinations, product
from math import comb, factorial
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple, Union

import pandas as pd

from .building.constructors import (
    boolean_tower_level,
    chain_tower_level,
    digraphical,
    from_building_set_min_points,
    from_union_closed_family,
    graphical,
    left_segment,
)
from .building.pointed_building_set import PointedBuildingSet
from .geometry.biclosed import (
    associative_quasitrivial_tables,
    bicl_subposet,
    is_associative,
    is_biclosed,
    quasitrivial_op,
)
from .lattice.enumeration import enumerate_lattice
from .lattice.isomorphism import iso_check
from .lattice.poset import FinitePoset
from .lattice.properties import (
    chain_fiber_witnesses,
    changed_coordinates,
    is_semidistributive,
    lower_difference_minima,
    upper_difference_maxima,
    verify_lattice_operations,
)
from .maps.duality import dag_cover_pair, find_duality_failure, tree_cover_witnesses, verify_tree_duality
from .maps.projection import Tower, projection_counterexample
from .maps.weak_order import all_orders, inversion_set, weak312_iso_check, weak_join, weak_order_poset
from .ornament.ornamentation import Ornamentation
from .symmetry.cyclic_tamari import (
    csym_atam,
    cyclic_tamari,
    verify_chain_statistic,
    verify_csym_ctam,
    verify_rotated_cycle_map,
)
from .universe.graphs import Digraph, Graph, dags, directed_trees
from .universe.subsets import bit, full_mask, mask_of
from .utils.debug import debug as logger

CheckResult = Tuple[bool, str]

TAMARI_COUNTS = [1, 2, 5, 14, 42, 132, 429]


def count_transitive_relations(n: int, pairs: List[Tuple[int, int]]) -> int:
    """Brute force: subsets of ``pairs`` closed under composition."""
    total = 0
    for choice in range(1 << len(pairs)):
        relation = {pair for k, pair in enumerate(pairs) if choice >> k & 1}
        if all((i, k) in relation for i, j in relation for j2, k in relation if j == j2 and i != k):
            total += 1
    return total


class AcceptanceSuite:
    """Runs every acceptance check and collects the verdicts."""

    CORE = [
        "tamari_counts",
        "topology_counts",
        "natural_poset_counts",
        "lattice_laws",
        "tree_semidistributivity",
        "tree_duality",
        "duality_failure",
        "projection_counterexample",
        "chain_lengths",
        "cyclic_tamari_isomorphism",
        "weak_order_bridge",
        "biclosed_weak_order",
        "k3_cover_anomaly",
    ]
    EXTENDED = [
        "union_closed_families",
        "rotated_cycle_map",
        "explicit_cover_witnesses",
        "symmetric_semidistributivity",
    ]

    def __init__(self, max_n: int = 6, cap: Optional[int] = None, threads: Optional[int] = None):
        self.max_n = max_n
        self.cap = cap
        self.threads = threads
        self.results: Dict[str, Dict[str, object]] = {}

    def _bound(self, limit: int) -> int:
        return min(limit, self.max_n)

    def _lattice(self, b: PointedBuildingSet):
        return enumerate_lattice(b, self.cap, self.threads)

    def checks(self, extended: bool = False) -> Dict[str, Callable[[], CheckResult]]:
        names = self.CORE + (self.EXTENDED if extended else [])
        return {name: getattr(self, f"check_{name}") for name in names}

    def run(self, extended: bool = False, names: Optional[List[str]] = None) -> Dict[str, Dict[str, object]]:
        """Run the checks in order; a check that raises counts as FAIL."""
        for name, check in self.checks(extended).items():
            if names and name not in names:
                continue
            start_time = time.time()
            try:
                passed, detail = check()
            except Exception as e:
                logger.error(f"check {name} raised: {e}")
                passed, detail = False, f"{type(e).__name__}: {e}"
            elapsed = time.time() - start_time
            self.results[name] = {"passed": passed, "detail": detail, "seconds": round(elapsed, 3)}
            logger.info(f"{'PASS' if passed else 'FAIL'} {name} ({elapsed:.2f}s): {detail}")
        return self.results

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results.values() if r["passed"])

    @property
    def all_passed(self) -> bool:
        return self.passed == len(self.results)

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame.from_dict(self.results, orient="index")
        frame.index.name = "check"
        return frame

    def save_json(self, path: Union[str, Path]) -> None:
        summary = {"max_n": self.max_n, "passed": self.passed, "total": len(self.results), "checks": self.results}
        with open(path, "w") as f:
            json.dump(summary, f, indent=2, default=str)

    def save_csv(self, path: Union[str, Path]) -> None:
        self.to_frame().to_csv(path)

    def report_lines(self) -> List[str]:
        lines = [f"{'PASS' if r['passed'] else 'FAIL'} {name}" for name, r in self.results.items()]
        lines.append(f"summary: {self.passed}/{len(self.results)} passed")
        return lines

    # Counts

    def check_tamari_counts(self) -> CheckResult:
        counts = [len(self._lattice(left_segment(n))) for n in range(1, self._bound(6) + 1)]
        expected = TAMARI_COUNTS[: len(counts)]
        return counts == expected, f"counts {counts}"

    def check_topology_counts(self) -> CheckResult:
        details = []
        for n in range(2, self._bound(4) + 1):
            count = len(self._lattice(graphical(Graph.complete(n))))
            pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
            oracle = count_transitive_relations(n, pairs)
            details.append((n, count, oracle))
            if count != oracle:
                return False, f"n={n}: {count} ornamentations, {oracle} transitive relations"
        return True, f"(n, count, oracle) {details}"

    def check_natural_poset_counts(self) -> CheckResult:
        details = []
        for n in range(1, self._bound(4) + 1):
            count = len(self._lattice(digraphical(Digraph.complete_dag(n))))
            pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
            oracle = count_transitive_relations(n, pairs)
            details.append((n, count, oracle))
            if count != oracle:
                return False, f"n={n}: {count} ornamentations, {oracle} natural posets"
        return True, f"(n, count, oracle) {details}"

    # Lattice structure

    def zoo(self) -> List[Tuple[str, PointedBuildingSet]]:
        """Small building sets from every constructor."""
        members = [mask_of(s) for s in ([0], [1], [2], [3], [0, 1], [0, 2], [0, 1, 2], [2, 3], [0, 2, 3], [0, 1, 2, 3])]
        family = [mask_of(s) for s in ([0], [1], [0, 1])]
        return [
            ("left_segment(4)", left_segment(4)),
            ("graphical(K3)", graphical(Graph.complete(3))),
            ("graphical(P4)", graphical(Graph.path(4))),
            ("graphical(C4)", graphical(Graph.cycle(4))),
            ("graphical(S4)", graphical(Graph.star(4))),
            ("digraphical(K3<)", digraphical(Digraph.complete_dag(3))),
            ("digraphical(C3)", digraphical(Digraph.cycle(3))),
            ("digraphical(in-star 4)", digraphical(Digraph.in_star(4))),
            ("digraphical(path 4)", digraphical(Digraph.path(4))),
            ("chain_tower_level(4)", chain_tower_level(4)),
            ("boolean_tower_level(3)", boolean_tower_level(3)),
            ("min-pointed building set", from_building_set_min_points(members, 4)),
            ("union-closed family", from_union_closed_family(family, 2)),
            ("projection example", projection_counterexample().big),
        ]

    def check_lattice_laws(self) -> CheckResult:
        checked = 0
        for name, b in self.zoo():
            lat = self._lattice(b)
            if len(lat) > 200:
                continue
            report = verify_lattice_operations(lat)
            if not report or not lat.is_lattice():
                return False, f"{name}: {report.detail or 'not a lattice'} at {report.witness}"
            checked += 1
        return True, f"{checked} lattices, every pair checked"

    def check_tree_semidistributivity(self) -> CheckResult:
        checked = 0
        for n in range(1, self._bound(6) + 1):
            for d in directed_trees(n):
                report = is_semidistributive(self._lattice(digraphical(d)))
                if not report:
                    return False, f"tree {d.edges()}: {report.detail}"
                checked += 1
        return True, f"{checked} oriented trees"

    def check_tree_duality(self) -> CheckResult:
        checked = 0
        for n in range(1, self._bound(6) + 1):
            for d in directed_trees(n):
                report = verify_tree_duality(d, self.cap, self.threads)
                if not report:
                    return False, f"tree {d.edges()}: {report.failures}"
                checked += 1
        return True, f"{checked} oriented trees"

    def check_duality_failure(self) -> CheckResult:
        failure = find_duality_failure(self._bound(5), self.cap, self.threads)
        if failure is None:
            return False, "no DAG witness found"
        edges = [(u + 1, v + 1) for u, v in failure.digraph.edges()]
        return True, f"DAG {edges}: {len(failure.lattice)} elements, not self-dual"

    def check_projection_counterexample(self) -> CheckResult:
        example = projection_counterexample()
        exact = example.projected_join[0] == full_mask(3) and example.join_of_projections[0] == bit(0)
        if not exact:
            return False, f"{example.projected_join.format()} vs {example.join_of_projections.format()}"
        tower = Tower.segments(3)
        functorial = tower.check_functoriality()
        monotone = tower.check_monotone()
        if not functorial or not monotone:
            return False, functorial.detail or monotone.detail
        return True, f"{example.projected_join.format()} != {example.join_of_projections.format()}"

    def check_chain_lengths(self) -> CheckResult:
        found = []
        for n in range(2, self._bound(4) + 1):
            length = self._lattice(digraphical(Digraph.cycle(n))).longest_chain()
            found.append(("cycle", n, length))
            if length != comb(n + 1, 2):
                return False, f"cycle {n}: longest chain {length}, expected {comb(n + 1, 2)}"
        for n in range(2, self._bound(3) + 1):
            length = csym_atam(n, self.cap).longest_chain()
            found.append(("signed", n, length))
            if length != comb(n + 1, 2) + 1:
                return False, f"signed cycle {n}: longest chain {length}, expected {comb(n + 1, 2) + 1}"
        return True, f"{found}"

    def check_cyclic_tamari_isomorphism(self) -> CheckResult:
        for n in range(2, self._bound(3) + 1):
            report = verify_csym_ctam(n, self.cap)
            if not report:
                return False, f"n={n}: {report.detail}"
            statistic = verify_chain_statistic(n)
            if not statistic:
                return False, f"n={n}: {statistic.detail}"
        return True, f"n=2..{self._bound(3)}"

    def check_weak_order_bridge(self) -> CheckResult:
        for n in range(1, self._bound(5) + 1):
            report = weak312_iso_check(n)
            if not report:
                return False, f"n={n}: {report.detail}"
        for n in range(1, self._bound(4) + 1):
            poset = weak_order_poset(n)
            orders = all_orders(n)
            for first, second in combinations(orders, 2):
                lub = poset.join_index(poset.index[inversion_set(first).rows], poset.index[inversion_set(second).rows])
                joined = inversion_set(weak_join([first, second])).rows
                if lub is None or poset.vectors[lub] != joined:
                    return False, f"join of {first.format()} and {second.format()} disagrees with the order"
        return True, f"312 bridge n<={self._bound(5)}, joins n<={self._bound(4)}"

    def check_biclosed_weak_order(self) -> CheckResult:
        for n in range(1, self._bound(4) + 1):
            subposet = bicl_subposet(self._lattice(digraphical(Digraph.complete_dag(n))))
            if len(subposet) != factorial(n):
                return False, f"n={n}: {len(subposet)} biclosed elements, expected {factorial(n)}"
            if not iso_check(subposet.poset, weak_order_poset(n)):
                return False, f"n={n}: biclosed subposet is not the weak order"
        b = graphical(Graph.complete(3))
        lat = self._lattice(b)
        biclosed_tables = set()
        for rho in lat.elements:
            table = quasitrivial_op(rho)
            biclosed = is_biclosed(b, rho)
            if is_associative(table) != biclosed:
                return False, f"{rho.format()}: associative={not biclosed}, biclosed={biclosed}"
            if biclosed:
                biclosed_tables.add(table.tobytes())
        associative = {table.tobytes() for table in associative_quasitrivial_tables(3)}
        if biclosed_tables != associative:
            return False, f"{len(biclosed_tables)} biclosed tables vs {len(associative)} associative tables"
        return True, f"Bicl = weak order for n<={self._bound(4)}, {len(associative)} associative tables at n=3"

    def check_k3_cover_anomaly(self) -> CheckResult:
        lat = self._lattice(graphical(Graph.complete(3)))
        rho = Ornamentation((mask_of([0, 1]), mask_of([0, 1]), full_mask(3)))
        top = Ornamentation((full_mask(3),) * 3)
        x, y = lat.index_of(rho), lat.index_of(top)
        if (x, y) not in lat.covers:
            return False, f"{rho.format()} is not covered by {top.format()}"
        changed = changed_coordinates(rho, top)
        return changed == [0, 1], f"cover changes coordinates {[i + 1 for i in changed]}"

    # Supplementary checks

    def check_union_closed_families(self) -> CheckResult:
        checked = 0
        for m in range(1, self._bound(3) + 1):
            subsets = list(range(1, 1 << m))
            for choice in product((False, True), repeat=len(subsets)):
                family = {s for s, keep in zip(subsets, choice) if keep}
                if any(a | b not in family for a in family for b in family):
                    continue
                lat = self._lattice(from_union_closed_family(family, m))
                target = FinitePoset((s,) for s in family | {0})
                if not iso_check(lat, target):
                    return False, f"family {sorted(family)} over [{m}]"
                checked += 1
        return True, f"{checked} union-closed families"

    def check_rotated_cycle_map(self) -> CheckResult:
        report = verify_rotated_cycle_map(2, 3, 2, self.cap)
        return report.passed, report.detail

    def check_explicit_cover_witnesses(self) -> CheckResult:
        checked = 0
        for n in range(1, self._bound(4) + 1):
            for d in dags(n):
                lat = self._lattice(digraphical(d))
                for lo, hi in lat.covers:
                    dag_cover_pair(lat.building, lat.elements[lo], lat.elements[hi])
                    checked += 1
            for d in directed_trees(n):
                lat = self._lattice(digraphical(d))
                for lo, hi in lat.covers:
                    down, up = tree_cover_witnesses(d, lat.elements[lo], lat.elements[hi])
                    if lower_difference_minima(lat, lo, hi) != [lat.index_of(down)]:
                        return False, f"tree {d.edges()}: wrong lower witness at {lat.label(hi)}"
                    if upper_difference_maxima(lat, lo, hi) != [lat.index_of(up)]:
                        return False, f"tree {d.edges()}: wrong upper witness at {lat.label(lo)}"
        for b in (left_segment(4), chain_tower_level(4)):
            lat = self._lattice(b)
            for lo, hi in lat.covers:
                down, up = chain_fiber_witnesses(b, lat.elements[lo], lat.elements[hi])
                if lower_difference_minima(lat, lo, hi) != [lat.index_of(down)]:
                    return False, f"chain fibers: wrong lower witness at {lat.label(hi)}"
                if upper_difference_maxima(lat, lo, hi) != [lat.index_of(up)]:
                    return False, f"chain fibers: wrong upper witness at {lat.label(lo)}"
        return True, f"{checked} DAG covers with a unique (u, v)"

    def check_symmetric_semidistributivity(self) -> CheckResult:
        found = []
        for n in range(2, self._bound(3) + 1):
            for name, poset in (("csym-atam", csym_atam(n, self.cap)), ("ctam", cyclic_tamari(n))):
                report = is_semidistributive(poset)
                if not report:
                    return False, f"{name} n={n}: {report.detail}"
                found.append((name, n, report.checked))
        return True, f"{found}"


def run_acceptance(max_n: int = 6, extended: bool = False, **kwargs) -> AcceptanceSuite:
    suite = AcceptanceSuite(max_n, **kwargs)
    suite.run(extended)
    return suite
