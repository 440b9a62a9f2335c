"""
Duality for digraphical building sets of directed trees.

For a directed tree D, v precedes u in D when D has a directed path from v to
u. The dual of an ornamentation rho of B(D) is the ornamentation of B(D^op)
whose value at u is the largest u-connected set (in D^op) inside

    omega(u) = {v : v precedes u, u not in rho(v)} + {u}.

This map is an order-reversing bijection with inverse the dual map of D^op.
For DAGs that are not trees the two lattices can fail to be anti-isomorphic
even when D is isomorphic to D^op; ``find_duality_failure`` searches for such
a DAG.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import networkx as nx

from ..building.constructors import digraphical
from ..building.pointed_building_set import PointedBuildingSet, acyclicity_witness
from ..exceptions import NotATreeError, PreconditionError, PreconditionNotAcyclicError
from ..lattice.enumeration import OrnLattice, enumerate_lattice
from ..lattice.isomorphism import iso_check
from ..lattice.properties import changed_coordinates
from ..ornament.ornamentation import Ornamentation, validate_orn
from ..universe.graphs import Digraph, dags, reachable_from
from ..universe.subsets import bit, full_mask, iter_members
from ..utils.debug import debug as logger


def _require_tree(d: Digraph) -> None:
    if not d.is_tree():
        raise NotATreeError(f"the underlying graph of the {d.n}-vertex digraph is not a tree")


def _descendants(d: Digraph) -> List[int]:
    everything = full_mask(d.n)
    return [reachable_from(d, v, everything) for v in range(d.n)]


def tree_dual(d: Digraph, rho: Ornamentation) -> Ornamentation:
    """
    Image of rho under the duality O(B(d)) -> O(B(d^op)).

    Args:
        d: A directed tree.
        rho: An ornamentation of digraphical(d).

    Returns:
        Ornamentation: An ornamentation of digraphical(d.reversed()).

    Raises:
        NotATreeError: d is not a directed tree.
    """
    _require_tree(d)
    if len(rho) != d.n:
        raise PreconditionError(f"expected {d.n} values, got {len(rho)}")
    opposite = d.reversed()
    ancestors = _descendants(opposite)
    values = []
    for u in range(d.n):
        omega = bit(u)
        for v in iter_members(ancestors[u] & ~bit(u)):
            if not rho[v] >> u & 1:
                omega |= bit(v)
        values.append(reachable_from(opposite, u, omega))
    return Ornamentation(tuple(values))


@dataclass
class TreeDualityReport:
    """
    Outcome of verify_tree_duality.

    Attributes:
        size: Number of elements of O(B(D)).
        dual_size: Number of elements of O(B(D^op)).
        bijective: The images are pairwise distinct and fill O(B(D^op)).
        order_reversing: Every cover of either lattice is reversed by the map.
        roundtrip: Dualizing twice gives back every element.
        anti_isomorphic: iso_check finds an anti-isomorphism.
        failures: Human readable descriptions of the first problems found.
    """

    size: int
    dual_size: int
    bijective: bool = True
    order_reversing: bool = True
    roundtrip: bool = True
    anti_isomorphic: bool = True
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.bijective and self.order_reversing and self.roundtrip and self.anti_isomorphic

    def __bool__(self) -> bool:
        return self.passed


def verify_tree_duality(
    d: Digraph, cap: Optional[int] = None, threads: Optional[int] = None
) -> TreeDualityReport:
    """Enumerate both lattices of a directed tree and check the duality exhaustively."""
    _require_tree(d)
    opposite = d.reversed()
    lat = enumerate_lattice(digraphical(d), cap, threads)
    dual_lat = enumerate_lattice(digraphical(opposite), cap, threads)
    report = TreeDualityReport(len(lat), len(dual_lat))

    forward: List[Optional[int]] = []
    for rho in lat.elements:
        image = tree_dual(d, rho)
        forward.append(dual_lat.index.get(image.values))
        if tree_dual(opposite, image) != rho:
            report.roundtrip = False
            report.failures.append(f"roundtrip fails at {rho.format()}")
    if None in forward or len(set(forward)) != len(dual_lat) or len(lat) != len(dual_lat):
        report.bijective = False
        report.failures.append("images do not biject onto the dual lattice")
    else:
        for lo, hi in lat.covers:
            if not dual_lat.leq(forward[hi], forward[lo]):
                report.order_reversing = False
                report.failures.append(f"cover {lat.label(lo)} < {lat.label(hi)} is not reversed")
                break
        backward = {image: k for k, image in enumerate(forward)}
        for lo, hi in dual_lat.covers:
            if not lat.leq(backward[hi], backward[lo]):
                report.order_reversing = False
                report.failures.append(f"dual cover {dual_lat.label(lo)} < {dual_lat.label(hi)} is not reversed")
                break

    report.anti_isomorphic = bool(iso_check(lat, dual_lat, anti=True))
    if not report.anti_isomorphic:
        report.failures.append("no anti-isomorphism between the two lattices")
    logger.debug(f"tree duality on {d.n} vertices: {report}")
    return report


def dag_cover_pair(b: PointedBuildingSet, rho: Ornamentation, sigma: Ornamentation) -> Tuple[int, int]:
    """
    The vertices (u, v) with sigma(u) = rho(u) | rho(v) for a cover rho < sigma.

    For building sets of DAGs, u is the single changed coordinate and v the
    unique minimum of sigma(u) - rho(u).

    Raises:
        PreconditionNotAcyclicError: b is not acyclic.
        PreconditionError: rho, sigma do not change exactly one coordinate,
            or the pair is not unique.
    """
    witness = acyclicity_witness(b)
    if witness is not None:
        raise PreconditionNotAcyclicError(*witness)
    changed = changed_coordinates(rho, sigma)
    if len(changed) != 1:
        raise PreconditionError(f"expected one changed coordinate, got {[i + 1 for i in changed]}")
    u = changed[0]
    candidates = [v for v in range(b.n) if rho[u] | rho[v] == sigma[u]]
    if len(candidates) != 1:
        raise PreconditionError(f"expected a unique v for u={u + 1}, got {[v + 1 for v in candidates]}")
    return u, candidates[0]


def tree_cover_witnesses(
    d: Digraph, rho: Ornamentation, sigma: Ornamentation
) -> Tuple[Ornamentation, Ornamentation]:
    """
    Extremal elements of the semidistributivity check for a cover of a tree lattice.

    With (u, v) from dag_cover_pair, mu_down is [u, v] at u and singletons
    elsewhere; mu_up(w) is desc(w) - desc(v) for w on the path from u up to
    (not including) v, and desc(w) otherwise.
    """
    _require_tree(d)
    b = digraphical(d)
    u, v = dag_cover_pair(b, rho, sigma)
    descendants = _descendants(d)
    ancestors = _descendants(d.reversed())
    path = descendants[u] & ancestors[v]

    down_values = [bit(w) for w in range(d.n)]
    down_values[u] = path
    up_values = list(descendants)
    for w in iter_members(path & ~bit(v)):
        up_values[w] = descendants[w] & ~descendants[v]
    return validate_orn(b, down_values), validate_orn(b, up_values)


@dataclass
class DualityFailure:
    """A DAG isomorphic to its opposite whose ornamentation lattice is not self-dual."""

    digraph: Digraph
    lattice: OrnLattice
    dual_lattice: OrnLattice


def find_duality_failure(
    max_n: int = 5, cap: Optional[int] = None, threads: Optional[int] = None
) -> Optional[DualityFailure]:
    """
    Search DAGs on at most max_n vertices, smallest first, for a duality failure.

    Returns:
        The first DAG D with D isomorphic to D^op but O(B(D)) not
        anti-isomorphic to O(B(D^op)), or None.
    """
    for n in range(1, max_n + 1):
        for d in dags(n):
            if d.is_tree():
                continue
            opposite = d.reversed()
            if not nx.is_isomorphic(d.to_networkx(), opposite.to_networkx()):
                continue
            lat = enumerate_lattice(digraphical(d), cap, threads)
            dual_lat = enumerate_lattice(digraphical(opposite), cap, threads)
            if not iso_check(lat, dual_lat, anti=True):
                logger.info(f"duality fails for the DAG {d.edges()} on {n} vertices")
                return DualityFailure(d, lat, dual_lat)
    return None
