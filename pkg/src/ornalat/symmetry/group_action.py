"""
Finite group actions on the ground set and their invariant ornamentations.

A group acting on [n] acts on pointed sets by g.(S, i) = (g(S), g(i)). When
the building set is preserved, the ornamentations with rho(g(i)) = g(rho(i))
for every g form a sublattice.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..building.pointed_building_set import PointedBuildingSet
from ..exceptions import ActionDoesNotPreserveBuildingSetError, CapExceededError, PreconditionError
from ..lattice.enumeration import OrnLattice
from ..lattice.properties import PropertyReport
from ..ornament.operations import binary_join, binary_meet
from ..ornament.ornamentation import Ornamentation, validate_orn
from ..universe.subsets import SubsetMask, bit, iter_members, popcount
from ..utils.config import default_cap
from ..utils.debug import debug as logger

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class GroupAction:
    """
    The group generated by a list of permutations of [n].

    Attributes:
        n: Ground set size.
        generators: Each generator maps i to generator[i].
    """

    n: int
    generators: Tuple[Permutation, ...]

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.generators)
        for g in gens:
            if sorted(g) != list(range(self.n)):
                raise PreconditionError(f"{[k + 1 for k in g]} is not a permutation of [1..{self.n}]")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def trivial(cls, n: int) -> "GroupAction":
        return cls(n, ())

    @classmethod
    def rotation(cls, n: int, step: int) -> "GroupAction":
        """Cyclic group generated by i -> i + step (mod n)."""
        return cls(n, (tuple((i + step) % n for i in range(n)),))

    def elements(self) -> List[Permutation]:
        """All group elements, identity first, by closing the generators under composition."""
        identity = tuple(range(self.n))
        seen = {identity}
        ordered = [identity]
        frontier = [identity]
        while frontier:
            nxt = []
            for h in frontier:
                for g in self.generators:
                    composed = tuple(g[h[i]] for i in range(self.n))
                    if composed not in seen:
                        seen.add(composed)
                        ordered.append(composed)
                        nxt.append(composed)
            frontier = nxt
        return ordered

    @staticmethod
    def act_on_mask(g: Permutation, mask: SubsetMask) -> SubsetMask:
        image = 0
        for i in iter_members(mask):
            image |= bit(g[i])
        return image

    def preservation_witness(self, b: PointedBuildingSet) -> Optional[Tuple[int, SubsetMask, int]]:
        """(generator index, mask, point) of the first pointed set moved outside b, or None."""
        if b.n != self.n:
            raise PreconditionError(f"action on {self.n} points, building set on {b.n}")
        for k, g in enumerate(self.generators):
            for mask, point in b.pointed_sets():
                if not b.contains(self.act_on_mask(g, mask), g[point]):
                    return k, mask, point
        return None

    def preserves(self, b: PointedBuildingSet) -> bool:
        return self.preservation_witness(b) is None

    def check_preserves(self, b: PointedBuildingSet) -> None:
        witness = self.preservation_witness(b)
        if witness is not None:
            raise ActionDoesNotPreserveBuildingSetError(*witness)

    def is_invariant(self, rho: Sequence[SubsetMask]) -> bool:
        values = list(rho)
        return all(values[g[i]] == self.act_on_mask(g, values[i]) for g in self.generators for i in range(self.n))

    def orbits(self) -> List[SubsetMask]:
        """Orbits of points, ordered by their smallest member."""
        group = self.elements()
        result = []
        covered = 0
        for i in range(self.n):
            if covered >> i & 1:
                continue
            orbit = 0
            for g in group:
                orbit |= bit(g[i])
            covered |= orbit
            result.append(orbit)
        return result


def invariant_elements(b: PointedBuildingSet, action: GroupAction, lat: OrnLattice) -> List[Ornamentation]:
    """
    Elements of lat fixed by the action, in lattice order.

    Raises:
        ActionDoesNotPreserveBuildingSetError: Some generator moves a pointed set out of b.
    """
    action.check_preserves(b)
    return [rho for rho in lat.elements if action.is_invariant(rho.values)]


def invariant_lattice(b: PointedBuildingSet, action: GroupAction, lat: OrnLattice) -> OrnLattice:
    """The invariant sublattice as an OrnLattice over b."""
    return OrnLattice(b, (rho.values for rho in invariant_elements(b, action, lat)), lat.labels)


def enumerate_invariant(
    b: PointedBuildingSet, action: GroupAction, cap: Optional[int] = None
) -> List[Ornamentation]:
    """
    Invariant ornamentations without enumerating the whole lattice.

    Choose a value for one representative per orbit, among the fiber members
    fixed by its stabilizer, transport it along the orbit, and backtrack on
    transitivity with the points already assigned.

    Raises:
        ActionDoesNotPreserveBuildingSetError: Some generator moves a pointed set out of b.
        CapExceededError: More than ``cap`` invariant ornamentations exist.
    """
    action.check_preserves(b)
    cap = default_cap() if cap is None else cap
    group = action.elements()
    plans = []
    for orbit in action.orbits():
        rep = (orbit & -orbit).bit_length() - 1
        stabilizer = [g for g in group if g[rep] == rep]
        transport = {}
        for g in group:
            transport.setdefault(g[rep], g)
        choices = [
            mask for mask in b.fibers[rep] if all(action.act_on_mask(g, mask) == mask for g in stabilizer)
        ]
        plans.append((orbit, rep, sorted(transport.items()), choices))
    plans.sort(key=lambda plan: (-popcount(b.max_member(plan[1])), plan[1]))

    values = [0] * b.n
    found: List[Tuple[int, ...]] = []

    def compatible(points: SubsetMask, assigned: SubsetMask) -> bool:
        for i in iter_members(points):
            for j in iter_members(values[i] & assigned):
                if values[j] & ~values[i]:
                    return False
            for j in iter_members(assigned):
                if values[j] >> i & 1 and values[i] & ~values[j]:
                    return False
        return True

    def extend(depth: int, assigned: SubsetMask) -> None:
        if depth == len(plans):
            found.append(tuple(validate_orn(b, values).values))
            if len(found) > cap:
                raise CapExceededError(len(found), cap)
            return
        orbit, rep, transport, choices = plans[depth]
        for mask in choices:
            for point, g in transport:
                values[point] = action.act_on_mask(g, mask)
            if compatible(orbit, assigned | orbit):
                extend(depth + 1, assigned | orbit)

    extend(0, 0)
    found.sort()
    logger.info(f"{len(found)} invariant ornamentations under a group of order {len(group)}")
    return [Ornamentation(v) for v in found]


def is_sublattice(b: PointedBuildingSet, elements: Sequence[Ornamentation]) -> PropertyReport:
    """
    Closure of a set of ornamentations under binary meet and join.

    Returns:
        PropertyReport: ``witness`` is (rho, sigma, operation) for the first
        pair whose meet or join leaves the set.
    """
    present = {rho.values for rho in elements}
    checked = 0
    for rho, sigma in combinations(elements, 2):
        checked += 1
        if binary_meet(b, rho, sigma).values not in present:
            return PropertyReport(False, (rho, sigma, "meet"), f"meet of {rho.format()} and {sigma.format()}", checked)
        if binary_join(b, rho, sigma).values not in present:
            return PropertyReport(False, (rho, sigma, "join"), f"join of {rho.format()} and {sigma.format()}", checked)
    return PropertyReport(True, checked=checked)
