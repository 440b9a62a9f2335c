"""
Projection maps between nested pointed building sets.

When every fiber of ``small`` is contained in the matching fiber of ``big``
(over a common ground set), an ornamentation of ``big`` projects to the
ornamentation of ``small`` taking at each point the largest small member
inside its value. Projections are order-preserving and compose along towers,
but they need not preserve joins.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence

from ..building.constructors import (
    boolean_tower_level,
    chain_tower_level,
    pointwise_union_closure,
)
from ..building.pointed_building_set import PointedBuildingSet, validate
from ..exceptions import NotASubBuildingSetError, PreconditionError
from ..lattice.enumeration import OrnLattice, enumerate_lattice
from ..lattice.properties import PropertyReport
from ..ornament.operations import binary_join
from ..ornament.ornamentation import Ornamentation, leq, validate_orn
from ..universe.subsets import bit, full_mask, mask_of
from ..utils.debug import debug as logger


def is_sub_building_set(small: PointedBuildingSet, big: PointedBuildingSet) -> bool:
    if small.n != big.n:
        return False
    return all(big.contains(mask, i) for i, fiber in enumerate(small.fibers) for mask in fiber)


def check_sub_building_set(small: PointedBuildingSet, big: PointedBuildingSet) -> None:
    """
    Raises:
        NotASubBuildingSetError: Ground sizes differ or a small pointed set is missing from big.
    """
    if small.n != big.n:
        raise NotASubBuildingSetError(0)
    for i, fiber in enumerate(small.fibers):
        for mask in fiber:
            if not big.contains(mask, i):
                raise NotASubBuildingSetError(i, mask)


def pad_building_set(b: PointedBuildingSet, n: int) -> PointedBuildingSet:
    """Extend b to the ground set [n] with singleton-only fibers on the new points."""
    if n < b.n:
        raise PreconditionError(f"cannot pad a building set on {b.n} points down to {n}")
    fibers = list(b.fibers) + [(bit(i),) for i in range(b.n, n)]
    return PointedBuildingSet(n, tuple(fibers))


def projection(small: PointedBuildingSet, big: PointedBuildingSet, rho: Ornamentation) -> Ornamentation:
    """
    Project an ornamentation of ``big`` onto ``small``.

    Raises:
        NotASubBuildingSetError: small is not fiberwise contained in big.
    """
    check_sub_building_set(small, big)
    values = [small.largest_member_within(i, rho[i]) for i in range(small.n)]
    return validate_orn(small, values)


def check_join_preservation(
    small: PointedBuildingSet,
    big: PointedBuildingSet,
    lat: Optional[OrnLattice] = None,
) -> PropertyReport:
    """
    Test whether projecting commutes with binary joins on every pair of O(big).

    Returns:
        PropertyReport: ``witness`` is (sigma, rho) for the first pair whose
        projected join differs from the join of the projections.
    """
    check_sub_building_set(small, big)
    lat = lat if lat is not None else enumerate_lattice(big)
    images = [projection(small, big, rho) for rho in lat.elements]
    checked = 0
    for x, y in combinations(range(len(lat)), 2):
        checked += 1
        joined = lat.elements[lat.join(x, y)]
        if projection(small, big, joined) != binary_join(small, images[x], images[y]):
            return PropertyReport(
                False,
                (lat.elements[x], lat.elements[y]),
                f"projection does not preserve the join of {lat.label(x)} and {lat.label(y)}",
                checked,
            )
    return PropertyReport(True, checked=checked)


def check_monotone(small: PointedBuildingSet, big: PointedBuildingSet, lat: Optional[OrnLattice] = None) -> PropertyReport:
    """Check that the projection preserves every cover of O(big)."""
    check_sub_building_set(small, big)
    lat = lat if lat is not None else enumerate_lattice(big)
    images = [projection(small, big, rho) for rho in lat.elements]
    for lo, hi in lat.covers:
        if not leq(images[lo], images[hi]):
            return PropertyReport(False, (lo, hi), f"cover {lat.label(lo)} < {lat.label(hi)} is not preserved")
    return PropertyReport(True, checked=len(lat.covers))


@dataclass
class Tower:
    """
    An increasing sequence of pointed building sets over a common ground set.

    Attributes:
        levels: levels[k] is fiberwise contained in levels[k + 1].
    """

    levels: Sequence[PointedBuildingSet]
    _lattices: Dict[int, OrnLattice] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        self.levels = list(self.levels)
        if not self.levels:
            raise PreconditionError("a tower needs at least one level")
        for lower, upper in zip(self.levels, self.levels[1:]):
            check_sub_building_set(lower, upper)

    @classmethod
    def chains(cls, depth: int) -> "Tower":
        """Chain levels of sizes 1..depth, padded to [depth]."""
        return cls([pad_building_set(chain_tower_level(k), depth) for k in range(1, depth + 1)])

    @classmethod
    def booleans(cls, depth: int) -> "Tower":
        """Boolean levels of ranks 0..depth, padded to [depth + 1]."""
        return cls([pad_building_set(boolean_tower_level(k), depth + 1) for k in range(depth + 1)])

    @classmethod
    def segments(cls, n: int) -> "Tower":
        """
        Levels k = 0..n-1 keep the intervals [a, b] pointed at a with b <= max(a, k).

        The last level is the Tamari building set on [n].
        """
        levels = []
        for k in range(n):
            fibers = [
                tuple(full_mask(end + 1) & ~full_mask(a) for end in range(a, max(a, k) + 1)) for a in range(n)
            ]
            levels.append(PointedBuildingSet(n, tuple(fibers)))
        return cls(levels)

    def __len__(self) -> int:
        return len(self.levels)

    @property
    def n(self) -> int:
        return self.levels[0].n

    def lattice(self, level: int) -> OrnLattice:
        if level not in self._lattices:
            self._lattices[level] = enumerate_lattice(self.levels[level])
        return self._lattices[level]

    def project(self, source: int, target: int, rho: Ornamentation) -> Ornamentation:
        """Project an ornamentation of levels[source] down to levels[target]."""
        if target > source:
            raise PreconditionError(f"projections go down the tower, not from {source} to {target}")
        return projection(self.levels[target], self.levels[source], rho)

    def direct_limit(self) -> PointedBuildingSet:
        """Pointwise union closure of all levels."""
        pointed = [p for level in self.levels for p in level.pointed_sets()]
        return validate(self.n, pointwise_union_closure(pointed, self.n))

    def check_functoriality(self) -> PropertyReport:
        """Projecting c -> b -> a equals projecting c -> a, for all a < b < c."""
        checked = 0
        for a, b, c in combinations(range(len(self)), 3):
            for rho in self.lattice(c).elements:
                checked += 1
                direct = self.project(c, a, rho)
                composed = self.project(b, a, self.project(c, b, rho))
                if direct != composed:
                    return PropertyReport(
                        False,
                        (a, b, c, rho),
                        f"levels {c}->{b}->{a} disagree with {c}->{a} at {rho.format()}",
                        checked,
                    )
        return PropertyReport(True, checked=checked)

    def check_monotone(self) -> PropertyReport:
        """Every projection between levels preserves the order."""
        checked = 0
        for target, source in combinations(range(len(self)), 2):
            report = check_monotone(self.levels[target], self.levels[source], self.lattice(source))
            checked += report.checked
            if not report:
                report.witness = (source, target, report.witness)
                return report
        return PropertyReport(True, checked=checked)


@dataclass
class ProjectionCounterexample:
    """Two ornamentations whose join is not preserved by a projection."""

    small: PointedBuildingSet
    big: PointedBuildingSet
    sigma: Ornamentation
    rho: Ornamentation
    projected_join: Ornamentation
    join_of_projections: Ornamentation

    @property
    def differs(self) -> bool:
        return self.projected_join != self.join_of_projections


def _pointed(n: int, items: List[List[int]]) -> List[int]:
    return [mask_of((k - 1 for k in members), n) for members in items]


def projection_counterexample() -> ProjectionCounterexample:
    """
    The smallest example of a projection that is not a lattice map.

    On {1,2,3}, small has ({1,2,3},1) over the singletons and big adds
    ({1,2},1) and ({2,3},2). For sigma = [{1,2},{2},{3}] and
    rho = [{1},{2,3},{3}] the projected join has {1,2,3} at 1 while the join
    of the projections has {1}.
    """
    n = 3
    small = validate(n, [_pointed(n, [[1], [1, 2, 3]]), _pointed(n, [[2]]), _pointed(n, [[3]])])
    big = validate(n, [_pointed(n, [[1], [1, 2], [1, 2, 3]]), _pointed(n, [[2], [2, 3]]), _pointed(n, [[3]])])
    sigma = validate_orn(big, _pointed(n, [[1, 2], [2], [3]]))
    rho = validate_orn(big, _pointed(n, [[1], [2, 3], [3]]))
    projected_join = projection(small, big, binary_join(big, sigma, rho))
    join_of_projections = binary_join(small, projection(small, big, sigma), projection(small, big, rho))
    logger.debug(f"projected join {projected_join.format()} vs join of projections {join_of_projections.format()}")
    return ProjectionCounterexample(small, big, sigma, rho, projected_join, join_of_projections)
