"""
Constructors for the standard families of pointed building sets.

Digraphical and graphical families, the two pointings of an unpointed
building set, left segments of a chain, pointwise union closures, and the
small towers used to exercise projection maps.
"""

from typing import Dict, Iterable, List, Sequence, Set, Tuple

from ..exceptions import InvalidGroundSetError, NotABuildingSetError, PreconditionError
from ..universe.graphs import Digraph, Graph
from ..universe.subsets import (
    SubsetMask,
    bit,
    check_ground_size,
    format_mask,
    full_mask,
    iter_members,
    lowest_member,
)
from ..utils.debug import debug as logger
from .pointed_building_set import PointedBuildingSet, PointedSet, normalize_fiber, validate


def _connected_sets(d: Digraph, v: int) -> List[SubsetMask]:
    """All S containing v such that every vertex of S is reachable from v inside S."""
    start = bit(v)
    found = {start}
    stack = [(start, d.out[v] & ~start)]
    while stack:
        current, frontier = stack.pop()
        for w in iter_members(frontier):
            grown = current | bit(w)
            if grown in found:
                continue
            found.add(grown)
            stack.append((grown, (frontier | d.out[w]) & ~grown))
    return list(found)


def digraphical(d: Digraph) -> PointedBuildingSet:
    """
    The digraphical pointed building set B(D).

    fibers[v] consists of the v-connected sets: sets S containing v in which
    every vertex is reachable from v by a path staying in S.
    """
    fibers = tuple(normalize_fiber(_connected_sets(d, v)) for v in range(d.n))
    b = PointedBuildingSet(d.n, fibers)
    logger.debug(f"digraphical building set on {d.n} vertices: {b.size} pointed sets")
    return b


def graphical(g: Graph) -> PointedBuildingSet:
    """Connected vertex sets of g, pointed at each of their members."""
    return digraphical(g.as_digraph())


def _normalize_family(family: Iterable[SubsetMask], n: int) -> Set[SubsetMask]:
    check_ground_size(n)
    limit = full_mask(n)
    result = set()
    for mask in family:
        if mask == 0:
            raise NotABuildingSetError("building sets do not contain the empty set")
        if mask & ~limit:
            raise InvalidGroundSetError(f"set {format_mask(mask)} leaves the ground set [1..{n}]")
        result.add(mask)
    return result


def check_building_set(family: Iterable[SubsetMask], n: int) -> Set[SubsetMask]:
    """
    Check the unpointed building set axioms and return the family as a set.

    Raises:
        NotABuildingSetError: A singleton is missing or two intersecting
            members have a union outside the family.
    """
    members = _normalize_family(family, n)
    for i in range(n):
        if bit(i) not in members:
            raise NotABuildingSetError(f"singleton {{{i + 1}}} is missing", (bit(i),))
    ordered = sorted(members)
    for a, first in enumerate(ordered):
        for second in ordered[a + 1 :]:
            if first & second and (first | second) not in members:
                raise NotABuildingSetError(
                    f"{format_mask(first)} and {format_mask(second)} intersect "
                    f"but their union {format_mask(first | second)} is missing",
                    (first, second),
                )
    return members


def from_building_set_all_points(family: Iterable[SubsetMask], n: int) -> PointedBuildingSet:
    """Point every member S of a building set at each of its elements."""
    members = check_building_set(family, n)
    fibers = [[mask for mask in members if mask >> i & 1] for i in range(n)]
    return PointedBuildingSet(n, tuple(tuple(fiber) for fiber in fibers))


def from_building_set_min_points(family: Iterable[SubsetMask], n: int) -> PointedBuildingSet:
    """
    Point every member S of a building set at min(S) only.

    Singletons are kept for every point. The result is validated, so a family
    whose min-pointing breaks transitivity raises instead of being repaired.
    """
    members = check_building_set(family, n)
    fibers: List[List[SubsetMask]] = [[bit(i)] for i in range(n)]
    for mask in members:
        fibers[lowest_member(mask)].append(mask)
    return validate(n, fibers)


def left_segment(n: int) -> PointedBuildingSet:
    """Intervals [a, b] pointed at their left end; the Tamari building set."""
    check_ground_size(n)
    fibers = []
    for a in range(n):
        fibers.append(tuple(full_mask(b + 1) & ~full_mask(a) for b in range(a, n)))
    return PointedBuildingSet(n, tuple(fibers))


def pointwise_union_closure(
    pointed_sets: Iterable[PointedSet], n: int
) -> Tuple[Tuple[SubsetMask, ...], ...]:
    """
    Close each fiber of a family of pointed sets under nonempty unions.

    Points with no pointed set get an empty fiber.
    """
    check_ground_size(n)
    closures: List[Set[SubsetMask]] = [set() for _ in range(n)]
    for mask, point in pointed_sets:
        if not 0 <= point < n or not mask >> point & 1 or mask & ~full_mask(n):
            raise PreconditionError(f"({format_mask(mask)}, {point + 1}) is not a pointed subset of [1..{n}]")
        closure = closures[point]
        if mask in closure:
            continue
        closure |= {mask} | {mask | other for other in closure}
    return tuple(normalize_fiber(closure) for closure in closures)


def from_union_closed_family(family: Iterable[SubsetMask], m: int) -> PointedBuildingSet:
    """
    Realise a union-closed family over [m] as an ornamentation lattice.

    The ground set is [m] plus one extra point (index m). Sets Z of the family
    become (Z + {m}, m); every other fiber is a singleton. The ornamentation
    lattice is isomorphic to the family, with the empty set added, under
    inclusion.
    """
    check_ground_size(m + 1)
    limit = full_mask(m)
    members = set(family)
    for first in members:
        if first & ~limit:
            raise InvalidGroundSetError(f"set {format_mask(first)} leaves [1..{m}]")
        for second in members:
            if first | second not in members:
                raise PreconditionError(
                    f"family is not union-closed: {format_mask(first)} | {format_mask(second)} is missing"
                )
    apex = bit(m)
    fibers = [(bit(i),) for i in range(m)]
    fibers.append(tuple({apex} | {mask | apex for mask in members}))
    return validate(m + 1, fibers)


def chain_tower_level(n: int) -> PointedBuildingSet:
    """Initial segments [1..i] pointed at 1, plus singletons; a chain of n ornamentations."""
    check_ground_size(n)
    fibers = [tuple(full_mask(k) for k in range(1, n + 1))]
    fibers.extend((bit(i),) for i in range(1, n))
    return PointedBuildingSet(n, tuple(fibers))


def boolean_tower_level(n: int) -> PointedBuildingSet:
    """All sets containing the first point, pointed there, on n + 1 points; Boolean of rank n."""
    check_ground_size(n + 1)
    fibers = [tuple((rest << 1) | 1 for rest in range(1 << n))]
    fibers.extend((bit(i),) for i in range(1, n + 1))
    return PointedBuildingSet(n + 1, tuple(fibers))


def union_of_fibers(
    buildings: Sequence[PointedBuildingSet],
) -> Tuple[Tuple[SubsetMask, ...], ...]:
    """Fiberwise union of building sets over a common ground set."""
    n = buildings[0].n
    if any(b.n != n for b in buildings):
        raise PreconditionError("building sets must share the ground set")
    merged: Dict[int, Set[SubsetMask]] = {i: set() for i in range(n)}
    for b in buildings:
        for i, fiber in enumerate(b.fibers):
            merged[i].update(fiber)
    return tuple(normalize_fiber(merged[i]) for i in range(n))
