"""Meet, join, principal embeddings and bounded searches in the ornamentation lattice."""

from typing import Iterable, Iterator, List, Sequence

from ..building.pointed_building_set import PointedBuildingSet, PointedSet
from ..exceptions import PreconditionError
from ..universe.graphs import Digraph, reachable_from
from ..universe.subsets import SubsetMask, bit, full_mask, is_subset, iter_members
from .ornamentation import Ornamentation, is_ornamentation, validate_orn


def _nonempty(omega: Iterable[Ornamentation]) -> List[Ornamentation]:
    items = list(omega)
    if not items:
        raise PreconditionError("meet and join need a nonempty set of ornamentations")
    return items


def meet(b: PointedBuildingSet, omega: Iterable[Ornamentation]) -> Ornamentation:
    """
    Greatest lower bound of a nonempty set of ornamentations.

    lambda(i) is the largest member of fiber i inside the intersection of the
    rho(i), obtained as the union of all fiber members inside it.
    """
    items = _nonempty(omega)
    values = []
    for i in range(b.n):
        common = full_mask(b.n)
        for rho in items:
            common &= rho.values[i]
        values.append(b.largest_member_within(i, common))
    return Ornamentation(tuple(values))


def join(b: PointedBuildingSet, omega: Iterable[Ornamentation]) -> Ornamentation:
    """
    Least upper bound of a nonempty set of ornamentations.

    sigma(i) is the union of the rho(i). D(sigma) has an edge i -> j for every
    j in sigma(i); nu(i) is the union of sigma(j) over all j reachable from i.
    """
    items = _nonempty(omega)
    sigma = []
    for i in range(b.n):
        union = 0
        for rho in items:
            union |= rho.values[i]
        sigma.append(union)
    graph = Digraph(b.n, tuple(mask & ~bit(i) for i, mask in enumerate(sigma)))
    everything = full_mask(b.n)
    values = []
    for i in range(b.n):
        nu = 0
        for j in iter_members(reachable_from(graph, i, everything)):
            nu |= sigma[j]
        values.append(nu)
    return Ornamentation(tuple(values))


def binary_meet(b: PointedBuildingSet, first: Ornamentation, second: Ornamentation) -> Ornamentation:
    return meet(b, (first, second))


def binary_join(b: PointedBuildingSet, first: Ornamentation, second: Ornamentation) -> Ornamentation:
    return join(b, (first, second))


def principal_embed(b: PointedBuildingSet, pointed: PointedSet) -> Ornamentation:
    """
    The ornamentation with value S at the point of (S, i) and singletons elsewhere.

    Raises:
        NotInFiberError: (S, i) is not in b.
        NotTransitiveError: never for a valid building set; surfaced if it happens.
    """
    mask, point = pointed
    values = [bit(k) for k in range(b.n)]
    values[point] = mask
    return validate_orn(b, values)


def ornamentations_between(
    b: PointedBuildingSet, floor: Sequence[SubsetMask], ceiling: Sequence[SubsetMask]
) -> Iterator[Ornamentation]:
    """All ornamentations rho with floor(i) <= rho(i) <= ceiling(i) pointwise, by backtracking."""
    n = b.n
    choices = [[m for m in b.fibers[i] if is_subset(floor[i], m) and is_subset(m, ceiling[i])] for i in range(n)]
    values = [0] * n

    def extend(i: int) -> Iterator[Ornamentation]:
        if i == n:
            if is_ornamentation(b, values):
                yield Ornamentation(tuple(values))
            return
        assigned = full_mask(i) if i else 0
        for candidate in choices[i]:
            if any(values[j] & ~candidate for j in iter_members(candidate & assigned)):
                continue
            if any(values[j] >> i & 1 and candidate & ~values[j] for j in iter_members(assigned)):
                continue
            values[i] = candidate
            yield from extend(i + 1)

    yield from extend(0)


def largest_between(
    b: PointedBuildingSet, floor: Sequence[SubsetMask], ceiling: Sequence[SubsetMask]
) -> Ornamentation:
    """
    The greatest ornamentation between floor and ceiling.

    Raises:
        PreconditionError: The interval is empty or has no greatest element.
    """
    found = list(ornamentations_between(b, floor, ceiling))
    if not found:
        raise PreconditionError("no ornamentation lies between the given bounds")
    top = join(b, found)
    if top not in found:
        raise PreconditionError("the ornamentations between the given bounds have no greatest element")
    return top
