"""
Ornamentations of the complete graph as transitive relations.

Every subset containing i is connected in K_n, so an ornamentation of
graphical(K_n) is any choice of rho(i) containing i with j in rho(i) implying
rho(j) inside rho(i). Reading j in rho(i) as i -> j gives exactly the
reflexive transitive relations (preorders) on [n], hence the finite
topologies on [n].
"""

from typing import FrozenSet, Iterable, List, Tuple

from ..building.pointed_building_set import PointedBuildingSet
from ..ornament.ornamentation import Ornamentation, validate_orn
from ..universe.subsets import bit, iter_members

Pair = Tuple[int, int]


def ornamentation_to_relation(rho: Ornamentation) -> FrozenSet[Pair]:
    """Pairs (i, j), i != j, with j in rho(i)."""
    return frozenset((i, j) for i, mask in enumerate(rho.values) for j in iter_members(mask) if j != i)


def relation_to_ornamentation(b: PointedBuildingSet, pairs: Iterable[Pair]) -> Ornamentation:
    """
    Inverse of ornamentation_to_relation; the relation must already be transitive.

    Raises:
        NotTransitiveError: The relation is not transitive.
        NotInFiberError: Some rho(i) is missing from b (b is not the complete graph).
    """
    values: List[int] = [bit(i) for i in range(b.n)]
    for i, j in pairs:
        if i != j:
            values[i] |= bit(j)
    return validate_orn(b, values)


def is_transitive_relation(n: int, pairs: Iterable[Pair]) -> bool:
    """Independent check on pair sets (loops ignored)."""
    relation = {(i, j) for i, j in pairs if i != j}
    for i, j in relation:
        for k in range(n):
            if (j, k) in relation and k != i and (i, k) not in relation:
                return False
    return True
