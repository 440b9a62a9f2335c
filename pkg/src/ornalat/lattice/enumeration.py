"""
Enumeration of all ornamentations of a pointed building set.

Coordinates are assigned by backtracking in order of decreasing fiber
maximum, checking transitivity only against coordinates already fixed.
Leaves are validated in full. With more than one worker the choices of the
first coordinate are split across a process pool; the merged result is
sorted, so it does not depend on the worker count.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence, Tuple

from ..building.pointed_building_set import PointedBuildingSet
from ..exceptions import CapExceededError, PreconditionError
from ..ornament.operations import join, meet
from ..ornament.ornamentation import Ornamentation, validate_orn
from ..universe.subsets import SubsetMask, bit, iter_members, popcount
from ..utils.config import default_cap, default_threads
from ..utils.debug import debug as logger
from .poset import FinitePoset

Vector = Tuple[SubsetMask, ...]


def assignment_order(b: PointedBuildingSet) -> List[int]:
    """Coordinates by decreasing size of their fiber maximum, ties by index."""
    return sorted(range(b.n), key=lambda i: (-popcount(b.max_member(i)), i))


def _search(
    b: PointedBuildingSet,
    order: Sequence[int],
    cap: int,
    first_choice: Optional[SubsetMask] = None,
) -> Tuple[List[Vector], bool]:
    """Backtracking search; returns (ornamentations found, whether the cap was passed)."""
    n = b.n
    values = [0] * n
    found: List[Vector] = []

    def compatible(i: int, candidate: SubsetMask, assigned: int) -> bool:
        for j in iter_members(candidate & assigned):
            if values[j] & ~candidate:
                return False
        for j in iter_members(assigned):
            if values[j] >> i & 1 and candidate & ~values[j]:
                return False
        return True

    def extend(depth: int, assigned: int) -> bool:
        if depth == n:
            validate_orn(b, values)
            found.append(tuple(values))
            return len(found) > cap
        i = order[depth]
        choices = (first_choice,) if depth == 0 and first_choice is not None else b.fibers[i]
        for candidate in choices:
            if compatible(i, candidate, assigned):
                values[i] = candidate
                if extend(depth + 1, assigned | bit(i)):
                    return True
        return False

    overflow = extend(0, 0)
    return found, overflow


def _search_branch(args: Tuple[PointedBuildingSet, Sequence[int], int, SubsetMask]) -> Tuple[List[Vector], bool]:
    b, order, cap, first_choice = args
    return _search(b, order, cap, first_choice)


def enumerate_ornamentations(
    b: PointedBuildingSet, cap: Optional[int] = None, threads: Optional[int] = None
) -> List[Vector]:
    """
    All ornamentations of b as sorted value tuples.

    Args:
        b: The pointed building set.
        cap: Maximum number of ornamentations (defaults to ORNALAT_CAP or 100000).
        threads: Worker processes (defaults to ORNALAT_THREADS or 1).

    Returns:
        List of value tuples in lexicographic order.

    Raises:
        CapExceededError: More than ``cap`` ornamentations exist.
    """
    cap = default_cap() if cap is None else cap
    threads = default_threads() if threads is None else threads
    if cap <= 0:
        raise PreconditionError(f"cap must be positive, got {cap}")
    order = assignment_order(b)
    first_fiber = b.fibers[order[0]]

    if threads > 1 and len(first_fiber) > 1:
        jobs = [(b, order, cap, choice) for choice in first_fiber]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_search_branch, jobs))
        found: List[Vector] = []
        overflow = False
        for part, part_overflow in parts:
            found.extend(part)
            overflow = overflow or part_overflow
    else:
        found, overflow = _search(b, order, cap)

    if overflow or len(found) > cap:
        raise CapExceededError(len(found), cap)
    found.sort()
    logger.info(f"enumerated {len(found)} ornamentations over {b.n} points")
    return found


class OrnLattice(FinitePoset):
    """
    The ornamentation lattice O(B) of a pointed building set, or a subposet of it.

    Attributes:
        building: The pointed building set.
        labels: Optional display label per point (signed labels, for instance).
    """

    def __init__(self, building: PointedBuildingSet, vectors, labels: Optional[Sequence[str]] = None):
        super().__init__(vectors)
        self.building = building
        self.labels = list(labels) if labels is not None else None
        self._elements: Optional[List[Ornamentation]] = None

    @property
    def elements(self) -> List[Ornamentation]:
        if self._elements is None:
            self._elements = [Ornamentation(v) for v in self.vectors]
        return self._elements

    def index_of(self, rho: Ornamentation) -> int:
        return self.index[tuple(rho.values)]

    def label(self, k: int) -> str:
        return self.elements[k].format(self.labels)

    def meet(self, x: int, y: int) -> int:
        """Index of the meet computed by the building-set formula."""
        return self.index_of(meet(self.building, (self.elements[x], self.elements[y])))

    def join(self, x: int, y: int) -> int:
        """Index of the join computed by the building-set formula."""
        return self.index_of(join(self.building, (self.elements[x], self.elements[y])))

    def restrict(self, indices) -> "OrnLattice":
        """Induced subposet on the given element indices."""
        return OrnLattice(self.building, (self.vectors[k] for k in indices), self.labels)

    def __repr__(self) -> str:
        return f"OrnLattice(n={self.building.n}, elements={len(self)}, covers={len(self.covers)})"


def enumerate_lattice(
    b: PointedBuildingSet,
    cap: Optional[int] = None,
    threads: Optional[int] = None,
    labels: Optional[Sequence[str]] = None,
) -> OrnLattice:
    """Enumerate O(b) and compute its Hasse diagram."""
    return OrnLattice(b, enumerate_ornamentations(b, cap, threads), labels)
