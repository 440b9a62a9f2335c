"""
Pointed building sets and the three axioms they satisfy.

A pointed building set over [n] is stored fiber by fiber: ``fibers[i]`` lists
the masks S with (S, i) in the family, sorted by (size, mask). In a valid
building set the first entry of every fiber is the singleton and the last is
the fiber maximum.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from ..exceptions import (
    InvalidGroundSetError,
    MissingSingletonError,
    NotPointedError,
    PreconditionError,
    TransitivityViolationError,
    UnionViolationError,
)
from ..universe.subsets import (
    SubsetMask,
    bit,
    check_ground_size,
    format_mask,
    full_mask,
    is_subset,
    iter_members,
    popcount,
)
from ..utils.debug import debug as logger


class PointedSet(NamedTuple):
    """A subset together with a distinguished member."""

    mask: SubsetMask
    point: int

    def format(self, labels: Optional[Sequence[str]] = None) -> str:
        point = labels[self.point] if labels is not None else self.point + 1
        return f"({format_mask(self.mask, labels)}, {point})"


def _fiber_key(mask: SubsetMask) -> Tuple[int, int]:
    return popcount(mask), mask


def normalize_fiber(masks: Iterable[SubsetMask]) -> Tuple[SubsetMask, ...]:
    """Deduplicate and sort a fiber by (size, mask)."""
    return tuple(sorted(set(masks), key=_fiber_key))


@dataclass(frozen=True)
class PointedBuildingSet:
    """
    A finite pointed building set.

    Instances built directly are only normalised; use ``validate`` (or a
    constructor from ``building.constructors``) for axiom-checked ones.

    Attributes:
        n: Ground set size.
        fibers: fibers[i] holds the masks pointed at i, sorted by (size, mask).
    """

    n: int
    fibers: Tuple[Tuple[SubsetMask, ...], ...]
    _lookup: Tuple[FrozenSet[SubsetMask], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        check_ground_size(self.n)
        if len(self.fibers) != self.n:
            raise InvalidGroundSetError(f"expected {self.n} fibers, got {len(self.fibers)}")
        normalized = tuple(normalize_fiber(fiber) for fiber in self.fibers)
        limit = full_mask(self.n)
        for i, fiber in enumerate(normalized):
            for mask in fiber:
                if mask & ~limit:
                    raise InvalidGroundSetError(f"fiber {i + 1} has a set outside [1..{self.n}]")
                if not mask >> i & 1:
                    raise NotPointedError(mask, i)
        object.__setattr__(self, "fibers", normalized)
        object.__setattr__(self, "_lookup", tuple(frozenset(fiber) for fiber in normalized))

    def fiber(self, i: int) -> Tuple[SubsetMask, ...]:
        return self.fibers[i]

    def contains(self, mask: SubsetMask, point: int) -> bool:
        return mask in self._lookup[point]

    def max_member(self, i: int) -> SubsetMask:
        """The largest set pointed at i."""
        return self.fibers[i][-1]

    def largest_member_within(self, i: int, bound: SubsetMask) -> SubsetMask:
        """
        Union of the members of fiber i contained in ``bound``.

        By the union axiom this union is itself the largest such member.
        """
        if not bound >> i & 1:
            raise PreconditionError(f"bound {format_mask(bound)} does not contain the point {i + 1}")
        result = 0
        for mask in self.fibers[i]:
            if mask & ~bound == 0:
                result |= mask
        return result

    def pointed_sets(self) -> Iterator[PointedSet]:
        for i, fiber in enumerate(self.fibers):
            for mask in fiber:
                yield PointedSet(mask, i)

    @property
    def size(self) -> int:
        """Number of pointed sets."""
        return sum(len(fiber) for fiber in self.fibers)

    def format(self, labels: Optional[Sequence[str]] = None) -> str:
        lines = []
        for i, fiber in enumerate(self.fibers):
            name = labels[i] if labels is not None else i + 1
            lines.append(f"B|{name}: " + " ".join(format_mask(mask, labels) for mask in fiber))
        return "\n".join(lines)


def validate(n: int, fibers: Sequence[Iterable[SubsetMask]]) -> PointedBuildingSet:
    """
    Check the pointed building set axioms and return the validated family.

    Axioms are checked in the order singletons, transitivity, unions; the
    first violation found is raised.

    Args:
        n: Ground set size.
        fibers: fibers[i] is an iterable of masks pointed at i.

    Returns:
        PointedBuildingSet: The normalised, validated family.

    Raises:
        MissingSingletonError: ({i}, i) is absent.
        TransitivityViolationError: (S, i), (T, j) with j in S but (S | T, i) absent.
        UnionViolationError: A fiber is not closed under pairwise union.
    """
    candidate = PointedBuildingSet(n, tuple(tuple(fiber) for fiber in fibers))

    for i in range(n):
        if not candidate.contains(bit(i), i):
            raise MissingSingletonError(i)

    for i, fiber in enumerate(candidate.fibers):
        for outer in fiber:
            for j in iter_members(outer & ~bit(i)):
                for inner in candidate.fibers[j]:
                    if not candidate.contains(outer | inner, i):
                        raise TransitivityViolationError(outer, i, inner, j)

    for i, fiber in enumerate(candidate.fibers):
        for a, first in enumerate(fiber):
            for second in fiber[a + 1 :]:
                if not candidate.contains(first | second, i):
                    raise UnionViolationError(first, second, i)

    logger.debug(f"validated pointed building set on {n} points with {candidate.size} pointed sets")
    return candidate


def acyclicity_witness(b: PointedBuildingSet) -> Optional[Tuple[int, int]]:
    """First pair i < j with j in a set pointed at i and i in a set pointed at j."""
    for i in range(b.n):
        top_i = b.max_member(i)
        for j in iter_members(top_i):
            if j > i and b.max_member(j) >> i & 1:
                return i, j
    return None


def is_acyclic(b: PointedBuildingSet) -> bool:
    return acyclicity_witness(b) is None


def fibers_are_chains(b: PointedBuildingSet) -> bool:
    """True iff every fiber is totally ordered by inclusion."""
    for fiber in b.fibers:
        for smaller, larger in zip(fiber, fiber[1:]):
            if not is_subset(smaller, larger):
                return False
    return True


def fiber_covers(fiber: Sequence[SubsetMask]) -> List[Tuple[SubsetMask, SubsetMask]]:
    """Cover pairs (S, T) of a fiber ordered by inclusion."""
    covers = []
    for lower in fiber:
        above = [mask for mask in fiber if mask != lower and is_subset(lower, mask)]
        for upper in above:
            if not any(mid != upper and is_subset(mid, upper) for mid in above):
                covers.append((lower, upper))
    return covers


def has_unit_step_fibers(b: PointedBuildingSet) -> bool:
    """True iff every cover inside every fiber adds exactly one element."""
    return all(
        popcount(upper & ~lower) == 1 for fiber in b.fibers for lower, upper in fiber_covers(fiber)
    )


def fiber_atoms(b: PointedBuildingSet, i: int) -> List[SubsetMask]:
    singleton = bit(i)
    return [upper for lower, upper in fiber_covers(b.fibers[i]) if lower == singleton]


def fibers_are_atomic(b: PointedBuildingSet) -> bool:
    """True iff every member of every fiber is the union of the fiber atoms it contains."""
    for i, fiber in enumerate(b.fibers):
        atoms = fiber_atoms(b, i)
        for mask in fiber:
            union = bit(i)
            for atom in atoms:
                if is_subset(atom, mask):
                    union |= atom
            if union != mask:
                return False
    return True


def fiber_join_irreducibles(b: PointedBuildingSet) -> List[PointedSet]:
    """
    Join-irreducible members of each fiber lattice.

    (S, i) qualifies when S is not the singleton and the union of the members
    strictly inside S falls short of S.
    """
    result = []
    for i, fiber in enumerate(b.fibers):
        for mask in fiber:
            if mask == bit(i):
                continue
            below = 0
            for other in fiber:
                if other != mask and is_subset(other, mask):
                    below |= other
            if below != mask:
                result.append(PointedSet(mask, i))
    return result
