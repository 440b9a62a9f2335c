"""
Errors raised by the ornamentation-lattice package.

Every error keeps its witness as 0-based attributes; messages show the
1-based indices users see in the CLI.
"""

from typing import Optional, Tuple


def _fmt(mask: int) -> str:
    # subsets imports this module, so format_mask is resolved at call time
    from .universe.subsets import format_mask

    return format_mask(mask)


class OrnalatError(ValueError):
    """Base class for all package errors."""


class InvalidGroundSetError(OrnalatError):
    """Ground size outside 1..64 or an index outside the ground set."""


class PreconditionError(OrnalatError):
    """An operation was called outside its precondition."""


class SpecParseError(OrnalatError):
    """A building-set specification (CLI flag, edge list, JSON) is malformed."""


# Building sets


class BuildingSetError(OrnalatError):
    """A candidate family violates the pointed building set axioms."""


class NotPointedError(BuildingSetError):
    def __init__(self, mask: int, point: int):
        self.mask = mask
        self.point = point
        super().__init__(f"set {_fmt(mask)} listed in fiber {point + 1} does not contain {point + 1}")


class MissingSingletonError(BuildingSetError):
    def __init__(self, point: int):
        self.point = point
        super().__init__(f"singleton axiom: ({{{point + 1}}}, {point + 1}) is missing")


class UnionViolationError(BuildingSetError):
    def __init__(self, first: int, second: int, point: int):
        self.first = first
        self.second = second
        self.point = point
        super().__init__(
            f"union axiom: {_fmt(first)} and {_fmt(second)} are pointed at {point + 1} "
            f"but their union {_fmt(first | second)} is not"
        )


class TransitivityViolationError(BuildingSetError):
    def __init__(self, outer: int, point: int, inner: int, inner_point: int):
        self.outer = outer
        self.point = point
        self.inner = inner
        self.inner_point = inner_point
        super().__init__(
            f"transitivity axiom: ({_fmt(outer)}, {point + 1}) and "
            f"({_fmt(inner)}, {inner_point + 1}) are present but "
            f"({_fmt(outer | inner)}, {point + 1}) is not"
        )


class NotABuildingSetError(BuildingSetError):
    """An unpointed family is not a building set."""

    def __init__(self, message: str, witness: Tuple[int, ...] = ()):
        self.witness = witness
        super().__init__(message)


class NotASubBuildingSetError(BuildingSetError):
    def __init__(self, point: int, mask: Optional[int] = None):
        self.point = point
        self.mask = mask
        if mask is None:
            detail = "ground sets differ"
        else:
            detail = f"({_fmt(mask)}, {point + 1}) is missing from the larger family"
        super().__init__(f"not a sub-building set: {detail}")


# Ornamentations


class OrnamentationError(OrnalatError):
    """A value array is not an ornamentation of the given building set."""


class NotInFiberError(OrnamentationError):
    def __init__(self, point: int, mask: int):
        self.point = point
        self.mask = mask
        super().__init__(f"value {_fmt(mask)} at {point + 1} is not a member of fiber {point + 1}")


class NotTransitiveError(OrnamentationError):
    def __init__(self, point: int, inner: int):
        self.point = point
        self.inner = inner
        super().__init__(
            f"not transitive: {inner + 1} lies in the value at {point + 1} "
            f"but the value at {inner + 1} is not contained in it"
        )


# Lattices and maps


class CapExceededError(OrnalatError):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"enumeration exceeded the cap of {cap} elements ({count} found so far)")


class PreconditionNotAcyclicError(PreconditionError):
    def __init__(self, first: int, second: int):
        self.first = first
        self.second = second
        super().__init__(
            f"building set is not acyclic: {first + 1} and {second + 1} lie in sets pointed at each other"
        )


class NotATreeError(PreconditionError):
    """The underlying undirected graph of a digraph is not a tree."""


class Not312AvoidingError(OrnalatError):
    def __init__(self, a: int, b: int, c: int):
        self.pattern = (a, b, c)
        super().__init__(
            f"order contains the pattern 312 at {a + 1} < {b + 1} < {c + 1} "
            f"(ordered {c + 1}, {a + 1}, {b + 1})"
        )


class ActionDoesNotPreserveBuildingSetError(OrnalatError):
    def __init__(self, generator: int, mask: int, point: int):
        self.generator = generator
        self.mask = mask
        self.point = point
        super().__init__(
            f"generator {generator + 1} moves ({_fmt(mask)}, {point + 1}) outside the building set"
        )
