"""
Ornamentations of a pointed building set and their componentwise order.
"""

import re
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Optional, Sequence

from ..building.pointed_building_set import PointedBuildingSet
from ..exceptions import (
    NotInFiberError,
    NotTransitiveError,
    OrnalatError,
    PreconditionError,
    SpecParseError,
)
from ..universe.subsets import SubsetMask, bit, format_mask, is_subset, iter_members, mask_of

_SET_PATTERN = re.compile(r"\{([^{}]*)\}")


@dataclass(frozen=True, order=True)
class Ornamentation:
    """
    An ornamentation, stored as its value masks.

    values[i] is the set rho(i), implicitly pointed at i. The dataclass order
    is lexicographic on the masks, which is the canonical element order of
    enumerated lattices.
    """

    values: tuple

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> SubsetMask:
        return self.values[i]

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.values)

    def format(self, labels: Optional[Sequence[str]] = None) -> str:
        """Render as ``[{1,2},{2},{3}]`` (1-based, or with custom labels)."""
        return "[" + ",".join(format_mask(mask, labels) for mask in self.values) + "]"

    def to_dict(self) -> Dict[str, Any]:
        return {"values": [[k + 1 for k in iter_members(mask)] for mask in self.values]}


def validate_orn(b: PointedBuildingSet, values: Sequence[SubsetMask]) -> Ornamentation:
    """
    Check that ``values`` is an ornamentation of ``b``.

    Args:
        b: The pointed building set.
        values: One mask per point.

    Returns:
        Ornamentation: The validated ornamentation.

    Raises:
        NotInFiberError: values[i] is not a member of fiber i.
        NotTransitiveError: j lies in values[i] but values[j] is not inside values[i].
    """
    if len(values) != b.n:
        raise PreconditionError(f"expected {b.n} values, got {len(values)}")
    for i, mask in enumerate(values):
        if not b.contains(mask, i):
            raise NotInFiberError(i, mask)
    for i, mask in enumerate(values):
        for j in iter_members(mask & ~bit(i)):
            if not is_subset(values[j], mask):
                raise NotTransitiveError(i, j)
    return Ornamentation(tuple(values))


def is_ornamentation(b: PointedBuildingSet, values: Sequence[SubsetMask]) -> bool:
    try:
        validate_orn(b, values)
    except (NotInFiberError, NotTransitiveError):
        return False
    return True


def leq(first: Ornamentation, second: Ornamentation) -> bool:
    """Componentwise inclusion."""
    return all(a & ~b == 0 for a, b in zip(first.values, second.values))


def minimum(b: PointedBuildingSet) -> Ornamentation:
    return Ornamentation(tuple(bit(i) for i in range(b.n)))


def maximum(b: PointedBuildingSet) -> Ornamentation:
    return Ornamentation(tuple(b.max_member(i) for i in range(b.n)))


def parse_ornamentation_label(
    b: PointedBuildingSet, label: str, labels: Optional[Sequence[str]] = None
) -> Ornamentation:
    """
    Parse a label produced by ``Ornamentation.format`` and validate it.

    Raises:
        SpecParseError: The text is not a list of braced sets.
    """
    groups = _SET_PATTERN.findall(label)
    if len(groups) != b.n:
        raise SpecParseError(f"expected {b.n} sets in label {label!r}, found {len(groups)}")
    lookup = {str(name): k for k, name in enumerate(labels)} if labels is not None else None
    values = []
    for group in groups:
        items = [item.strip() for item in group.split(",") if item.strip()]
        try:
            if lookup is None:
                indices = [int(item) - 1 for item in items]
            else:
                indices = [lookup[item] for item in items]
        except (KeyError, ValueError) as e:
            raise SpecParseError(f"unknown member in label {label!r}: {e}") from e
        values.append(mask_of(indices, b.n))
    return validate_orn(b, values)


def ornamentation_from_dict(b: PointedBuildingSet, data: Dict[str, Any]) -> Ornamentation:
    """Read the ``{"values": [[members...], ...]}`` form (1-based) and validate it."""
    try:
        raw = data["values"]
        values = [mask_of((int(k) - 1 for k in members), b.n) for members in raw]
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, OrnalatError):
            raise
        raise SpecParseError(f"ornamentation JSON needs a 'values' list of integer lists: {e}") from e
    return validate_orn(b, values)
