"""Integer-backed subsets of a ground set [n], n <= 64."""

from typing import Iterable, Iterator, List, Optional, Sequence

from ..exceptions import InvalidGroundSetError

# One machine word per subset
MAX_GROUND_SIZE = 64

SubsetMask = int


def check_ground_size(n: int) -> None:
    """Reject ground sizes outside 1..MAX_GROUND_SIZE."""
    if not 1 <= n <= MAX_GROUND_SIZE:
        raise InvalidGroundSetError(f"ground size must lie in 1..{MAX_GROUND_SIZE}, got {n}")


def bit(i: int) -> SubsetMask:
    return 1 << i


def full_mask(n: int) -> SubsetMask:
    """Mask with bits 0..n-1 set."""
    return (1 << n) - 1


def mask_of(indices: Iterable[int], n: Optional[int] = None) -> SubsetMask:
    """Build a mask from 0-based indices, checking them against n when given."""
    mask = 0
    for i in indices:
        if i < 0 or (n is not None and i >= n):
            raise InvalidGroundSetError(f"index {i + 1} lies outside the ground set of size {n}")
        mask |= 1 << i
    return mask


def iter_members(mask: SubsetMask) -> Iterator[int]:
    """Yield the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: SubsetMask) -> List[int]:
    return list(iter_members(mask))


def popcount(mask: SubsetMask) -> int:
    return mask.bit_count()


def is_subset(inner: SubsetMask, outer: SubsetMask) -> bool:
    return inner & ~outer == 0


def lowest_member(mask: SubsetMask) -> int:
    """Smallest index in a nonempty mask."""
    return (mask & -mask).bit_length() - 1


def format_mask(mask: SubsetMask, labels: Optional[Sequence[str]] = None) -> str:
    """
    Render a mask for users: 1-based members in braces, or custom labels.

    Args:
        mask: The subset to render.
        labels: Optional label per 0-based index (signed labels, for instance).

    Returns:
        A string such as ``{1,3}``.
    """
    if labels is None:
        parts = [str(i + 1) for i in iter_members(mask)]
    else:
        parts = [str(labels[i]) for i in iter_members(mask)]
    return "{" + ",".join(parts) + "}"


def parse_members(items: Iterable[int], n: int) -> SubsetMask:
    """Convert a 1-based member list to a mask over [n]."""
    return mask_of((int(item) - 1 for item in items), n)
