"""
Total orders on [n], their inversion sets, and the weak order.

A total order t is stored as ``perm``, the list of elements from smallest to
largest under t. Its inversion set holds the pairs (i, j) with i < j in the
natural order but j before i in t; it is kept as one mask per i. Inversion
sets are exactly the subsets of {(i, j) : i < j} that are transitively closed
and coclosed, and the weak order is inclusion of inversion sets.

The 312-avoiding orders correspond to ornamentations of the Tamari building
set via rho(a) = {b : (a, b) inverted} + {a}.
"""

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import permutations
from typing import Iterable, List, Optional, Sequence, Tuple

from ..building.constructors import left_segment
from ..building.pointed_building_set import PointedBuildingSet
from ..exceptions import Not312AvoidingError, PreconditionError, SpecParseError
from ..lattice.enumeration import enumerate_lattice
from ..lattice.poset import FinitePoset
from ..lattice.properties import PropertyReport
from ..ornament.ornamentation import Ornamentation, validate_orn
from ..universe.graphs import Digraph, transitive_closure
from ..universe.subsets import SubsetMask, bit, check_ground_size, full_mask, iter_members
from ..utils.debug import debug as logger


@dataclass(frozen=True)
class TotalOrder:
    """
    A total order on [n].

    Attributes:
        perm: perm[k] is the k-th smallest element (0-based).
    """

    perm: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise PreconditionError(f"{[k + 1 for k in self.perm]} is not a permutation of [1..{len(self.perm)}]")

    @classmethod
    def identity(cls, n: int) -> "TotalOrder":
        return cls(tuple(range(n)))

    @classmethod
    def reverse(cls, n: int) -> "TotalOrder":
        return cls(tuple(reversed(range(n))))

    @classmethod
    def parse(cls, text: str) -> "TotalOrder":
        """Read ``3,1,2`` or ``3 1 2`` (1-based)."""
        try:
            items = [int(item) - 1 for item in text.replace(",", " ").split()]
        except ValueError as e:
            raise SpecParseError(f"bad total order {text!r}: {e}") from e
        return cls(tuple(items))

    @property
    def n(self) -> int:
        return len(self.perm)

    def positions(self) -> List[int]:
        pos = [0] * self.n
        for k, element in enumerate(self.perm):
            pos[element] = k
        return pos

    def reversed(self) -> "TotalOrder":
        return TotalOrder(tuple(reversed(self.perm)))

    def format(self) -> str:
        return ",".join(str(k + 1) for k in self.perm)


@dataclass(frozen=True)
class InversionSet:
    """
    Pairs (i, j), i < j, stored as rows[i] = mask of the j paired with i.
    """

    n: int
    rows: Tuple[SubsetMask, ...]

    def pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.rows) for j in iter_members(row)]

    def contains(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def issubset(self, other: "InversionSet") -> bool:
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def is_transitively_closed(self) -> bool:
        for i, row in enumerate(self.rows):
            for j in iter_members(row):
                if self.rows[j] & ~row:
                    return False
        return True

    def is_transitively_coclosed(self) -> bool:
        """(i, k) present implies (i, j) or (j, k) present for every i < j < k."""
        for i, row in enumerate(self.rows):
            for k in iter_members(row):
                for j in range(i + 1, k):
                    if not (row >> j & 1 or self.rows[j] >> k & 1):
                        return False
        return True


def inversion_set(t: TotalOrder) -> InversionSet:
    pos = t.positions()
    rows = []
    for i in range(t.n):
        row = 0
        for j in range(i + 1, t.n):
            if pos[j] < pos[i]:
                row |= bit(j)
        rows.append(row)
    return InversionSet(t.n, tuple(rows))


def order_from_inversions(n: int, rows: Sequence[SubsetMask]) -> TotalOrder:
    """
    The total order with the given inversion set.

    Raises:
        PreconditionError: The rows are not a closed and coclosed set of pairs i < j.
    """
    check_ground_size(n)
    inv = InversionSet(n, tuple(rows))
    if len(inv.rows) != n:
        raise PreconditionError(f"expected {n} rows, got {len(inv.rows)}")
    for i, row in enumerate(inv.rows):
        if row & full_mask(i + 1) or row & ~full_mask(n):
            raise PreconditionError(f"row {i + 1} holds pairs outside {{(i, j) : i < j <= {n}}}")
    if not inv.is_transitively_closed() or not inv.is_transitively_coclosed():
        raise PreconditionError("pairs are not the inversion set of a total order")

    def compare(a: int, b: int) -> int:
        if a == b:
            return 0
        lo, hi = min(a, b), max(a, b)
        hi_first = inv.contains(lo, hi)
        first = hi if hi_first else lo
        return -1 if a == first else 1

    return TotalOrder(tuple(sorted(range(n), key=cmp_to_key(compare))))


def find_312_pattern(t: TotalOrder) -> Optional[Tuple[int, int, int]]:
    """First a < b < c with c before a before b in t, or None."""
    pos = t.positions()
    for a in range(t.n):
        for b in range(a + 1, t.n):
            if pos[a] > pos[b]:
                continue
            for c in range(b + 1, t.n):
                if pos[c] < pos[a]:
                    return a, b, c
    return None


def is_312_avoiding(t: TotalOrder) -> bool:
    return find_312_pattern(t) is None


def _require_tamari(b: PointedBuildingSet) -> None:
    if b != left_segment(b.n):
        raise PreconditionError("expected the building set of left segments of [n]")


def orn_to_order(b: PointedBuildingSet, rho: Ornamentation) -> TotalOrder:
    """The total order inverting exactly the pairs (a, c) with c in rho(a)."""
    _require_tamari(b)
    validate_orn(b, rho.values)
    return order_from_inversions(b.n, [mask & ~bit(a) for a, mask in enumerate(rho.values)])


def order_to_orn(b: PointedBuildingSet, t: TotalOrder) -> Ornamentation:
    """
    Raises:
        Not312AvoidingError: t contains the pattern 312.
    """
    _require_tamari(b)
    if t.n != b.n:
        raise PreconditionError(f"order on {t.n} elements, building set on {b.n}")
    pattern = find_312_pattern(t)
    if pattern is not None:
        raise Not312AvoidingError(*pattern)
    inv = inversion_set(t)
    return validate_orn(b, [row | bit(a) for a, row in enumerate(inv.rows)])


def _common_n(orders: Iterable[TotalOrder]) -> Tuple[int, List[TotalOrder]]:
    items = list(orders)
    if not items:
        raise PreconditionError("weak order joins and meets need a nonempty set of orders")
    n = items[0].n
    if any(t.n != n for t in items):
        raise PreconditionError("all orders must live on the same ground set")
    return n, items


def weak_join(orders: Iterable[TotalOrder]) -> TotalOrder:
    """Least upper bound: the transitive closure of the union of inversion sets."""
    n, items = _common_n(orders)
    union = [0] * n
    for t in items:
        for i, row in enumerate(inversion_set(t).rows):
            union[i] |= row
    closure = transitive_closure(Digraph(n, tuple(union)))
    return order_from_inversions(n, closure.out)


def weak_meet(orders: Iterable[TotalOrder]) -> TotalOrder:
    """Greatest lower bound, via order reversal (an anti-automorphism)."""
    _, items = _common_n(orders)
    return weak_join(t.reversed() for t in items).reversed()


def all_orders(n: int) -> List[TotalOrder]:
    check_ground_size(n)
    return [TotalOrder(p) for p in permutations(range(n))]


def weak_order_poset(n: int) -> FinitePoset:
    """Weak order on [n] as the poset of inversion-set rows under inclusion."""
    return FinitePoset(inversion_set(t).rows for t in all_orders(n))


def weak312_iso_check(n: int) -> PropertyReport:
    """
    Compare the 312-avoiding weak order on [n] with the Tamari lattice of [n].

    Checks that order_to_orn is a bijection onto the enumerated lattice, that
    orn_to_order inverts it, and that inclusion of inversion sets matches the
    lattice order in both directions.
    """
    b = left_segment(n)
    lat = enumerate_lattice(b)
    orders = [t for t in all_orders(n) if is_312_avoiding(t)]
    images = []
    for t in orders:
        rho = order_to_orn(b, t)
        if orn_to_order(b, rho) != t:
            return PropertyReport(False, t, f"roundtrip fails at {t.format()}")
        images.append(lat.index.get(rho.values))
    if None in images or len(set(images)) != len(lat) or len(orders) != len(lat):
        return PropertyReport(False, None, f"{len(orders)} avoiding orders vs {len(lat)} lattice elements")
    inversions = [inversion_set(t) for t in orders]
    checked = 0
    for x, t in enumerate(orders):
        for y, s in enumerate(orders):
            checked += 1
            if inversions[x].issubset(inversions[y]) != lat.leq(images[x], images[y]):
                return PropertyReport(False, (t, s), f"order mismatch between {t.format()} and {s.format()}", checked)
    logger.info(f"312-avoiding weak order on {n} elements matches the Tamari lattice ({len(lat)} elements)")
    return PropertyReport(True, detail=f"{len(lat)} elements", checked=checked)
