"""
Signed and rotated cycles, and the cyclic Tamari lattice.

The signed cycle on {-n..-1, 1..n} is 1 -> 2 -> ... -> n -> -1 -> ... -> -n -> 1.
Internally position p < n carries label p + 1 and position n + p carries
-(p + 1), so the cycle is the plain oriented cycle on 2n positions and the
sign action is rotation by n. More generally Z/mZ acts on the mn-cycle by
rotation by n.

An invariant value rho(i) on such a cycle is either an arc of at most n
vertices starting at i or the whole cycle. Its size |rho(i)| is the arc
length, with the whole cycle counted as n + 1, and an invariant ornamentation
is determined by the sizes at positions 0..n-1.

Arcs (i, j) have 1 <= i <= n and i < j <= i + n. An arc (i, j) with i > n
stands for its translate (i - n, j - n); cyclic arc torsion classes are
closed under shortening arcs and under composing (i, j), (j, k) when
k - i <= n.
"""

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..building.constructors import digraphical
from ..building.pointed_building_set import PointedBuildingSet
from ..exceptions import PreconditionError
from ..lattice.enumeration import OrnLattice
from ..lattice.isomorphism import iso_check
from ..lattice.poset import FinitePoset
from ..lattice.properties import PropertyReport
from ..ornament.ornamentation import Ornamentation, validate_orn
from ..universe.graphs import Digraph
from ..universe.subsets import SubsetMask, bit, full_mask, popcount
from ..utils.debug import debug as logger
from .group_action import GroupAction, enumerate_invariant

Arc = Tuple[int, int]


def _require_n(n: int, smallest: int = 2) -> None:
    if n < smallest:
        raise PreconditionError(f"n must be at least {smallest}, got {n}")


def signed_cycle(n: int) -> Digraph:
    """The 2n-vertex oriented cycle in position coordinates."""
    _require_n(n, 1)
    return Digraph.cycle(2 * n)


def signed_label(p: int, n: int) -> str:
    return str(p + 1) if p < n else str(-(p - n + 1))


def signed_labels(n: int) -> List[str]:
    return [signed_label(p, n) for p in range(2 * n)]


def sign_action(n: int) -> GroupAction:
    """i <-> -i, that is rotation by n on 2n positions."""
    return GroupAction.rotation(2 * n, n)


def signed_building_set(n: int) -> PointedBuildingSet:
    return digraphical(signed_cycle(n))


def csym_atam(n: int, cap: Optional[int] = None) -> OrnLattice:
    """Sign-invariant ornamentations of the signed 2n-cycle, with signed labels."""
    _require_n(n)
    b = signed_building_set(n)
    elements = enumerate_invariant(b, sign_action(n), cap)
    return OrnLattice(b, (rho.values for rho in elements), signed_labels(n))


def rotated_cycle_building_set(m: int, n: int) -> PointedBuildingSet:
    return digraphical(Digraph.cycle(m * n))


def rotated_cycle_lattice(m: int, n: int, cap: Optional[int] = None) -> OrnLattice:
    """Ornamentations of the mn-cycle invariant under rotation by n."""
    if m < 2 or n < 1 or m * n < 2:
        raise PreconditionError(f"need m >= 2 and n >= 1, got m={m}, n={n}")
    b = rotated_cycle_building_set(m, n)
    elements = enumerate_invariant(b, GroupAction.rotation(m * n, n), cap)
    return OrnLattice(b, (rho.values for rho in elements))


def orn_size(value: SubsetMask, n: int, total: int) -> int:
    """|S|, except that the whole cycle on ``total`` positions counts as n + 1."""
    return n + 1 if value == full_mask(total) else popcount(value)


def _arc_mask(start: int, length: int, total: int) -> SubsetMask:
    mask = 0
    for offset in range(length):
        mask |= bit((start + offset) % total)
    return mask


def lengths_of(rho: Ornamentation, n: int) -> Tuple[int, ...]:
    """Number of arcs at each start point 1..n: |rho(i)| - 1."""
    total = len(rho)
    return tuple(orn_size(rho[p], n, total) - 1 for p in range(n))


def _from_lengths(lengths: Sequence[int], n: int, total: int) -> List[SubsetMask]:
    values = [0] * total
    for p in range(total):
        k = lengths[p % n]
        values[p] = full_mask(total) if k == n else _arc_mask(p, k + 1, total)
    return values


@dataclass(frozen=True)
class ArcTorsionClass:
    """
    A set of arcs (i, j), 1-based, with 1 <= i <= n and i < j <= i + n.
    """

    n: int
    arcs: FrozenSet[Arc]

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        for i, j in self.arcs:
            if not (1 <= i <= self.n and i < j <= i + self.n):
                raise PreconditionError(f"({i}, {j}) is not an arc for n={self.n}")

    @classmethod
    def from_lengths(cls, n: int, lengths: Sequence[int]) -> "ArcTorsionClass":
        return cls(n, frozenset((i, i + d) for i in range(1, n + 1) for d in range(1, lengths[i - 1] + 1)))

    def lengths(self) -> Tuple[int, ...]:
        counts = [0] * self.n
        for i, _ in self.arcs:
            counts[i - 1] += 1
        return tuple(counts)

    def vector(self) -> Tuple[SubsetMask, ...]:
        """Per start point, the mask of offsets j - i - 1 of its arcs."""
        rows = [0] * self.n
        for i, j in self.arcs:
            rows[i - 1] |= bit(j - i - 1)
        return tuple(rows)

    def _contains_translate(self, i: int, j: int) -> bool:
        shift = (i - 1) // self.n * self.n
        return (i - shift, j - shift) in self.arcs

    def is_downward_closed(self) -> bool:
        return all((i, k) in self.arcs for i, j in self.arcs for k in range(i + 1, j))

    def is_composition_closed(self) -> bool:
        for i, j in self.arcs:
            for k in range(j + 1, i + self.n + 1):
                if self._contains_translate(j, k) and (i, k) not in self.arcs:
                    return False
        return True

    def is_valid(self) -> bool:
        return self.is_downward_closed() and self.is_composition_closed()

    def format(self) -> str:
        return "{" + ", ".join(f"({i},{j})" for i, j in sorted(self.arcs)) + "}"


class CyclicTamariLattice(FinitePoset):
    """Cyclic arc torsion classes ordered by inclusion."""

    def __init__(self, n: int, classes: Iterable[ArcTorsionClass]):
        super().__init__(c.vector() for c in classes)
        self.n = n
        self.classes = [ArcTorsionClass.from_lengths(n, [popcount(row) for row in v]) for v in self.vectors]

    def index_of(self, arcs: ArcTorsionClass) -> int:
        return self.index[arcs.vector()]


def cyclic_tamari(n: int) -> CyclicTamariLattice:
    """
    All cyclic arc torsion classes for n.

    Downward closure makes a class a choice of how many arcs leave each start
    point, so candidates are length vectors in {0..n}^n filtered by the
    composition rule.
    """
    _require_n(n)
    classes = []
    for lengths in product(range(n + 1), repeat=n):
        candidate = ArcTorsionClass.from_lengths(n, lengths)
        if candidate.is_composition_closed():
            classes.append(candidate)
    logger.info(f"{len(classes)} cyclic arc torsion classes for n={n}")
    return CyclicTamariLattice(n, classes)


def csym_to_ctam(n: int, rho: Ornamentation) -> ArcTorsionClass:
    """Arcs (i, i + j) for 1 <= j < |rho(i)|, i = 1..n."""
    if len(rho) != 2 * n:
        raise PreconditionError(f"expected a signed ornamentation on {2 * n} points")
    return ArcTorsionClass.from_lengths(n, lengths_of(rho, n))


def ctam_to_csym(n: int, arcs: ArcTorsionClass) -> Ornamentation:
    """Inverse of csym_to_ctam."""
    if arcs.n != n:
        raise PreconditionError(f"arc class for n={arcs.n}, expected {n}")
    return validate_orn(signed_building_set(n), _from_lengths(arcs.lengths(), n, 2 * n))


def chain_statistic(n: int, rho: Ornamentation) -> int:
    """Sum of |rho(i)| over i = 1..n minus binom(#full values, 2)."""
    sizes = [orn_size(rho[p], n, len(rho)) for p in range(n)]
    return sum(sizes) - comb(sizes.count(n + 1), 2)


def longest_chain_witness(n: int) -> List[Ornamentation]:
    """
    The chain rho_{i,j}, 1 <= i <= j <= n, in lexicographic order, then the top.

    rho_{i,j} is full at k < i, the arc {i..j} at i and singletons after,
    extended to negatives by symmetry.
    """
    _require_n(n)
    b = signed_building_set(n)
    chain = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            lengths = [n] * (i - 1) + [j - i] + [0] * (n - i)
            chain.append(validate_orn(b, _from_lengths(lengths, n, 2 * n)))
    chain.append(validate_orn(b, _from_lengths([n] * n, n, 2 * n)))
    return chain


def rotated_cycle_map(l: int, m: int, n: int, rho: Ornamentation) -> Ornamentation:  # noqa: E741
    """
    Transport an invariant ornamentation of the ln-cycle to the mn-cycle.

    Sizes up to n are kept at the same positions; the whole cycle goes to the
    whole cycle; values elsewhere follow by rotation.
    """
    if len(rho) != l * n:
        raise PreconditionError(f"expected an ornamentation of the {l * n}-cycle")
    b = rotated_cycle_building_set(m, n)
    return validate_orn(b, _from_lengths(lengths_of(rho, n), n, m * n))


def _check_bijective_order_map(
    source: FinitePoset, target: FinitePoset, images: List[Optional[int]], name: str
) -> PropertyReport:
    if None in images or len(set(images)) != len(target) or len(source) != len(target):
        return PropertyReport(False, None, f"{name} is not a bijection ({len(source)} vs {len(target)} elements)")
    checked = 0
    for x in range(len(source)):
        for y in range(len(source)):
            checked += 1
            if source.leq(x, y) != target.leq(images[x], images[y]):
                return PropertyReport(False, (x, y), f"{name} does not preserve the order at {(x, y)}", checked)
    if not iso_check(source, target):
        return PropertyReport(False, None, f"iso_check disagrees with {name}", checked)
    return PropertyReport(True, detail=f"{len(source)} elements", checked=checked)


def verify_csym_ctam(n: int, cap: Optional[int] = None) -> PropertyReport:
    """csym_to_ctam is an order isomorphism onto cyclic_tamari(n) and ctam_to_csym inverts it."""
    lat = csym_atam(n, cap)
    ctam = cyclic_tamari(n)
    images: List[Optional[int]] = []
    for rho in lat.elements:
        arcs = csym_to_ctam(n, rho)
        if not arcs.is_valid():
            return PropertyReport(False, rho, f"{rho.format(lat.labels)} maps to an invalid arc set")
        if ctam_to_csym(n, arcs) != rho:
            return PropertyReport(False, rho, f"roundtrip fails at {rho.format(lat.labels)}")
        images.append(ctam.index.get(arcs.vector()))
    return _check_bijective_order_map(lat, ctam, images, "csym_to_ctam")


def verify_rotated_cycle_map(l: int, m: int, n: int, cap: Optional[int] = None) -> PropertyReport:  # noqa: E741
    """rotated_cycle_map(l, m, n, .) is an order isomorphism of the invariant lattices."""
    source = rotated_cycle_lattice(l, n, cap)
    target = rotated_cycle_lattice(m, n, cap)
    images = [target.index.get(rotated_cycle_map(l, m, n, rho).values) for rho in source.elements]
    return _check_bijective_order_map(source, target, images, "rotated_cycle_map")


def verify_chain_statistic(n: int, lat: Optional[OrnLattice] = None) -> PropertyReport:
    """The statistic increases strictly along every cover and the witness chain is saturated."""
    lat = lat if lat is not None else csym_atam(n)
    stats = [chain_statistic(n, rho) for rho in lat.elements]
    for lo, hi in lat.covers:
        if stats[lo] >= stats[hi]:
            return PropertyReport(False, (lo, hi), f"statistic does not increase on {lat.label(lo)} < {lat.label(hi)}")
    expected = comb(n + 1, 2) + 1
    chain = longest_chain_witness(n)
    indices = [lat.index.get(rho.values) for rho in chain]
    if None in indices or any(not lat.leq(a, b) or a == b for a, b in zip(indices, indices[1:])):
        return PropertyReport(False, chain, "witness chain is not a strict chain of the lattice")
    if len(chain) != expected or lat.longest_chain() != expected:
        return PropertyReport(
            False, chain, f"longest chain {lat.longest_chain()}, witness {len(chain)}, expected {expected}"
        )
    return PropertyReport(True, detail=f"longest chain {expected}", checked=len(lat.covers))
