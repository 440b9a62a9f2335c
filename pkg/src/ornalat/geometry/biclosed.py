"""
Biclosed ornamentations and quasitrivial operations.

An ornamentation is biclosed when its root set V(rho) is closed and coclosed
in Phi_B. Closure follows from transitivity but is still checked. On the
complete graph the biclosed ornamentations correspond to associative
quasitrivial operations via i * j = j if j in rho(i), else i.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, List, Optional, Tuple

import numpy as np

from ..building.constructors import digraphical
from ..building.pointed_building_set import PointedBuildingSet
from ..exceptions import PreconditionError
from ..lattice.enumeration import OrnLattice, enumerate_lattice
from ..ornament.ornamentation import Ornamentation, validate_orn
from ..universe.graphs import Digraph, digraphs
from ..universe.subsets import bit, check_ground_size
from ..utils.debug import debug as logger
from .roots import is_closed, is_coclosed, phi, v_of


def is_biclosed(b: PointedBuildingSet, rho: Ornamentation) -> bool:
    universe = phi(b)
    roots = v_of(rho)
    if not roots <= universe:
        raise PreconditionError(f"{rho.format()} has roots outside Phi of the building set")
    return is_closed(roots, universe) and is_coclosed(roots, universe)


@dataclass
class BiclosedSubposet:
    """
    The biclosed elements of an ornamentation lattice with the induced order.

    Attributes:
        poset: Induced subposet on the biclosed elements.
        missing_joins: Index pairs of ``poset`` without a least upper bound inside it.
        missing_meets: Index pairs of ``poset`` without a greatest lower bound inside it.
    """

    poset: OrnLattice
    missing_joins: List[Tuple[int, int]] = field(default_factory=list)
    missing_meets: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def is_lattice(self) -> bool:
        return not self.missing_joins and not self.missing_meets

    def __len__(self) -> int:
        return len(self.poset)


def bicl_subposet(lat: OrnLattice) -> BiclosedSubposet:
    b = lat.building
    universe = phi(b)
    keep = []
    for k, rho in enumerate(lat.elements):
        roots = v_of(rho)
        if is_closed(roots, universe) and is_coclosed(roots, universe):
            keep.append(k)
    poset = lat.restrict(keep)
    return BiclosedSubposet(poset, poset.missing_joins(), poset.missing_meets())


def quasitrivial_op(rho: Ornamentation) -> np.ndarray:
    """Table with table[i, j] = j if j in rho(i) else i (0-based)."""
    n = len(rho)
    table = np.empty((n, n), dtype=np.int64)
    for i, mask in enumerate(rho.values):
        for j in range(n):
            table[i, j] = j if mask >> j & 1 else i
    return table


def is_quasitrivial(table: np.ndarray) -> bool:
    n = table.shape[0]
    rows = np.arange(n)[:, None]
    cols = np.arange(n)[None, :]
    return bool(np.all((table == rows) | (table == cols)))


def is_associative(table: np.ndarray) -> bool:
    n = table.shape[0]
    left = table[table, :]
    right = table[np.arange(n)[:, None, None], table[None, :, :]]
    return bool(np.array_equal(left, right))


def ornamentation_from_table(b: PointedBuildingSet, table: np.ndarray) -> Ornamentation:
    """
    rho(i) = {j : i * j = j}; inverse of quasitrivial_op.

    Raises:
        PreconditionError: The table is not quasitrivial.
        NotTransitiveError: The table does not come from an ornamentation.
    """
    if table.shape != (b.n, b.n) or not is_quasitrivial(table):
        raise PreconditionError("expected a quasitrivial operation table on the ground set")
    values = []
    for i in range(b.n):
        mask = 0
        for j in range(b.n):
            if table[i, j] == j:
                mask |= bit(j)
        values.append(mask)
    return validate_orn(b, values)


def associative_quasitrivial_tables(n: int) -> Iterator[np.ndarray]:
    """Every associative quasitrivial table on [n], by brute force over the off-diagonal choices."""
    check_ground_size(n)
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for choice in product((False, True), repeat=len(pairs)):
        table = np.tile(np.arange(n)[:, None], (1, n))
        for (i, j), right in zip(pairs, choice):
            if right:
                table[i, j] = j
        if is_associative(table):
            yield table


@dataclass
class BiclNonLatticeWitness:
    """A digraph whose biclosed ornamentations do not form a lattice."""

    digraph: Digraph
    subposet: BiclosedSubposet

    @property
    def pair(self) -> Tuple[Ornamentation, Ornamentation]:
        pairs = self.subposet.missing_joins or self.subposet.missing_meets
        x, y = pairs[0]
        return self.subposet.poset.elements[x], self.subposet.poset.elements[y]


def find_bicl_non_lattice(max_n: int = 4, cap: Optional[int] = None) -> Optional[BiclNonLatticeWitness]:
    """First digraph on at most max_n vertices (smallest first) whose Bicl is not a lattice."""
    for n in range(1, max_n + 1):
        for d in digraphs(n):
            subposet = bicl_subposet(enumerate_lattice(digraphical(d), cap))
            if not subposet.is_lattice:
                logger.info(f"biclosed subposet of the digraph {d.edges()} is not a lattice")
                return BiclNonLatticeWitness(d, subposet)
    return None


def format_table(table: np.ndarray) -> str:
    """Row-major, 1-based."""
    return "\n".join(" ".join(str(int(v) + 1) for v in row) for row in table)
