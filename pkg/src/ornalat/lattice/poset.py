"""
Finite posets whose elements are tuples of masks ordered componentwise by inclusion.

Elements are kept in lexicographic order of their mask tuples. Componentwise
inclusion implies lexicographic order, so element indices form a linear
extension: index 0 is the bottom and the last index is the top whenever they
exist. Up-sets, down-sets and covers are stored as Python integers used as
bitsets over element indices.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..exceptions import PreconditionError
from ..universe.subsets import bit, iter_members, popcount
from ..utils.debug import debug as logger

Vector = Tuple[int, ...]


def _row_to_mask(row: np.ndarray) -> int:
    """Pack a boolean row into an integer with bit k set iff row[k]."""
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


class FinitePoset:
    """
    A finite poset of mask vectors under componentwise inclusion.

    Attributes:
        vectors: Sorted, duplicate-free element vectors.
        index: Map from vector to element index.
        up: up[x] has bit y set iff x <= y (reflexive).
        down: down[y] has bit x set iff x <= y (reflexive).
        upper_covers: upper_covers[x] has bit y set iff x is covered by y.
        lower_covers: lower_covers[y] has bit x set iff x is covered by y.
        covers: Cover pairs (lo, hi) in increasing order of lo, then hi.
    """

    def __init__(self, vectors: Iterable[Sequence[int]]):
        self.vectors: List[Vector] = sorted({tuple(v) for v in vectors})
        if not self.vectors:
            raise PreconditionError("a poset needs at least one element")
        widths = {len(v) for v in self.vectors}
        if len(widths) != 1:
            raise PreconditionError("all element vectors must have the same length")
        self.index: Dict[Vector, int] = {v: k for k, v in enumerate(self.vectors)}
        self._compute_order()
        self._ranks: Optional[List[int]] = None
        self._coranks: Optional[List[int]] = None

    def _compute_order(self) -> None:
        m = len(self.vectors)
        matrix = np.array(self.vectors, dtype=np.uint64).reshape(m, -1)
        complement = ~matrix
        self.up: List[int] = []
        self.down: List[int] = []
        for x in range(m):
            above = ~np.any(matrix[x] & complement, axis=1)
            below = ~np.any(matrix & complement[x], axis=1)
            self.up.append(_row_to_mask(above))
            self.down.append(_row_to_mask(below))

        strict_up = [self.up[x] & ~bit(x) for x in range(m)]
        self.upper_covers: List[int] = []
        for x in range(m):
            reachable_in_two = 0
            for z in iter_members(strict_up[x]):
                reachable_in_two |= strict_up[z]
            self.upper_covers.append(strict_up[x] & ~reachable_in_two)

        self.lower_covers: List[int] = [0] * m
        self.covers: List[Tuple[int, int]] = []
        for x in range(m):
            for y in iter_members(self.upper_covers[x]):
                self.lower_covers[y] |= bit(x)
                self.covers.append((x, y))
        logger.debug(f"poset with {m} elements and {len(self.covers)} covers")

    def __len__(self) -> int:
        return len(self.vectors)

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def bottom(self) -> Optional[int]:
        everything = (1 << len(self)) - 1
        return 0 if self.up[0] == everything else None

    def top(self) -> Optional[int]:
        last = len(self) - 1
        everything = (1 << len(self)) - 1
        return last if self.down[last] == everything else None

    def join_index(self, x: int, y: int) -> Optional[int]:
        """Least upper bound of x and y, or None when it does not exist."""
        common = self.up[x] & self.up[y]
        if not common:
            return None
        candidate = (common & -common).bit_length() - 1
        return candidate if common & ~self.up[candidate] == 0 else None

    def meet_index(self, x: int, y: int) -> Optional[int]:
        """Greatest lower bound of x and y, or None when it does not exist."""
        common = self.down[x] & self.down[y]
        if not common:
            return None
        candidate = common.bit_length() - 1
        return candidate if common & ~self.down[candidate] == 0 else None

    def missing_joins(self) -> List[Tuple[int, int]]:
        return [
            (x, y) for x in range(len(self)) for y in range(x + 1, len(self)) if self.join_index(x, y) is None
        ]

    def missing_meets(self) -> List[Tuple[int, int]]:
        return [
            (x, y) for x in range(len(self)) for y in range(x + 1, len(self)) if self.meet_index(x, y) is None
        ]

    def is_lattice(self) -> bool:
        return not self.missing_joins() and not self.missing_meets()

    def ranks(self) -> List[int]:
        """Length (in covers) of the longest chain from a minimal element to each element."""
        if self._ranks is None:
            ranks = [0] * len(self)
            for y in range(len(self)):
                below = self.lower_covers[y]
                if below:
                    ranks[y] = 1 + max(ranks[x] for x in iter_members(below))
            self._ranks = ranks
        return self._ranks

    def coranks(self) -> List[int]:
        """Length (in covers) of the longest chain from each element to a maximal element."""
        if self._coranks is None:
            coranks = [0] * len(self)
            for x in reversed(range(len(self))):
                above = self.upper_covers[x]
                if above:
                    coranks[x] = 1 + max(coranks[y] for y in iter_members(above))
            self._coranks = coranks
        return self._coranks

    def longest_chain(self) -> int:
        """Number of elements in a longest chain."""
        return max(self.ranks()) + 1

    def join_irreducible_indices(self) -> List[int]:
        """Elements with exactly one lower cover."""
        return [y for y in range(len(self)) if popcount(self.lower_covers[y]) == 1]

    def meet_irreducible_indices(self) -> List[int]:
        """Elements with exactly one upper cover."""
        return [x for x in range(len(self)) if popcount(self.upper_covers[x]) == 1]

    def atoms(self) -> List[int]:
        bottom = self.bottom()
        return [] if bottom is None else list(iter_members(self.upper_covers[bottom]))

    def subposet(self, indices: Iterable[int]) -> "FinitePoset":
        """Induced subposet on the given elements."""
        return FinitePoset(self.vectors[k] for k in indices)

    def hasse_graph(self, reverse: bool = False) -> nx.DiGraph:
        """
        Hasse diagram as a networkx digraph with edges lo -> hi.

        Each node carries a ``signature`` attribute (rank, corank, number of
        upper covers, number of lower covers). With ``reverse`` the edges and
        the signature are those of the dual poset.
        """
        ranks, coranks = self.ranks(), self.coranks()
        graph = nx.DiGraph()
        for k in range(len(self)):
            ups, downs = popcount(self.upper_covers[k]), popcount(self.lower_covers[k])
            if reverse:
                signature = (coranks[k], ranks[k], downs, ups)
            else:
                signature = (ranks[k], coranks[k], ups, downs)
            graph.add_node(k, signature=signature)
        for lo, hi in self.covers:
            if reverse:
                graph.add_edge(hi, lo)
            else:
                graph.add_edge(lo, hi)
        return graph
