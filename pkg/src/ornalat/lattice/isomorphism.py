"""
Poset isomorphism and anti-isomorphism between Hasse diagrams.

Two finite posets are isomorphic iff their Hasse diagrams are isomorphic as
digraphs. The search is networkx's VF2 matcher with node invariants (rank,
corank, numbers of upper and lower covers) used to prune candidate pairs.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Optional

from networkx.algorithms.isomorphism import DiGraphMatcher

from ..utils.debug import debug as logger
from .poset import FinitePoset


@dataclass
class IsomorphismResult:
    """
    Outcome of iso_check.

    Attributes:
        isomorphic: Whether a (anti-)isomorphism exists.
        mapping: Element index of the first poset -> element index of the second.
        reason: Why the check failed, when it did.
    """

    isomorphic: bool
    mapping: Optional[Dict[int, int]] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.isomorphic


def _same_signature(first: dict, second: dict) -> bool:
    return first["signature"] == second["signature"]


def iso_check(first: FinitePoset, second: FinitePoset, anti: bool = False) -> IsomorphismResult:
    """
    Search for an order isomorphism (or anti-isomorphism) between two posets.

    Args:
        first: The source poset.
        second: The target poset.
        anti: Look for an order-reversing bijection instead.

    Returns:
        IsomorphismResult: the bijection when found. A size mismatch is a
        fast negative with reason ``"size mismatch"``.
    """
    if len(first) != len(second):
        return IsomorphismResult(False, reason="size mismatch")
    graph_a = first.hasse_graph()
    graph_b = second.hasse_graph(reverse=anti)
    if graph_a.number_of_edges() != graph_b.number_of_edges():
        return IsomorphismResult(False, reason="cover count mismatch")
    signatures_a = Counter(data["signature"] for _, data in graph_a.nodes(data=True))
    signatures_b = Counter(data["signature"] for _, data in graph_b.nodes(data=True))
    if signatures_a != signatures_b:
        return IsomorphismResult(False, reason="invariant mismatch")

    matcher = DiGraphMatcher(graph_a, graph_b, node_match=_same_signature)
    if not matcher.is_isomorphic():
        return IsomorphismResult(False, reason="no bijection preserves covers")
    mapping = dict(sorted(matcher.mapping.items()))
    logger.debug(f"{'anti-' if anti else ''}isomorphism found on {len(first)} elements")
    return IsomorphismResult(True, mapping)


def is_order_isomorphism(first: FinitePoset, second: FinitePoset, mapping: Dict[int, int], anti: bool = False) -> bool:
    """Check a candidate bijection against the full order relation."""
    if sorted(mapping) != list(range(len(first))) or sorted(mapping.values()) != list(range(len(second))):
        return False
    for x in range(len(first)):
        for y in range(len(first)):
            expected = second.leq(mapping[y], mapping[x]) if anti else second.leq(mapping[x], mapping[y])
            if first.leq(x, y) != expected:
                return False
    return True
