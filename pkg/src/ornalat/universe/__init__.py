"""
Ground-set primitives for pointed building sets.

Subsets of [n] are plain integers used as bit vectors (n <= 64). Graphs keep
one neighbour mask per vertex.

Classes:
    Digraph: Directed graph with out-neighbour masks
    Graph: Undirected graph with symmetric adjacency masks
"""

from .graphs import (
    Digraph,
    Graph,
    dags,
    digraphs,
    directed_trees,
    load_edge_list,
    parse_edge_list,
    reachable_from,
    transitive_closure,
)
from .subsets import (
    MAX_GROUND_SIZE,
    SubsetMask,
    bit,
    format_mask,
    full_mask,
    is_subset,
    iter_members,
    mask_of,
    members,
    parse_members,
    popcount,
)

__all__ = [
    "MAX_GROUND_SIZE",
    "Digraph",
    "Graph",
    "SubsetMask",
    "bit",
    "dags",
    "digraphs",
    "directed_trees",
    "format_mask",
    "full_mask",
    "is_subset",
    "iter_members",
    "load_edge_list",
    "mask_of",
    "members",
    "parse_edge_list",
    "parse_members",
    "popcount",
    "reachable_from",
    "transitive_closure",
]
