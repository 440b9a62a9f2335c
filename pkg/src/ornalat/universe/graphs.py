"""
Directed and undirected graphs on [n] stored as per-vertex neighbour masks.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Tuple, Union

import networkx as nx

from ..exceptions import InvalidGroundSetError, PreconditionError, SpecParseError
from .subsets import SubsetMask, bit, check_ground_size, full_mask, iter_members, popcount

Edge = Tuple[int, int]


def _masks_from_edges(n: int, edges: Iterable[Edge], symmetric: bool) -> Tuple[int, ...]:
    out = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGroundSetError(f"edge ({u + 1}, {v + 1}) leaves the vertex set [1..{n}]")
        if u == v:
            raise InvalidGroundSetError(f"self-loop at {u + 1} is not allowed")
        out[u] |= bit(v)
        if symmetric:
            out[v] |= bit(u)
    return tuple(out)


@dataclass(frozen=True)
class Digraph:
    """
    Directed graph on vertices 0..n-1.

    Attributes:
        n: Number of vertices.
        out: out[v] is the mask of out-neighbours of v.
    """

    n: int
    out: Tuple[SubsetMask, ...]

    def __post_init__(self):
        check_ground_size(self.n)
        if len(self.out) != self.n:
            raise InvalidGroundSetError(f"expected {self.n} adjacency masks, got {len(self.out)}")
        limit = full_mask(self.n)
        for v, mask in enumerate(self.out):
            if mask & ~limit:
                raise InvalidGroundSetError(f"vertex {v + 1} has an out-neighbour outside [1..{self.n}]")
            if mask >> v & 1:
                raise InvalidGroundSetError(f"self-loop at {v + 1} is not allowed")

    # Constructors

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Digraph":
        check_ground_size(n)
        return cls(n, _masks_from_edges(n, edges, symmetric=False))

    @classmethod
    def edgeless(cls, n: int) -> "Digraph":
        check_ground_size(n)
        return cls(n, (0,) * n)

    @classmethod
    def path(cls, n: int) -> "Digraph":
        """Directed path 0 -> 1 -> ... -> n-1."""
        return cls.from_edges(n, ((v, v + 1) for v in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Digraph":
        """Oriented cycle 0 -> 1 -> ... -> n-1 -> 0 (n >= 2)."""
        if n < 2:
            raise PreconditionError("an oriented cycle needs at least 2 vertices")
        return cls.from_edges(n, ((v, (v + 1) % n) for v in range(n)))

    @classmethod
    def complete_dag(cls, n: int) -> "Digraph":
        """Complete graph directed by the natural order: u -> v iff u < v."""
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def complete(cls, n: int) -> "Digraph":
        """All ordered pairs of distinct vertices."""
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(n) if u != v))

    @classmethod
    def in_star(cls, n: int) -> "Digraph":
        """Star with centre 0 and every leaf pointing to the centre."""
        return cls.from_edges(n, ((leaf, 0) for leaf in range(1, n)))

    # Queries

    @property
    def edge_count(self) -> int:
        return sum(popcount(mask) for mask in self.out)

    def edges(self) -> List[Edge]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.out[u])]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.out[u] >> v & 1)

    def reversed(self) -> "Digraph":
        """The opposite digraph."""
        return Digraph.from_edges(self.n, ((v, u) for u, v in self.edges()))

    def undirected_adjacency(self) -> Tuple[SubsetMask, ...]:
        adj = list(self.out)
        for u, v in self.edges():
            adj[v] |= bit(u)
        return tuple(adj)

    def is_weakly_connected(self) -> bool:
        adj = self.undirected_adjacency()
        seen = frontier = bit(0)
        while frontier:
            nxt = 0
            for v in iter_members(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == full_mask(self.n)

    def is_tree(self) -> bool:
        """True iff the underlying undirected graph is a tree."""
        return self.edge_count == self.n - 1 and self.is_weakly_connected()

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1 with symmetric adjacency masks."""

    n: int
    adj: Tuple[SubsetMask, ...]

    def __post_init__(self):
        check_ground_size(self.n)
        if len(self.adj) != self.n:
            raise InvalidGroundSetError(f"expected {self.n} adjacency masks, got {len(self.adj)}")
        for v, mask in enumerate(self.adj):
            if mask >> v & 1:
                raise InvalidGroundSetError(f"self-loop at {v + 1} is not allowed")
            for u in iter_members(mask):
                if u >= self.n or not self.adj[u] >> v & 1:
                    raise InvalidGroundSetError(f"adjacency of {v + 1} and {u + 1} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        check_ground_size(n)
        return cls(n, _masks_from_edges(n, edges, symmetric=True))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((v, v + 1) for v in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise PreconditionError("an undirected cycle needs at least 3 vertices")
        return cls.from_edges(n, ((v, (v + 1) % n) for v in range(n)))

    @classmethod
    def star(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((0, leaf) for leaf in range(1, n)))

    @classmethod
    def edgeless(cls, n: int) -> "Graph":
        check_ground_size(n)
        return cls(n, (0,) * n)

    def edges(self) -> List[Edge]:
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u]) if u < v]

    def as_digraph(self) -> Digraph:
        """The symmetric digraph with both orientations of every edge."""
        return Digraph(self.n, self.adj)


def reachable_from(d: Digraph, source: int, within: SubsetMask) -> SubsetMask:
    """
    Vertices of ``within`` reachable from ``source`` along paths inside ``within``.

    Args:
        d: The digraph.
        source: Start vertex; must belong to ``within``.
        within: Allowed vertices.

    Returns:
        The reachable set, always containing ``source``.
    """
    if within & ~full_mask(d.n):
        raise PreconditionError("the allowed vertex set leaves the ground set")
    if not within >> source & 1:
        raise PreconditionError(f"source {source + 1} does not belong to the allowed vertex set")
    seen = frontier = bit(source)
    while frontier:
        nxt = 0
        for v in iter_members(frontier):
            nxt |= d.out[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def transitive_closure(d: Digraph) -> Digraph:
    """Digraph with u -> v iff d has a nonempty path from u to v; loops dropped."""
    everything = full_mask(d.n)
    reach = [reachable_from(d, v, everything) for v in range(d.n)]
    out = []
    for v in range(d.n):
        strict = 0
        for w in iter_members(d.out[v]):
            strict |= reach[w]
        out.append(strict & ~bit(v))
    return Digraph(d.n, tuple(out))


def directed_trees(n: int) -> Iterator[Digraph]:
    """
    Every orientation of every unlabeled tree on n vertices.

    Isomorphic orientations may repeat; callers that verify properties do not
    need deduplication.
    """
    check_ground_size(n)
    if n == 1:
        yield Digraph.edgeless(1)
        return
    for tree in nx.nonisomorphic_trees(n):
        edges = sorted(tree.edges())
        for orientation in range(1 << len(edges)):
            oriented = [(v, u) if orientation >> k & 1 else (u, v) for k, (u, v) in enumerate(edges)]
            yield Digraph.from_edges(n, oriented)


def _up_to_isomorphism(n: int, pairs: List[Edge]) -> Iterator[Digraph]:
    """Edge subsets of ``pairs``, one per isomorphism class (WL hash buckets, then VF2)."""
    buckets: Dict[str, List[nx.DiGraph]] = {}
    for choice in range(1 << len(pairs)):
        d = Digraph.from_edges(n, (pair for k, pair in enumerate(pairs) if choice >> k & 1))
        graph = d.to_networkx()
        key = nx.weisfeiler_lehman_graph_hash(graph)
        seen = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(graph, other) for other in seen):
            continue
        seen.append(graph)
        yield d


def dags(n: int) -> Iterator[Digraph]:
    """
    DAGs on n vertices up to isomorphism.

    Every DAG has a topological order, so subsets of the natural tournament
    cover all of them.
    """
    check_ground_size(n)
    yield from _up_to_isomorphism(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def digraphs(n: int) -> Iterator[Digraph]:
    """Loopless digraphs on n vertices up to isomorphism."""
    check_ground_size(n)
    yield from _up_to_isomorphism(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def parse_edge_list(text: str) -> Tuple[int, List[Edge]]:
    """
    Parse ``u v`` lines (1-based, ``#`` comments) into (n, 0-based edges).

    An optional first line ``n N`` fixes the vertex count; otherwise it is the
    largest vertex mentioned.
    """
    edges: List[Edge] = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2 and declared is None and not edges:
            try:
                declared = int(parts[1])
            except ValueError as e:
                raise SpecParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from e
            continue
        if len(parts) != 2:
            raise SpecParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as e:
            raise SpecParseError(f"line {lineno}: vertices must be integers, got {raw!r}") from e
        if u < 1 or v < 1:
            raise SpecParseError(f"line {lineno}: vertices are 1-based, got {raw!r}")
        edges.append((u - 1, v - 1))
    n = declared if declared is not None else max((max(u, v) + 1 for u, v in edges), default=0)
    if n < 1:
        raise SpecParseError("edge list names no vertices")
    return n, edges


def load_edge_list(path: Union[str, Path]) -> Tuple[int, List[Edge]]:
    """Read an edge-list file; see parse_edge_list."""
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise SpecParseError(f"cannot read edge list {path}: {e}") from e
    return parse_edge_list(text)
