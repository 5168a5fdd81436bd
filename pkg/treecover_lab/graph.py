"""Immutable bitset graphs and the derived-graph constructions built on them.

Vertices are the integers ``0..n-1`` and a vertex set is a plain ``int`` used
as a bitset (bit ``v`` set means ``v`` is a member), so every set operation is
a single machine-word operation for ``n <= 64``.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import PreconditionError

MAX_VERTICES = 64

VertexSet = int
Edge = Tuple[int, int]


def bit(v: int) -> VertexSet:
    return 1 << v


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def iter_bits(mask: VertexSet) -> Iterator[int]:
    """Yield the members of a vertex set in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


def to_mask(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_list(mask: VertexSet) -> List[int]:
    return list(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1`` with adjacency stored as bitsets."""

    n: int
    adj: Tuple[VertexSet, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise PreconditionError(
                f"graphs are limited to 0..{MAX_VERTICES} vertices, got {self.n}"
            )
        if len(self.adj) != self.n:
            raise PreconditionError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        degree_sum = 0
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise PreconditionError(f"vertex {v} has a neighbour outside 0..n-1")
            if row >> v & 1:
                raise PreconditionError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise PreconditionError(f"asymmetric adjacency between {v} and {u}")
            degree_sum += popcount(row)
        object.__setattr__(self, "edge_count", degree_sum // 2)

    # Construction

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) is outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_networkx(cls, nxg: nx.Graph) -> Tuple["Graph", Tuple[int, ...]]:
        """Convert a networkx graph; returns the graph and the label of each vertex."""
        labels = tuple(sorted(nxg.nodes()))
        index = {label: i for i, label in enumerate(labels)}
        edges = [(index[a], index[b]) for a, b in nxg.edges() if a != b]
        return cls.from_edges(len(labels), edges), labels

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges())
        return nxg

    # Basic queries

    @property
    def m(self) -> int:
        return self.edge_count

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> List[int]:
        return [popcount(row) for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges())}

    def leaves(self) -> List[int]:
        return [v for v in range(self.n) if popcount(self.adj[v]) == 1]

    def edges_within(self, mask: VertexSet) -> int:
        return sum(popcount(self.adj[v] & mask) for v in iter_bits(mask)) // 2

    def reach(self, start: int, within: VertexSet) -> VertexSet:
        """Vertices reachable from ``start`` through ``within`` (``start`` included)."""
        seen = frontier = 1 << start
        while frontier:
            step = 0
            for v in iter_bits(frontier):
                step |= self.adj[v]
            frontier = step & within & ~seen
            seen |= frontier
        return seen

    def components(self, within: Optional[VertexSet] = None) -> List[VertexSet]:
        """Connected components of ``G[within]``, ordered by smallest vertex."""
        rest = self.vertices if within is None else within
        found = []
        while rest:
            comp = self.reach(lowest(rest), rest)
            found.append(comp)
            rest &= ~comp
        return found

    def is_connected(self, within: Optional[VertexSet] = None) -> bool:
        mask = self.vertices if within is None else within
        if mask == 0:
            return True
        return self.reach(lowest(mask), mask) == mask

    def is_forest(self, within: Optional[VertexSet] = None) -> bool:
        mask = self.vertices if within is None else within
        return self.edges_within(mask) == popcount(mask) - len(self.components(mask))

    def is_tree(self, within: Optional[VertexSet] = None) -> bool:
        mask = self.vertices if within is None else within
        if mask == 0:
            return False
        return self.is_connected(mask) and self.edges_within(mask) == popcount(mask) - 1

    def is_clique(self, within: Optional[VertexSet] = None) -> bool:
        mask = self.vertices if within is None else within
        return all((self.adj[v] | (1 << v)) & mask == mask for v in iter_bits(mask))

    def is_independent(self, mask: VertexSet) -> bool:
        return all(not self.adj[v] & mask for v in iter_bits(mask))

    # Derived graphs

    def induced_subgraph(self, mask: VertexSet) -> Tuple["Graph", Tuple[int, ...]]:
        """``G[mask]`` relabelled to ``0..k-1``; also returns the original labels."""
        labels = tuple(iter_bits(mask))
        index = {v: i for i, v in enumerate(labels)}
        rows = []
        for v in labels:
            rows.append(to_mask(index[u] for u in iter_bits(self.adj[v] & mask)))
        return Graph(len(labels), tuple(rows)), labels

    def delete_vertices(self, mask: VertexSet) -> Tuple["Graph", Tuple[int, ...]]:
        return self.induced_subgraph(self.vertices & ~mask)

    def delete_vertex(self, v: int) -> Tuple["Graph", Tuple[int, ...]]:
        return self.delete_vertices(1 << v)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise PreconditionError(f"({u}, {v}) is not an edge")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise PreconditionError(f"loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def add_vertex(self, neighbors: VertexSet = 0) -> "Graph":
        """Append vertex ``n`` adjacent to ``neighbors``."""
        new = 1 << self.n
        rows = [row | new if neighbors >> v & 1 else row for v, row in enumerate(self.adj)]
        rows.append(neighbors)
        return Graph(self.n + 1, tuple(rows))

    def add_leaf(self, v: int) -> "Graph":
        return self.add_vertex(1 << v)

    def subdivide_edge(self, u: int, v: int) -> "Graph":
        """Replace edge ``{u, v}`` by a path through the new vertex ``n``."""
        return self.delete_edge(u, v).add_vertex((1 << u) | (1 << v))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            rows[perm[v]] = to_mask(perm[u] for u in iter_bits(row))
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def line_graph(g: Graph) -> Tuple[Graph, Tuple[Edge, ...]]:
    """L(G) over the lexicographic edge order; vertex ``i`` stands for ``edges[i]``."""
    edges = tuple(g.edges())
    incident: List[VertexSet] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = tuple((incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges))
    return Graph(len(edges), rows), edges


def triangle_augment(g: Graph) -> Tuple[Graph, VertexSet]:
    """G^triangle: vertex ``n + i`` is the edge-vertex of the i-th lexicographic edge."""
    edges = g.edges()
    rows = list(g.adj) + [0] * len(edges)
    for i, (u, v) in enumerate(edges):
        w = g.n + i
        rows[w] = (1 << u) | (1 << v)
        rows[u] |= 1 << w
        rows[v] |= 1 << w
    edge_vertices = ((1 << len(edges)) - 1) << g.n
    return Graph(g.n + len(edges), tuple(rows)), edge_vertices


def disjoint_union(g: Graph, h: Graph) -> Graph:
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, tuple(rows))


def vertex_sum(g: Graph, v: int, h: Graph, w: int) -> Graph:
    """Glue ``h`` onto ``g`` by identifying ``w`` in ``h`` with ``v`` in ``g``.

    Vertices of ``g`` keep their labels; the other vertices of ``h`` follow in
    increasing order.
    """
    mapping = {}
    nxt = g.n
    for u in range(h.n):
        if u == w:
            mapping[u] = v
        else:
            mapping[u] = nxt
            nxt += 1
    edges = g.edges() + [(mapping[a], mapping[b]) for a, b in h.edges()]
    return Graph.from_edges(nxt, edges)


# Named graphs


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite_graph(s: int, t: int) -> Graph:
    return Graph.from_edges(s + t, [(u, s + v) for u in range(s) for v in range(t)])


def star_graph(p: int) -> Graph:
    """K_{1,p} with centre 0."""
    return complete_bipartite_graph(1, p)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
