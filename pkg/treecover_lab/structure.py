"""Structural queries: blocks, girth, independence, treewidth, outerplanarity, isomorphism."""

import logging
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_fill_in
from networkx.algorithms.connectivity import local_node_connectivity

from .errors import UnsupportedSizeError
from .graph import Edge, Graph, VertexSet, bit, iter_bits, lowest, popcount, to_list

logger = logging.getLogger(__name__)

TREEWIDTH_LIMIT = 14
OUTERPLANAR_LIMIT = 16
ISOMORPHISM_LIMIT = 16


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, cut vertices and bridges of a graph.

    Isolated vertices form singleton blocks. ``connected`` is False when the
    decomposition was taken component by component.
    """

    blocks: Tuple[VertexSet, ...]
    cut_vertices: VertexSet
    bridges: Tuple[Edge, ...]
    block_adjacency: Tuple[Tuple[int, int], ...]
    connected: bool

    def cut_vertices_in(self, index: int) -> VertexSet:
        return self.blocks[index] & self.cut_vertices

    def pendant_blocks(self) -> List[int]:
        """Blocks holding exactly one cut vertex (leaves of the block-cut tree)."""
        if len(self.blocks) < 2:
            return []
        return [i for i in range(len(self.blocks)) if popcount(self.cut_vertices_in(i)) == 1]

    def to_dict(self) -> Dict[str, object]:
        return {
            "blocks": [to_list(b) for b in self.blocks],
            "cut_vertices": to_list(self.cut_vertices),
            "bridges": [list(e) for e in self.bridges],
            "connected": self.connected,
        }


def block_decomposition(g: Graph) -> BlockDecomposition:
    nxg = g.to_networkx()
    blocks = [sum(bit(v) for v in comp) for comp in nx.biconnected_components(nxg)]
    blocks.extend(bit(v) for v in range(g.n) if g.adj[v] == 0)
    blocks.sort(key=lambda b: (lowest(b), b))
    cut = sum(bit(v) for v in nx.articulation_points(nxg))
    bridges = tuple(sorted(tuple(sorted(e)) for e in nx.bridges(nxg)))
    adjacency = tuple(
        (i, j)
        for i, j in combinations(range(len(blocks)), 2)
        if blocks[i] & blocks[j]
    )
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=cut,
        bridges=bridges,
        block_adjacency=adjacency,
        connected=g.is_connected(),
    )


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for forests (BFS from every vertex)."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in iter_bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def independence_number(g: Graph) -> Tuple[int, VertexSet]:
    """Maximum independent set by branch and bound; returns (size, witness)."""
    best = [0, 0]

    def search(cand: VertexSet, chosen: VertexSet, size: int) -> None:
        if size + popcount(cand) <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        low_v, low_d, high_v, high_d = -1, g.n + 1, -1, -1
        for v in iter_bits(cand):
            d = popcount(g.adj[v] & cand)
            if d < low_d:
                low_v, low_d = v, d
            if d > high_d:
                high_v, high_d = v, d
        if low_d <= 1:
            # a vertex of degree <= 1 is always in some maximum independent set
            search(cand & ~g.adj[low_v] & ~bit(low_v), chosen | bit(low_v), size + 1)
            return
        search(cand & ~g.adj[high_v] & ~bit(high_v), chosen | bit(high_v), size + 1)
        search(cand & ~bit(high_v), chosen, size)

    search(g.vertices, 0, 0)
    return best[0], best[1]


def treewidth(g: Graph, limit: int = TREEWIDTH_LIMIT) -> int:
    """Exact treewidth by dynamic programming over vertex subsets.

    ``TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`` where ``Q(S, v)`` is the set
    of vertices outside ``S + v`` reachable from ``v`` through ``S``. States at or
    above the min-fill-in upper bound are never stored. ``tw(K0) = -1``.
    """
    if g.n > limit:
        raise UnsupportedSizeError("treewidth", g.n, limit)
    if g.n == 0:
        return -1
    upper, _ = treewidth_min_fill_in(g.to_networkx())
    if upper <= 1:
        return upper if g.m else 0
    table = {0: -1}
    for s in range(1, 1 << g.n):
        value = upper
        for v in iter_bits(s):
            prev = table.get(s & ~bit(v))
            if prev is None or prev >= value:
                continue
            inside = s & ~bit(v)
            region = g.reach(v, inside | bit(v))
            frontier = 0
            for u in iter_bits(region):
                frontier |= g.adj[u]
            q = popcount(frontier & ~inside & ~bit(v))
            cost = max(prev, q)
            if cost < value:
                value = cost
        if value < upper:
            table[s] = value
    return table.get(g.vertices, upper)


def _has_k4_minor(g: Graph) -> bool:
    """Series-parallel reduction: no K4 minor iff the reductions empty the graph."""
    adj: Dict[int, Set[int]] = {v: set(iter_bits(g.adj[v])) for v in range(g.n)}
    work = list(adj)
    while work:
        v = work.pop()
        if v not in adj:
            continue
        nbrs = adj[v]
        if len(nbrs) <= 1:
            for u in nbrs:
                adj[u].discard(v)
                work.append(u)
            del adj[v]
        elif len(nbrs) == 2:
            a, b = nbrs
            adj[a].discard(v)
            adj[b].discard(v)
            adj[a].add(b)
            adj[b].add(a)
            del adj[v]
            work.extend((a, b))
    # every graph of minimum degree >= 3 has a K4 minor
    return bool(adj)


def _has_k23_minor(g: Graph) -> bool:
    """K_{2,3} has maximum degree 3, so a minor is a subdivision: two hubs joined
    by three internally disjoint paths of length >= 2 inside one block."""
    decomposition = block_decomposition(g)
    for block in decomposition.blocks:
        size = popcount(block)
        if size < 5 or g.edges_within(block) == size:
            continue
        sub = g.to_networkx().subgraph(iter_bits(block)).copy()
        hubs = [v for v in iter_bits(block) if popcount(g.adj[v] & block) >= 3]
        for a, b in combinations(hubs, 2):
            h = sub
            if sub.has_edge(a, b):
                h = sub.copy()
                h.remove_edge(a, b)
            if local_node_connectivity(h, a, b, cutoff=3) >= 3:
                return True
    return False


def is_outerplanar(g: Graph, limit: int = OUTERPLANAR_LIMIT) -> bool:
    """True iff ``g`` has neither a K4 nor a K_{2,3} minor."""
    if g.n > limit:
        raise UnsupportedSizeError("is_outerplanar", g.n, limit)
    if g.n >= 2 and g.m > 2 * g.n - 3:
        return False
    if _has_k4_minor(g):
        return False
    return not _has_k23_minor(g)


# Canonical labelling


def _refine(g: Graph, colors: List[int]) -> List[int]:
    """Colour refinement; colours are ranks of isomorphism-invariant signatures."""
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(g.adj[v]))))
            for v in range(g.n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == len(set(colors)):
            return refined
        colors = refined


def _code(g: Graph, colors: List[int]) -> int:
    code = 0
    for u, v in g.edges():
        a, b = sorted((colors[u], colors[v]))
        code |= 1 << (b * (b - 1) // 2 + a)
    return code


def canonical_labeling(g: Graph) -> Tuple[int, Tuple[int, ...]]:
    """Individualisation-refinement search; returns (code, labelling).

    The labelling maps each vertex to its canonical position. Twins in the cell
    being split are interchangeable, so only one of them is individualised.
    """
    best: List[Optional[Tuple[int, Tuple[int, ...]]]] = [None]

    def search(colors: List[int]) -> None:
        colors = _refine(g, colors)
        cells: Dict[int, List[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            code = _code(g, colors)
            if best[0] is None or code > best[0][0]:
                best[0] = (code, tuple(colors))
            return
        representatives: List[int] = []
        for v in target:
            twin = False
            for r in representatives:
                pair = bit(v) | bit(r)
                if g.adj[v] & ~pair == g.adj[r] & ~pair:
                    twin = True
                    break
            if not twin:
                representatives.append(v)
        for v in representatives:
            search([2 * c + (1 if c == colors[v] and u != v else 0) for u, c in enumerate(colors)])

    if g.n == 0:
        return 0, ()
    search([0] * g.n)
    assert best[0] is not None
    return best[0]


def canonical_key(g: Graph) -> Tuple[int, int]:
    return g.n, canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    _, labeling = canonical_labeling(g)
    return g.relabel(labeling)


def is_isomorphic(g: Graph, h: Graph, limit: int = ISOMORPHISM_LIMIT) -> bool:
    if max(g.n, h.n) > limit:
        raise UnsupportedSizeError("is_isomorphic", max(g.n, h.n), limit)
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())
