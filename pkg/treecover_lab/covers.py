"""Tree covers: verification, exact solvers and the constructive upper bounds."""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import PreconditionError, UnsupportedSizeError
from .forcing import FORCING_LIMIT, psd_zero_forcing_number
from .formats import cover_to_json, parts_to_lists
from .graph import Graph, VertexSet, bit, iter_bits, lowest, popcount, to_mask
from .reductions import reduce
from .structure import block_decomposition, girth, independence_number

logger = logging.getLogger(__name__)

EXACT_COVER_LIMIT = 14
PATH_COVER_LIMIT = 14
BRUTEFORCE_LIMIT = 10


@dataclass(frozen=True)
class TreeCover:
    """Disjoint vertex sets covering ``V``; ``verified`` means each induces a tree."""

    parts: Tuple[VertexSet, ...]
    verified: bool = False

    @property
    def size(self) -> int:
        return len(self.parts)

    def as_lists(self) -> List[List[int]]:
        return parts_to_lists(self.parts)

    def to_json(self) -> str:
        return cover_to_json(self.parts)


@dataclass(frozen=True)
class CoverViolation:
    """First condition a proposed cover fails; ``part_index`` is None for coverage."""

    condition: str
    part_index: Optional[int]
    message: str

    def __str__(self) -> str:
        return self.message


def _as_mask(part: Union[VertexSet, Iterable[int]]) -> VertexSet:
    if isinstance(part, int):
        return part
    return to_mask(part)


def verify_cover(
    g: Graph, parts: Sequence[Union[VertexSet, Iterable[int]]]
) -> Union[TreeCover, CoverViolation]:
    """Check that ``parts`` is a tree cover of ``g``.

    Parts are checked in order for emptiness, overlap with earlier parts, an
    induced cycle, and connectivity; coverage of ``V`` is checked last.
    """
    masks = [_as_mask(p) for p in parts]
    covered = 0
    for i, part in enumerate(masks):
        if part & ~g.vertices:
            raise PreconditionError(f"part {i} names a vertex outside 0..{g.n - 1}")
        if not part:
            return CoverViolation("empty", i, f"part {i} is empty")
        if part & covered:
            return CoverViolation("overlap", i, f"part {i} overlaps an earlier part")
        covered |= part
        comps = g.components(part)
        if g.edges_within(part) != popcount(part) - len(comps):
            return CoverViolation("cycle", i, f"part {i} induces a cycle")
        if len(comps) > 1:
            return CoverViolation("disconnected", i, f"part {i} induces a disconnected subgraph")
    if covered != g.vertices:
        missing = list(iter_bits(g.vertices & ~covered))
        return CoverViolation("uncovered", None, f"vertices {missing} are not covered")
    return TreeCover(parts=tuple(masks), verified=True)


def _checked(g: Graph, parts: Sequence[VertexSet], operation: str) -> TreeCover:
    result = verify_cover(g, parts)
    if isinstance(result, CoverViolation):
        raise RuntimeError(f"{operation} produced an invalid cover: {result}")
    return result


# Exact solvers


def _bfs_order(g: Graph) -> List[int]:
    order: List[int] = []
    seen = 0
    for root in range(g.n):
        if seen >> root & 1:
            continue
        seen |= bit(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in iter_bits(g.adj[v] & ~seen):
                seen |= bit(u)
                queue.append(u)
    return order


def _search_partition(
    g: Graph, k: int, paths: bool = False
) -> Optional[List[VertexSet]]:
    """Partition ``V`` into at most ``k`` induced trees (or induced paths).

    Vertices are placed in BFS order; a new part opens only for the vertex that
    becomes its first member, so parts are never permuted. A part whose pieces
    can no longer be joined by unplaced vertices is pruned.
    """
    order = _bfs_order(g)
    unplaced = [0] * (g.n + 1)
    for i in range(g.n - 1, -1, -1):
        unplaced[i] = unplaced[i + 1] | bit(order[i])
    parts: List[VertexSet] = []

    def can_join(part: VertexSet, v: int) -> bool:
        touching = g.adj[v] & part
        if paths:
            if popcount(touching) > 2:
                return False
            if any(popcount(g.adj[u] & part) >= 2 for u in iter_bits(touching)):
                return False
        seen = 0
        for u in iter_bits(touching):
            if seen >> u & 1:
                return False
            seen |= g.reach(u, part)
        return True

    def repairable(part: VertexSet, remaining: VertexSet) -> bool:
        comps = g.components(part)
        if len(comps) == 1:
            return True
        for comp in comps:
            reach = 0
            for u in iter_bits(comp):
                reach |= g.adj[u]
            if not reach & remaining:
                return False
        return True

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        remaining = unplaced[i + 1]
        for idx, part in enumerate(parts):
            if not can_join(part, v):
                continue
            parts[idx] = part | bit(v)
            if all(repairable(p, remaining) for p in parts) and extend(i + 1):
                return True
            parts[idx] = part
        if len(parts) < k:
            parts.append(bit(v))
            if all(repairable(p, remaining) for p in parts) and extend(i + 1):
                return True
            parts.pop()
        return False

    return list(parts) if extend(0) else None


def _lift(parts: Iterable[VertexSet], labels: Sequence[int]) -> List[VertexSet]:
    return [sum(bit(labels[v]) for v in iter_bits(p)) for p in parts]


def _solve_direct(g: Graph, limit: int) -> List[VertexSet]:
    if g.n == 0:
        return []
    if g.n > limit:
        raise UnsupportedSizeError("tree_cover_exact", g.n, limit)
    comps = g.components()
    if g.is_forest():
        return comps
    upper: List[VertexSet] = []
    for comp in comps:
        if popcount(comp) <= 2:
            upper.append(comp)
            continue
        sub, labels = g.induced_subgraph(comp)
        upper.extend(_lift(_half_order_parts(sub), labels))
    for k in range(len(comps) + 1, len(upper)):
        found = _search_partition(g, k)
        if found is not None:
            logger.debug("exact search on %d vertices settled at %d parts", g.n, k)
            return found
    return upper


def tree_cover_exact(
    g: Graph, use_reductions: bool = True, limit: int = EXACT_COVER_LIMIT
) -> Tuple[int, TreeCover]:
    """Minimum tree cover by iterative deepening over the number of parts.

    With ``use_reductions`` the size limit applies to the kernels left by
    :func:`reduce`, so larger graphs with many leaves, bridges or cut vertices
    are still solved exactly.
    """
    if use_reductions:
        kernels, trace = reduce(g)
        parts = trace.replay([_solve_direct(kernel, limit) for kernel in kernels])
    else:
        parts = _solve_direct(g, limit)
    cover = _checked(g, parts, "tree_cover_exact")
    return cover.size, cover


def tree_cover_number(g: Graph, limit: int = EXACT_COVER_LIMIT) -> int:
    return tree_cover_exact(g, limit=limit)[0]


def _set_partitions(items: List[int]) -> Iterable[List[VertexSet]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [bit(first)] + partition
        for i in range(len(partition)):
            yield partition[:i] + [partition[i] | bit(first)] + partition[i + 1:]


def tree_cover_bruteforce(g: Graph, limit: int = BRUTEFORCE_LIMIT) -> int:
    """T by trying every set partition; only for cross-checking small graphs."""
    if g.n > limit:
        raise UnsupportedSizeError("tree_cover_bruteforce", g.n, limit)
    best = g.n
    for partition in _set_partitions(list(range(g.n))):
        if len(partition) < best and all(g.is_tree(p) for p in partition):
            best = len(partition)
    return best


def path_cover_exact(g: Graph, limit: int = PATH_COVER_LIMIT) -> int:
    """Minimum number of vertex-disjoint induced paths covering ``V``."""
    if g.n > limit:
        raise UnsupportedSizeError("path_cover_exact", g.n, limit)
    if g.n == 0:
        return 0
    for k in range(len(g.components()), g.n + 1):
        if _search_partition(g, k, paths=True) is not None:
            return k
    return g.n


# The ceil(n/2) construction


def _candidate_leaf_sets(g: Graph, centre: int, p: int) -> List[VertexSet]:
    nbrs = g.adj[centre]
    pendant = to_mask(u for u in iter_bits(nbrs) if g.adj[u] == bit(centre))
    if p < g.n - 2:
        # a pendant neighbour left behind would be isolated in the remainder
        required, pool = pendant, list(iter_bits(nbrs & ~pendant))
        extra = p - popcount(required)
        if extra < 0 or extra > len(pool):
            return []
    else:
        required, pool, extra = 0, list(iter_bits(nbrs)), p
    candidates = []
    for chosen in combinations(pool, extra):
        leaves = required | to_mask(chosen)
        if g.is_independent(leaves):
            candidates.append(leaves)
    candidates.sort(key=lambda leaves: list(iter_bits(leaves)))
    return candidates


def find_removable_star(g: Graph) -> VertexSet:
    """An induced star ``K_{1,p}`` whose removal leaves a nonempty connected graph.

    Stars are tried in increasing size, centres from the highest label down,
    leaf sets in lexicographic order.
    """
    if g.n < 3 or not g.is_connected():
        raise PreconditionError("find_removable_star needs a connected graph on at least 3 vertices")
    for p in range(1, g.n - 1):
        for centre in range(g.n - 1, -1, -1):
            if g.degree(centre) < p:
                continue
            for leaves in _candidate_leaf_sets(g, centre, p):
                star = leaves | bit(centre)
                rest = g.vertices & ~star
                if rest and g.is_connected(rest):
                    return star
    raise RuntimeError("no removable star found in a connected graph")


def _half_order_parts(g: Graph) -> List[VertexSet]:
    parts: List[VertexSet] = []
    labels: Tuple[int, ...] = tuple(range(g.n))
    current = g
    while current.n >= 3:
        star = find_removable_star(current)
        parts.append(sum(bit(labels[v]) for v in iter_bits(star)))
        current, kept = current.delete_vertices(star)
        labels = tuple(labels[v] for v in kept)
    if labels:
        parts.append(to_mask(labels))
    return parts


def half_order_cover(g: Graph) -> TreeCover:
    """Cover of size at most ``ceil(n/2)`` by repeatedly removing removable stars."""
    if g.n < 2 or not g.is_connected():
        raise PreconditionError("half_order_cover needs a connected graph on at least 2 vertices")
    return _checked(g, _half_order_parts(g), "half_order_cover")


def independent_set_cover(g: Graph, independent: Union[VertexSet, Iterable[int]]) -> TreeCover:
    """Cover of size ``n - |S|``: each vertex of ``S`` joins a star around a neighbour."""
    s = _as_mask(independent)
    if not g.is_connected() or (s and g.n < 2):
        raise PreconditionError("independent_set_cover needs a connected graph on at least 2 vertices")
    if s & ~g.vertices or not g.is_independent(s):
        raise PreconditionError("the given vertex set is not an independent set of the graph")
    stars: Dict[int, VertexSet] = {v: bit(v) for v in iter_bits(g.vertices & ~s)}
    for v in iter_bits(s):
        stars[lowest(g.adj[v])] |= bit(v)
    return _checked(g, [stars[v] for v in sorted(stars)], "independent_set_cover")


# The n/3 construction for girth at least 5


def _exact_parts(g: Graph, mask: VertexSet) -> List[VertexSet]:
    sub, labels = g.induced_subgraph(mask)
    _, cover = tree_cover_exact(sub)
    return _lift(cover.parts, labels)


def _girth5_parts(g: Graph, mask: VertexSet) -> List[VertexSet]:
    if g.is_tree(mask):
        return [mask]
    if popcount(mask) <= 6:
        return _exact_parts(g, mask)

    leaves = [v for v in iter_bits(mask) if popcount(g.adj[v] & mask) == 1]
    if leaves:
        core = mask & ~to_mask(leaves)
        parts = _girth5_parts(g, core)
        for leaf in leaves:
            anchor = lowest(g.adj[leaf] & core)
            for i, part in enumerate(parts):
                if part >> anchor & 1:
                    parts[i] = part | bit(leaf)
                    break
        return parts

    degree = {v: popcount(g.adj[v] & mask) for v in iter_bits(mask)}
    y = max(degree, key=lambda v: (degree[v], -v))
    x, z = list(iter_bits(g.adj[y] & mask))[:2]
    path = bit(x) | bit(y) | bit(z)
    # components of order 1 cannot occur: minimum degree 2 and no 3- or 4-cycles
    comps = g.components(mask & ~path)
    small = [h for h in comps if 3 <= popcount(h) <= 5]
    pairs = [h for h in comps if popcount(h) == 2]
    big = [h for h in comps if popcount(h) >= 6]

    if small:
        h = small[0]
        rest = mask & ~h
        if not g.is_tree(h):
            u1 = next(u for u in iter_bits(h) if g.adj[u] & path)
            if rest == path:
                return [h & ~bit(u1), path | bit(u1)]
            return [h & ~bit(u1)] + _girth5_parts(g, mask & ~(h & ~bit(u1)))
        if popcount(rest) >= 6:
            return [h] + _girth5_parts(g, rest)
        return _exact_parts(g, mask)

    parts: List[VertexSet] = []
    if not pairs:
        parts.append(path)
    elif len(pairs) == 1:
        first = big[0]
        r = next(v for v in (x, y, z) if g.adj[v] & first)
        parts.append((path | pairs[0]) & ~bit(r))
        big = [first | bit(r)] + big[1:]
    else:
        near_x = to_mask(u for h in pairs for u in iter_bits(h) if g.has_edge(u, x))
        near_z = to_mask(u for h in pairs for u in iter_bits(h) if g.has_edge(u, z))
        parts.extend([near_x | bit(x), near_z | bit(z) | bit(y)])
    for h in big:
        parts.extend(_girth5_parts(g, h))
    return parts


def girth5_cover(g: Graph) -> TreeCover:
    """Cover of size at most ``floor(n/3)`` for connected graphs of girth at least 5.

    Leaves are stripped and re-attached; otherwise an induced path ``x-y-z``
    centred at a vertex of maximum degree splits the graph, and small pieces are
    solved exactly. Forests come back as one part per component.
    """
    if g.is_forest():
        return _checked(g, g.components(), "girth5_cover")
    if not g.is_connected():
        raise PreconditionError("girth5_cover needs a connected graph")
    if g.n < 6:
        raise PreconditionError(f"girth5_cover needs at least 6 vertices, got {g.n}")
    length = girth(g)
    if length is not None and length < 5:
        raise PreconditionError(f"girth5_cover needs girth at least 5, got {length}")
    return _checked(g, _girth5_parts(g, g.vertices), "girth5_cover")


# Bounds


@dataclass(frozen=True)
class BoundReport:
    """Bounds on T next to its exact value.

    ``vertex_deletion`` and ``edge_deletion`` hold the (lower, upper) bounds on
    T implied by the exact values of ``T(G - v)`` and ``T(G - e)``.
    """

    n: int
    m: int
    alpha: int
    tree_cover: int
    independence_bound: int
    half_order_bound: int
    zplus: Optional[int] = None
    vertex_deletion: Optional[Tuple[int, int]] = None
    edge_deletion: Optional[Tuple[int, int]] = None
    cut_vertex_formula: Optional[int] = None
    notes: List[str] = field(default_factory=list)

    def upper_bounds(self) -> Dict[str, int]:
        bounds = {"n-alpha": self.independence_bound, "ceil(n/2)": self.half_order_bound}
        if self.zplus is not None:
            bounds["Zplus"] = self.zplus
        if self.vertex_deletion is not None:
            bounds["vertex-deletion"] = self.vertex_deletion[1]
        if self.edge_deletion is not None:
            bounds["edge-deletion"] = self.edge_deletion[1]
        if self.cut_vertex_formula is not None:
            bounds["cut-vertex"] = self.cut_vertex_formula
        return bounds

    def lower_bounds(self) -> Dict[str, int]:
        bounds = {}
        if self.vertex_deletion is not None:
            bounds["vertex-deletion"] = self.vertex_deletion[0]
        if self.edge_deletion is not None:
            bounds["edge-deletion"] = self.edge_deletion[0]
        if self.cut_vertex_formula is not None:
            bounds["cut-vertex"] = self.cut_vertex_formula
        return bounds

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "T": self.tree_cover,
            "upper": self.upper_bounds(),
            "lower": self.lower_bounds(),
            "notes": list(self.notes),
        }


def bound_report(
    g: Graph, limit: int = EXACT_COVER_LIMIT, forcing_limit: Optional[int] = None
) -> BoundReport:
    if g.n == 0 or not g.is_connected():
        raise PreconditionError("bound_report needs a nonempty connected graph")
    forcing_limit = FORCING_LIMIT if forcing_limit is None else forcing_limit
    t = tree_cover_number(g, limit)
    alpha, _ = independence_number(g)
    notes = []

    zplus = None
    if g.n <= forcing_limit:
        zplus = psd_zero_forcing_number(g, forcing_limit)
    else:
        notes.append(f"Zplus skipped: {g.n} vertices exceed the forcing limit {forcing_limit}")

    lower, upper = 0, g.n
    for v in range(g.n):
        smaller, _ = g.delete_vertex(v)
        tv = tree_cover_number(smaller, limit)
        lower = max(lower, tv - g.degree(v) + 1)
        upper = min(upper, tv + 1)

    edge_bounds = None
    if g.m:
        e_lower, e_upper = 0, g.n
        for u, v in g.edges():
            te = tree_cover_number(g.delete_edge(u, v), limit)
            e_lower = max(e_lower, te - 1)
            e_upper = min(e_upper, te + 1)
        edge_bounds = (e_lower, e_upper)

    formula = None
    decomposition = block_decomposition(g)
    if decomposition.cut_vertices:
        c = lowest(decomposition.cut_vertices)
        pieces = g.components(g.vertices & ~bit(c))
        total = 0
        for piece in pieces:
            sub, _ = g.induced_subgraph(piece | bit(c))
            total += tree_cover_number(sub, limit)
        formula = total - len(pieces) + 1

    return BoundReport(
        n=g.n,
        m=g.m,
        alpha=alpha,
        tree_cover=t,
        independence_bound=g.n - alpha,
        half_order_bound=(g.n + 1) // 2,
        zplus=zplus,
        vertex_deletion=(lower, upper),
        edge_deletion=edge_bounds,
        cut_vertex_formula=formula,
        notes=notes,
    )
