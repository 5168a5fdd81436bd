"""Recognisers and generators for graphs whose tree cover number reaches ceil(n/2).

For outerplanar graphs the extremal graphs of odd order are exactly the
connected graphs whose blocks are all triangles. Those of even order arise from
such a graph by adding a leaf, by joining two of them with a bridge, or by
gluing triangles one at a time onto a core that is ``C4``, ``K4 - e`` or a
triangle-augmented cycle.
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .errors import PreconditionError
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    popcount,
    to_list,
    triangle_augment,
    vertex_sum,
)
from .structure import block_decomposition, canonical_key

logger = logging.getLogger(__name__)


class ExtremalKind(str, Enum):
    ODD_F = "OddF"
    EVEN_LEAF = "EvenLeafOnF"
    EVEN_BRIDGE = "EvenBridgeOfTwoF"
    EVEN_K3_CHAIN = "EvenK3Chain"
    NOT_EXTREMAL = "NotExtremal"


class CoreKind(str, Enum):
    C4 = "C4"
    K4_MINUS_E = "K4minusE"
    CYCLE_TRIANGLE = "CycleTriangle"


@dataclass(frozen=True)
class ExtremalClass:
    kind: ExtremalKind
    core: Optional[CoreKind] = None
    r: Optional[int] = None
    evidence: Dict[str, object] = field(default_factory=dict, compare=False, hash=False)

    @property
    def label(self) -> str:
        if self.core is None:
            return self.kind.value
        if self.core is CoreKind.CYCLE_TRIANGLE:
            return f"{self.kind.value}({self.core.value}({self.r}))"
        return f"{self.kind.value}({self.core.value})"

    @property
    def is_extremal(self) -> bool:
        return self.kind is not ExtremalKind.NOT_EXTREMAL

    def to_dict(self) -> Dict[str, object]:
        data: Dict[str, object] = {"kind": self.kind.value, "label": self.label}
        if self.core is not None:
            data["core"] = self.core.value
        if self.r is not None:
            data["r"] = self.r
        data["evidence"] = self.evidence
        return data


def core_graph(core: CoreKind, r: int = 3) -> Graph:
    if core is CoreKind.C4:
        return cycle_graph(4)
    if core is CoreKind.K4_MINUS_E:
        return complete_graph(4).delete_edge(2, 3)
    return generate_cycle_triangle(r)


def _blocks_are_triangles(g: Graph, blocks) -> bool:
    return all(popcount(b) == 3 and g.is_clique(b) for b in blocks)


def is_family_F(g: Graph) -> bool:
    """Connected, odd order at least 3, and every block a triangle."""
    if not g.is_connected():
        raise PreconditionError("is_family_F needs a connected graph")
    if g.n < 3 or g.n % 2 == 0:
        return False
    return _blocks_are_triangles(g, block_decomposition(g).blocks)


def _in_family(g: Graph) -> bool:
    return g.is_connected() and is_family_F(g)


def _match_core(g: Graph, block: int) -> Optional[Tuple[CoreKind, int]]:
    sub, _ = g.induced_subgraph(block)
    key = canonical_key(sub)
    size = popcount(block)
    candidates: List[Tuple[CoreKind, int]] = []
    if size == 4:
        candidates = [(CoreKind.C4, 0), (CoreKind.K4_MINUS_E, 0)]
    elif size >= 6 and size % 2 == 0:
        candidates = [(CoreKind.CYCLE_TRIANGLE, size // 2)]
    for core, r in candidates:
        if canonical_key(core_graph(core, r or 3)) == key:
            return core, r
    return None


def classify_even_extremal(g: Graph) -> ExtremalClass:
    """First matching construction, tried as leaf, then bridge, then core-and-triangles."""
    if not g.is_connected() or g.n < 4 or g.n % 2:
        raise PreconditionError("classify_even_extremal needs a connected graph of even order >= 4")
    decomposition = block_decomposition(g)
    blocks = [to_list(b) for b in decomposition.blocks]

    for v in g.leaves():
        rest, _ = g.delete_vertex(v)
        if _in_family(rest):
            return ExtremalClass(ExtremalKind.EVEN_LEAF, evidence={"leaf": v, "blocks": blocks})

    for u, v in decomposition.bridges:
        split = g.delete_edge(u, v)
        sides = split.components()
        if all(_in_family(split.induced_subgraph(side)[0]) for side in sides):
            return ExtremalClass(
                ExtremalKind.EVEN_BRIDGE,
                evidence={"bridge": [u, v], "sides": [to_list(s) for s in sides], "blocks": blocks},
            )

    odd = [b for b in decomposition.blocks if not (popcount(b) == 3 and g.is_clique(b))]
    if len(odd) == 1:
        match = _match_core(g, odd[0])
        if match is not None:
            core, r = match
            return ExtremalClass(
                ExtremalKind.EVEN_K3_CHAIN,
                core=core,
                r=r or None,
                evidence={
                    "core_block": to_list(odd[0]),
                    "triangles": len(decomposition.blocks) - 1,
                    "blocks": blocks,
                },
            )
    return ExtremalClass(ExtremalKind.NOT_EXTREMAL, evidence={"blocks": blocks})


def classify_extremal(g: Graph) -> ExtremalClass:
    """Dispatch on parity; graphs below the smallest extremal order are not extremal."""
    if not g.is_connected():
        raise PreconditionError("classify_extremal needs a connected graph")
    if g.n % 2:
        if is_family_F(g):
            blocks = [to_list(b) for b in block_decomposition(g).blocks]
            return ExtremalClass(ExtremalKind.ODD_F, evidence={"blocks": blocks})
        return ExtremalClass(ExtremalKind.NOT_EXTREMAL)
    if g.n < 4:
        return ExtremalClass(ExtremalKind.NOT_EXTREMAL)
    return classify_even_extremal(g)


def check_evidence(g: Graph, result: ExtremalClass) -> bool:
    """Replay the evidence of a classification against ``g``."""
    evidence = result.evidence
    if result.kind is ExtremalKind.ODD_F:
        return is_family_F(g)
    if result.kind is ExtremalKind.EVEN_LEAF:
        v = int(evidence["leaf"])  # type: ignore[call-overload]
        return g.degree(v) == 1 and _in_family(g.delete_vertex(v)[0])
    if result.kind is ExtremalKind.EVEN_BRIDGE:
        u, v = evidence["bridge"]  # type: ignore[misc]
        if not g.has_edge(u, v):
            return False
        split = g.delete_edge(u, v)
        sides = split.components()
        return len(sides) == 2 and all(_in_family(split.induced_subgraph(s)[0]) for s in sides)
    if result.kind is ExtremalKind.EVEN_K3_CHAIN:
        core_block = sum(1 << v for v in evidence["core_block"])  # type: ignore[attr-defined]
        blocks = block_decomposition(g).blocks
        if core_block not in blocks:
            return False
        others = [b for b in blocks if b != core_block]
        match = _match_core(g, core_block)
        return (
            match is not None
            and match[0] is result.core
            and _blocks_are_triangles(g, others)
        )
    return not classify_extremal(g).is_extremal


# Generators


def _glue_triangles(g: Graph, count: int, rng: random.Random) -> Graph:
    for _ in range(count):
        g = vertex_sum(g, rng.randrange(g.n), complete_graph(3), 0)
    return g


def generate_family_F(b: int, seed: int = 0) -> Graph:
    """A graph with ``b`` triangle blocks, each glued at a seed-chosen vertex."""
    if b < 1:
        raise PreconditionError(f"need at least one triangle block, got {b}")
    return _glue_triangles(complete_graph(3), b - 1, random.Random(seed))


def enumerate_family_F(b: int) -> List[Graph]:
    """Every graph with ``b`` triangle blocks, one per isomorphism class."""
    if b < 1:
        raise PreconditionError(f"need at least one triangle block, got {b}")
    level = {canonical_key(complete_graph(3)): complete_graph(3)}
    for _ in range(b - 1):
        grown: Dict[Tuple[int, int], Graph] = {}
        for g in level.values():
            for v in range(g.n):
                h = vertex_sum(g, v, complete_graph(3), 0)
                grown.setdefault(canonical_key(h), h)
        level = grown
    return [level[key] for key in sorted(level)]


@dataclass(frozen=True)
class EvenSpec:
    """Which even-order construction to build.

    ``case`` 1 adds a leaf to a graph with ``blocks`` triangle blocks, ``case``
    2 bridges two such graphs (``blocks`` and ``other_blocks``), ``case`` 3
    glues ``triangles`` triangles onto the ``core``.
    """

    case: int
    blocks: int = 1
    other_blocks: int = 1
    core: CoreKind = CoreKind.C4
    r: int = 3
    triangles: int = 0


def generate_even_extremal(spec: EvenSpec, seed: int = 0) -> Graph:
    rng = random.Random(seed)
    if spec.case == 1:
        base = generate_family_F(spec.blocks, rng.randrange(1 << 32))
        return base.add_leaf(rng.randrange(base.n))
    if spec.case == 2:
        left = generate_family_F(spec.blocks, rng.randrange(1 << 32))
        right = generate_family_F(spec.other_blocks, rng.randrange(1 << 32))
        u, v = rng.randrange(left.n), rng.randrange(right.n)
        edges = left.edges() + [(a + left.n, b + left.n) for a, b in right.edges()]
        return Graph.from_edges(left.n + right.n, edges + [(u, left.n + v)])
    if spec.case == 3:
        if spec.triangles < 0:
            raise PreconditionError(f"triangle count must be nonnegative, got {spec.triangles}")
        if spec.core is CoreKind.CYCLE_TRIANGLE and spec.r < 3:
            raise PreconditionError(f"cycle length must be at least 3, got {spec.r}")
        return _glue_triangles(core_graph(spec.core, spec.r), spec.triangles, rng)
    raise PreconditionError(f"unknown even construction case {spec.case}; expected 1, 2 or 3")


def generate_k_tree(k: int, n: int, seed: int = 0) -> Graph:
    """Start from ``K_{k+1}`` and attach each new vertex to a seed-chosen ``k``-clique."""
    if k < 1 or n < k + 1:
        raise PreconditionError(f"a {k}-tree needs k >= 1 and n >= k + 1, got n = {n}")
    rng = random.Random(seed)
    edges = list(combinations(range(k + 1), 2))
    cliques = [tuple(c) for c in combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = cliques[rng.randrange(len(cliques))]
        edges.extend((u, v) for u in base)
        cliques.extend(tuple(sorted(c + (v,))) for c in combinations(base, k - 1))
    logger.debug("built a %d-tree on %d vertices", k, n)
    return Graph.from_edges(n, edges)


def generate_friendship(k: int) -> Graph:
    """``k`` triangles sharing vertex 0."""
    if k < 1:
        raise PreconditionError(f"need at least one triangle, got {k}")
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges.extend([(0, a), (0, b), (a, b)])
    return Graph.from_edges(2 * k + 1, edges)


def generate_cycle_triangle(r: int) -> Graph:
    if r < 3:
        raise PreconditionError(f"cycle length must be at least 3, got {r}")
    return triangle_augment(cycle_graph(r))[0]


def pendant_block_count(g: Graph) -> int:
    return len(block_decomposition(g).pendant_blocks())
