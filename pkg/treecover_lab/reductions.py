"""Tree-cover preserving reductions and the replay that undoes them.

Four rules shrink a graph into kernels without changing how the tree cover
number is assembled:

* deleting a leaf leaves T unchanged;
* suppressing a degree-2 vertex whose neighbours are non-adjacent (undoing a
  subdivision) leaves T unchanged;
* splitting at a bridge gives ``T(G) = T(G1) + T(G2) - 1``;
* splitting at a cut vertex into ``h`` pieces gives ``T(G) = sum T(Gi) - h + 1``.

Cut-vertex splits give each extra piece a fresh label standing for the cut
vertex, so kernel labels can exceed ``n - 1``; replay folds them back.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

import networkx as nx

from .graph import Graph, VertexSet, bit, iter_bits

logger = logging.getLogger(__name__)


class StepKind(str, Enum):
    LEAF_DELETE = "leaf-delete"
    SUPPRESS = "suppress-degree-2-subdivision"
    BRIDGE_SPLIT = "bridge-split"
    CUT_VERTEX_SPLIT = "cut-vertex-split"


@dataclass(frozen=True)
class ReductionStep:
    """One applied rule.

    ``vertices`` is ``(leaf, neighbour)``, ``(w, a, b)``, ``(u, v)`` or ``(c,)``
    depending on ``kind``; ``copies`` lists the stand-in labels of a split cut
    vertex.
    """

    kind: StepKind
    vertices: Tuple[int, ...]
    offset: int = 0
    copies: Tuple[int, ...] = ()


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[ReductionStep, ...]
    offset: int
    kernel_labels: Tuple[Tuple[int, ...], ...]
    n: int

    def replay(self, kernel_parts: Sequence[Sequence[VertexSet]]) -> List[VertexSet]:
        """Turn one tree cover per kernel into a tree cover of the original graph."""
        parts: List[VertexSet] = []
        for labels, cover in zip(self.kernel_labels, kernel_parts):
            for part in cover:
                parts.append(sum(bit(labels[v]) for v in iter_bits(part)))

        def holder(label: int) -> int:
            for i, part in enumerate(parts):
                if part >> label & 1:
                    return i
            raise RuntimeError(f"replay lost vertex {label}")

        for step in reversed(self.steps):
            if step.kind is StepKind.LEAF_DELETE:
                leaf, anchor = step.vertices
                parts[holder(anchor)] |= bit(leaf)
            elif step.kind is StepKind.SUPPRESS:
                w, a, _ = step.vertices
                parts[holder(a)] |= bit(w)
            elif step.kind is StepKind.BRIDGE_SPLIT:
                u, v = step.vertices
                iu, iv = holder(u), holder(v)
                parts[iu] |= parts[iv]
                del parts[iv]
            else:
                (c,) = step.vertices
                indices = sorted({holder(c)} | {holder(copy) for copy in step.copies})
                merged = 0
                for i in reversed(indices):
                    merged |= parts.pop(i)
                for copy in step.copies:
                    merged &= ~bit(copy)
                parts.insert(indices[0], merged | bit(c))
        return parts


def _next_leaf(h: nx.Graph):
    for v in sorted(h.nodes()):
        if h.degree(v) == 1:
            return v
    return None


def _next_suppressible(h: nx.Graph):
    for w in sorted(h.nodes()):
        if h.degree(w) == 2:
            a, b = sorted(h.neighbors(w))
            if not h.has_edge(a, b):
                return w, a, b
    return None


def reduce(g: Graph) -> Tuple[List[Graph], ReductionTrace]:
    """Reduce ``g`` to kernels with ``T(g) = sum T(kernel) + trace.offset``.

    Disconnected graphs are reduced component by component (T is additive).
    """
    nxg = g.to_networkx()
    pieces = [
        nxg.subgraph(comp).copy()
        for comp in sorted(nx.connected_components(nxg), key=min)
    ]
    stack = list(reversed(pieces))
    steps: List[ReductionStep] = []
    kernels: List[Graph] = []
    kernel_labels: List[Tuple[int, ...]] = []
    fresh = g.n

    while stack:
        h = stack.pop()
        if h.number_of_nodes() <= 1:
            kernel, labels = Graph.from_networkx(h)
            kernels.append(kernel)
            kernel_labels.append(labels)
            continue

        leaf = _next_leaf(h)
        if leaf is not None:
            (anchor,) = h.neighbors(leaf)
            steps.append(ReductionStep(StepKind.LEAF_DELETE, (leaf, anchor)))
            h.remove_node(leaf)
            stack.append(h)
            continue

        suppress = _next_suppressible(h)
        if suppress is not None:
            w, a, b = suppress
            steps.append(ReductionStep(StepKind.SUPPRESS, (w, a, b)))
            h.remove_node(w)
            h.add_edge(a, b)
            stack.append(h)
            continue

        bridges = sorted(tuple(sorted(e)) for e in nx.bridges(h))
        if bridges:
            u, v = bridges[0]
            steps.append(ReductionStep(StepKind.BRIDGE_SPLIT, (u, v), offset=-1))
            h.remove_edge(u, v)
            side_u = h.subgraph(nx.node_connected_component(h, u)).copy()
            side_v = h.subgraph(nx.node_connected_component(h, v)).copy()
            stack.extend((side_v, side_u))
            continue

        cuts = sorted(nx.articulation_points(h))
        if cuts:
            c = cuts[0]
            rest = h.copy()
            rest.remove_node(c)
            comps = sorted(nx.connected_components(rest), key=min)
            split = []
            copies = []
            for i, comp in enumerate(comps):
                piece = h.subgraph(set(comp) | {c}).copy()
                if i:
                    nx.relabel_nodes(piece, {c: fresh}, copy=False)
                    copies.append(fresh)
                    fresh += 1
                split.append(piece)
            steps.append(
                ReductionStep(
                    StepKind.CUT_VERTEX_SPLIT, (c,), offset=-(len(comps) - 1), copies=tuple(copies)
                )
            )
            stack.extend(reversed(split))
            continue

        kernel, labels = Graph.from_networkx(h)
        kernels.append(kernel)
        kernel_labels.append(labels)

    trace = ReductionTrace(
        steps=tuple(steps),
        offset=sum(step.offset for step in steps),
        kernel_labels=tuple(kernel_labels),
        n=g.n,
    )
    logger.debug(
        "reduced %d vertices to kernels of sizes %s with offset %d",
        g.n, [k.n for k in kernels], trace.offset,
    )
    return kernels, trace
