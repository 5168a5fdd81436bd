"""Independent reference implementations used to cross-check the solvers.

These are deliberately naive and only meant for graphs with a handful of
vertices. They share no code with the package beyond the ``Graph`` type.
"""

from itertools import combinations
from typing import Iterator, List, Set

import networkx as nx
import sympy

from treecover_lab.certificates import IntegerMatrix
from treecover_lab.graph import Graph


def set_partitions(items: List[int]) -> Iterator[List[List[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def naive_tree_cover(g: Graph) -> int:
    """Minimum number of parts over every set partition whose parts induce trees."""
    if g.n == 0:
        return 0
    nxg = g.to_networkx()
    best = g.n
    for partition in set_partitions(list(range(g.n))):
        if len(partition) < best and all(nx.is_tree(nxg.subgraph(p)) for p in partition):
            best = len(partition)
    return best


def naive_path_cover(g: Graph) -> int:
    """Minimum number of induced paths covering the vertices."""
    if g.n == 0:
        return 0
    nxg = g.to_networkx()
    best = g.n
    for partition in set_partitions(list(range(g.n))):
        if len(partition) >= best:
            continue
        ok = True
        for part in partition:
            sub = nxg.subgraph(part)
            if not nx.is_tree(sub) or max(dict(sub.degree()).values(), default=0) > 2:
                ok = False
                break
        if ok:
            best = len(partition)
    return best


def naive_closure(g: Graph, start: Set[int], psd: bool) -> Set[int]:
    nxg = g.to_networkx()
    filled = set(start)
    changed = True
    while changed:
        changed = False
        if psd:
            rest = nxg.subgraph(set(nxg) - filled)
            regions = [set(c) for c in nx.connected_components(rest)]
        else:
            regions = [set(nxg) - filled]
        for region in regions:
            for v in list(filled):
                unfilled = [w for w in nxg[v] if w in region and w not in filled]
                if len(unfilled) == 1:
                    filled.add(unfilled[0])
                    changed = True
    return filled


def naive_forcing_number(g: Graph, psd: bool) -> int:
    """Smallest start set whose closure is everything, by trying all subsets."""
    if g.n == 0:
        return 0
    for size in range(1, g.n + 1):
        for start in combinations(range(g.n), size):
            if len(naive_closure(g, set(start), psd)) == g.n:
                return size
    return g.n


def networkx_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def sympy_rank(matrix: IntegerMatrix) -> int:
    return int(sympy.Matrix(matrix.to_rows()).rank()) if matrix.rows and matrix.cols else 0
