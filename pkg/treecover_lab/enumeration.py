"""Generation of graphs up to isomorphism by vertex augmentation.

Every graph on ``k`` vertices arises from a graph on ``k - 1`` vertices by
adding a vertex of minimum degree, so only augmentations whose new vertex has
minimum degree are tried, and duplicates are removed by canonical form. A
hereditary predicate (closed under vertex deletion) is applied at every level,
which keeps the search inside the class.
"""

import logging
from functools import partial
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .errors import UnsupportedSizeError
from .graph import Graph, iter_bits, popcount
from .structure import OUTERPLANAR_LIMIT, canonical_labeling, girth, is_outerplanar

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 9

GraphPredicate = Callable[[Graph], bool]


def _augmentations(h: Graph) -> Iterator[Graph]:
    degrees = h.degrees()
    for subset in range(1 << h.n):
        size = popcount(subset)
        if any(degrees[u] + (subset >> u & 1) < size for u in range(h.n)):
            continue
        yield h.add_vertex(subset)


def _level(previous: List[Graph], hereditary: Optional[GraphPredicate]) -> List[Graph]:
    found: Dict[int, Graph] = {}
    for h in previous:
        for g in _augmentations(h):
            if hereditary is not None and not hereditary(g):
                continue
            code, labeling = canonical_labeling(g)
            if code not in found:
                found[code] = g.relabel(labeling)
    return [found[code] for code in sorted(found)]


def enumerate_graphs(
    n: int,
    hereditary: Optional[GraphPredicate] = None,
    connected: bool = False,
    limit: int = ENUMERATION_LIMIT,
) -> Iterator[Graph]:
    """One canonically labelled graph per isomorphism class on ``n`` vertices."""
    if n > limit:
        raise UnsupportedSizeError("enumerate_graphs", n, limit)
    level = [Graph.empty(0)]
    for k in range(1, n + 1):
        level = _level(level, hereditary)
        logger.debug("generated %d graphs on %d vertices", len(level), k)
    for g in level:
        if not connected or g.is_connected():
            yield g


def enumerate_connected(
    n: int, hereditary: Optional[GraphPredicate] = None, limit: int = ENUMERATION_LIMIT
) -> Iterator[Graph]:
    if n < 1:
        return iter(())
    return enumerate_graphs(n, hereditary=hereditary, connected=True, limit=limit)


def enumerate_connected_upto(
    n_max: int, n_min: int = 1, hereditary: Optional[GraphPredicate] = None,
    limit: int = ENUMERATION_LIMIT,
) -> Iterator[Graph]:
    """Connected graphs for every order in ``n_min..n_max``, one level built on the last."""
    if n_max > limit:
        raise UnsupportedSizeError("enumerate_graphs", n_max, limit)
    level = [Graph.empty(0)]
    for k in range(1, n_max + 1):
        level = _level(level, hereditary)
        if k >= n_min:
            for g in level:
                if g.is_connected():
                    yield g


# Hereditary classes used by the harness


def triangle_free(g: Graph) -> bool:
    return all(
        not g.adj[u] & g.adj[v] for u in range(g.n) for v in iter_bits(g.adj[u]) if u < v
    )


def girth_at_least_five(g: Graph) -> bool:
    length = girth(g)
    return length is None or length >= 5


def outerplanar(g: Graph) -> bool:
    return is_outerplanar(g)


HEREDITARY_CLASSES: Dict[str, GraphPredicate] = {
    "triangle-free": triangle_free,
    "girth-5": girth_at_least_five,
    "outerplanar": outerplanar,
}


def hereditary_class(
    name: str, outerplanar_limit: int = OUTERPLANAR_LIMIT
) -> Optional[GraphPredicate]:
    """Predicate for a named class, or None when the name is not a hereditary class."""
    if name == "outerplanar":
        return partial(is_outerplanar, limit=outerplanar_limit)
    return HEREDITARY_CLASSES.get(name)


def class_sizes(n_max: int, hereditary: Optional[GraphPredicate] = None) -> List[Tuple[int, int]]:
    """(order, number of connected classes) pairs, handy for cross-checking counts."""
    counts: Dict[int, int] = {}
    for g in enumerate_connected_upto(n_max, hereditary=hereditary):
        counts[g.n] = counts.get(g.n, 0) + 1
    return sorted(counts.items())
