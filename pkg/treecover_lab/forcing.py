"""Standard and positive semidefinite zero forcing."""

import logging
import random
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Set, Tuple

from .errors import UnsupportedSizeError
from .graph import Graph, VertexSet, bit, iter_bits, lowest, popcount, to_mask

logger = logging.getLogger(__name__)

FORCING_LIMIT = 12


@dataclass(frozen=True)
class ForcingState:
    filled: VertexSet
    history: Tuple[Tuple[int, int], ...]

    def is_complete(self, g: Graph) -> bool:
        return self.filled == g.vertices


def _psd_moves(g: Graph, filled: VertexSet) -> List[Tuple[int, int]]:
    moves = []
    for comp in g.components(g.vertices & ~filled):
        for u in iter_bits(filled):
            target = g.adj[u] & comp
            if target and not target & (target - 1):
                moves.append((u, lowest(target)))
    return moves


def _standard_moves(g: Graph, filled: VertexSet) -> List[Tuple[int, int]]:
    unfilled = g.vertices & ~filled
    moves = []
    for u in iter_bits(filled):
        target = g.adj[u] & unfilled
        if target and not target & (target - 1):
            moves.append((u, lowest(target)))
    return moves


def _run(g: Graph, start: VertexSet, psd: bool, rng: Optional[random.Random]) -> ForcingState:
    moves_of = _psd_moves if psd else _standard_moves
    filled = start & g.vertices
    history = []
    while True:
        moves = moves_of(g, filled)
        if not moves:
            return ForcingState(filled=filled, history=tuple(history))
        u, w = rng.choice(moves) if rng is not None else moves[0]
        filled |= bit(w)
        history.append((u, w))


def psd_closure(g: Graph, start: VertexSet, rng: Optional[random.Random] = None) -> ForcingState:
    """Close ``start`` under the positive semidefinite rule.

    A filled ``u`` forces ``w`` when ``w`` is the only unfilled neighbour of
    ``u`` inside one component of ``G - filled``. Forces fire one at a time, in
    a random order when ``rng`` is given; the filled set does not depend on it.
    """
    return _run(g, start, psd=True, rng=rng)


def zero_forcing_closure(
    g: Graph, start: VertexSet, rng: Optional[random.Random] = None
) -> ForcingState:
    """Close ``start`` under the standard rule (exactly one unfilled neighbour)."""
    return _run(g, start, psd=False, rng=rng)


def _closure_mask(g: Graph, filled: VertexSet, psd: bool) -> VertexSet:
    # every force available in a round stays legal after the others fire
    moves_of = _psd_moves if psd else _standard_moves
    while True:
        moves = moves_of(g, filled)
        if not moves:
            return filled
        for _, w in moves:
            filled |= bit(w)


def minimum_forcing_set(g: Graph, psd: bool, limit: int = FORCING_LIMIT) -> VertexSet:
    """Smallest forcing set found by increasing size.

    A candidate contained in the closure of an earlier candidate of the same
    size is skipped, since its own closure can be no larger.
    """
    operation = "psd_zero_forcing_number" if psd else "zero_forcing_number"
    if g.n > limit:
        raise UnsupportedSizeError(operation, g.n, limit)
    if g.n == 0:
        return 0
    lower = 1 if psd else max(1, min(g.degrees()))
    for k in range(lower, g.n + 1):
        closures: Set[VertexSet] = set()
        for chosen in combinations(range(g.n), k):
            start = to_mask(chosen)
            if any(start & ~c == 0 for c in closures):
                continue
            filled = _closure_mask(g, start, psd)
            if filled == g.vertices:
                logger.debug("%s settled at %d on %d vertices", operation, k, g.n)
                return start
            closures.add(filled)
    return g.vertices


def psd_zero_forcing_number(g: Graph, limit: int = FORCING_LIMIT) -> int:
    return popcount(minimum_forcing_set(g, psd=True, limit=limit))


def zero_forcing_number(g: Graph, limit: int = FORCING_LIMIT) -> int:
    return popcount(minimum_forcing_set(g, psd=False, limit=limit))
