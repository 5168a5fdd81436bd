"""Theorem verification over exhaustively enumerated small graphs.

Each registered theorem pairs a graph source and a hypothesis with a check
returning pass, fail (with the observed values) or skip. ``verify_theorems``
fans batches of graph6 strings out to worker processes and merges the
results in graph6 order, so reports do not depend on the worker count.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .certificates import incidence_gram
from .config import BudgetConfig, LabConfig
from .covers import (
    TreeCover,
    bound_report,
    find_removable_star,
    girth5_cover,
    half_order_cover,
    independent_set_cover,
    path_cover_exact,
    tree_cover_bruteforce,
    tree_cover_exact,
)
from .enumeration import enumerate_connected_upto, hereditary_class
from .errors import PreconditionError, UnsupportedSizeError
from .extremal import (
    classify_even_extremal,
    classify_extremal,
    enumerate_family_F,
    generate_k_tree,
    is_family_F,
)
from .forcing import psd_zero_forcing_number, zero_forcing_number
from .formats import parse_graph6, to_graph6
from .graph import Graph, bit, complement, line_graph, popcount, to_list, triangle_augment
from .structure import (
    block_decomposition,
    girth,
    independence_number,
    is_outerplanar,
    treewidth,
)

logger = logging.getLogger(__name__)

BATCH_SIZE = 64


class Outcome(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass(frozen=True)
class CheckResult:
    outcome: Outcome
    observed: Dict[str, object] = field(default_factory=dict)


PASSED = CheckResult(Outcome.PASS)


def _fail(**observed: object) -> CheckResult:
    return CheckResult(Outcome.FAIL, dict(observed))


def _skip(reason: str) -> CheckResult:
    return CheckResult(Outcome.SKIP, {"reason": reason})


def _T(g: Graph, budgets: BudgetConfig) -> int:
    return tree_cover_exact(g, limit=budgets.exact_cover_max)[0]


def _half(n: int) -> int:
    return (n + 1) // 2


# Checks


def check_half_order(g: Graph, budgets: BudgetConfig) -> CheckResult:
    cover = half_order_cover(g)
    if cover.size > _half(g.n):
        return _fail(parts=cover.size, bound=_half(g.n), cover=cover.as_lists())
    return PASSED


def check_removable_star(g: Graph, budgets: BudgetConfig) -> CheckResult:
    star = find_removable_star(g)
    size = popcount(star)
    is_star = g.is_tree(star) and any(
        popcount(g.adj[c] & star) == size - 1 for c in to_list(star)
    )
    rest = g.vertices & ~star
    if not is_star or size < 2 or not rest or not g.is_connected(rest):
        return _fail(star=to_list(star))
    return PASSED


def check_girth5(g: Graph, budgets: BudgetConfig) -> CheckResult:
    cover = girth5_cover(g)
    t = _T(g, budgets)
    if cover.size > g.n // 3 or t > g.n // 3:
        return _fail(parts=cover.size, T=t, bound=g.n // 3, cover=cover.as_lists())
    return PASSED


def check_odd_extremal(g: Graph, budgets: BudgetConfig) -> CheckResult:
    t = _T(g, budgets)
    member = is_family_F(g)
    if (t == _half(g.n)) != member:
        return _fail(T=t, bound=_half(g.n), family_F=member)
    return PASSED


def check_even_extremal(g: Graph, budgets: BudgetConfig) -> CheckResult:
    t = _T(g, budgets)
    result = classify_even_extremal(g)
    if (t == g.n // 2) != result.is_extremal:
        return _fail(T=t, bound=g.n // 2, classification=result.label)
    return PASSED


def check_leaf_invariance(g: Graph, budgets: BudgetConfig) -> CheckResult:
    leaves = g.leaves()
    if not leaves or g.n < 2:
        return _skip("no leaf")
    t = _T(g, budgets)
    for v in leaves:
        smaller, _ = g.delete_vertex(v)
        tv = _T(smaller, budgets)
        if tv != t:
            return _fail(T=t, leaf=v, T_without_leaf=tv)
    return PASSED


def check_subdivision_invariance(g: Graph, budgets: BudgetConfig) -> CheckResult:
    if not g.m:
        return _skip("no edge")
    t = _T(g, budgets)
    for u, v in g.edges():
        ts = _T(g.subdivide_edge(u, v), budgets)
        if ts != t:
            return _fail(T=t, edge=[u, v], T_subdivided=ts)
    return PASSED


def check_bridge_additivity(g: Graph, budgets: BudgetConfig) -> CheckResult:
    bridges = block_decomposition(g).bridges
    if not bridges:
        return _skip("no bridge")
    t = _T(g, budgets)
    for u, v in bridges:
        split = g.delete_edge(u, v)
        sides = [split.induced_subgraph(side)[0] for side in split.components()]
        total = sum(_T(side, budgets) for side in sides) - 1
        if total != t:
            return _fail(T=t, bridge=[u, v], sides_minus_one=total)
    return PASSED


def check_cut_vertex(g: Graph, budgets: BudgetConfig) -> CheckResult:
    cuts = block_decomposition(g).cut_vertices
    if not cuts:
        return _skip("no cut vertex")
    t = _T(g, budgets)
    for c in to_list(cuts):
        pieces = g.components(g.vertices & ~bit(c))
        total = sum(_T(g.induced_subgraph(p | bit(c))[0], budgets) for p in pieces)
        formula = total - len(pieces) + 1
        if formula != t:
            return _fail(T=t, cut_vertex=c, formula=formula)
    return PASSED


def check_edge_bracket(g: Graph, budgets: BudgetConfig) -> CheckResult:
    if not g.m:
        return _skip("no edge")
    t = _T(g, budgets)
    for u, v in g.edges():
        te = _T(g.delete_edge(u, v), budgets)
        if not t - 1 <= te <= t + 1:
            return _fail(T=t, edge=[u, v], T_without_edge=te)
    return PASSED


def check_vertex_bracket(g: Graph, budgets: BudgetConfig) -> CheckResult:
    t = _T(g, budgets)
    for v in range(g.n):
        tv = _T(g.delete_vertex(v)[0], budgets)
        if not t - 1 <= tv <= t + g.degree(v) - 1:
            return _fail(T=t, vertex=v, degree=g.degree(v), T_without_vertex=tv)
    return PASSED


def check_independence_bound(g: Graph, budgets: BudgetConfig) -> CheckResult:
    t = _T(g, budgets)
    alpha, witness = independence_number(g)
    cover = independent_set_cover(g, witness)
    if t > g.n - alpha or cover.size != g.n - alpha:
        return _fail(T=t, alpha=alpha, cover_parts=cover.size)
    return PASSED


def check_path_cover(g: Graph, budgets: BudgetConfig) -> CheckResult:
    t = _T(g, budgets)
    p = path_cover_exact(g, limit=budgets.path_cover_max)
    if t > p:
        return _fail(T=t, P=p)
    return PASSED


def check_psd_forcing(g: Graph, budgets: BudgetConfig) -> CheckResult:
    t = _T(g, budgets)
    zplus = psd_zero_forcing_number(g, limit=budgets.forcing_max)
    z = zero_forcing_number(g, limit=budgets.forcing_max)
    if not t <= zplus <= z:
        return _fail(T=t, Zplus=zplus, Z=z)
    return PASSED


def check_f_chain(g: Graph, budgets: BudgetConfig) -> CheckResult:
    values = {
        "T": _T(g, budgets),
        "P": path_cover_exact(g, limit=budgets.path_cover_max),
        "Z": zero_forcing_number(g, limit=budgets.forcing_max),
        "Zplus": psd_zero_forcing_number(g, limit=budgets.forcing_max),
    }
    matching = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    small_parts = len(matching) == g.n // 2
    if set(values.values()) != {_half(g.n)} or not small_parts:
        return _fail(bound=_half(g.n), matching=len(matching), **values)
    return PASSED


def check_pendant_blocks(g: Graph, budgets: BudgetConfig) -> CheckResult:
    decomposition = block_decomposition(g)
    if len(decomposition.blocks) < 2:
        return _skip("single block")
    pendant = decomposition.pendant_blocks()
    if len(pendant) < 2:
        return _fail(blocks=len(decomposition.blocks), pendant_blocks=len(pendant))
    return PASSED


def check_triangle_augment(g: Graph, budgets: BudgetConfig) -> CheckResult:
    if g.n < 2:
        return _skip("no edge")
    _, checks = incidence_gram(g)
    augmented, edge_vertices = triangle_augment(g)
    if augmented.n <= budgets.exact_cover_max:
        t = _T(augmented, budgets)
        method = "exact"
    else:
        t = independent_set_cover(augmented, edge_vertices).size
        method = "constructive"
    if not checks.passed or checks.alpha != g.m or t > g.n:
        return _fail(T=t, method=method, **checks.to_dict())
    return PASSED


def check_line_graph(g: Graph, budgets: BudgetConfig) -> CheckResult:
    lg, _ = line_graph(g)
    bound = _half(g.m)
    if lg.n <= budgets.exact_cover_max:
        t = _T(lg, budgets)
        method = "exact"
    else:
        t = half_order_cover(lg).size
        method = "constructive"
    if not t <= bound <= g.m - g.n + 2:
        return _fail(T_line=t, method=method, ceil_m_half=bound, m_minus_n_plus_2=g.m - g.n + 2)
    return PASSED


def _complement_check(g: Graph, budgets: BudgetConfig, nullity_bound: int) -> CheckResult:
    h = complement(g)
    if not h.is_connected():
        return _skip("complement is disconnected")
    t = _T(h, budgets)
    if not t <= _half(g.n) <= nullity_bound:
        return _fail(T_complement=t, bound=_half(g.n), nullity_bound=nullity_bound)
    return PASSED


def check_complement(g: Graph, budgets: BudgetConfig) -> CheckResult:
    return _complement_check(g, budgets, (g.n - 3) - (g.m - (g.n - 1)))


def check_treewidth_complement(g: Graph, budgets: BudgetConfig) -> CheckResult:
    tw = treewidth(g, limit=budgets.treewidth_max)
    return _complement_check(g, budgets, g.n - tw - 2)


def check_k_tree(g: Graph, budgets: BudgetConfig) -> CheckResult:
    # the last vertex added has degree k and no vertex has less
    k = min(g.degrees())
    t = _T(g, budgets)
    if 2 * t != k + 1:
        return _fail(k=k, T=t)
    return PASSED


def check_oracle(g: Graph, budgets: BudgetConfig) -> CheckResult:
    direct, _ = tree_cover_exact(g, use_reductions=False, limit=budgets.exact_cover_max)
    reduced = _T(g, budgets)
    naive = tree_cover_bruteforce(g)
    if not direct == reduced == naive:
        return _fail(direct=direct, reduced=reduced, bruteforce=naive)
    return PASSED


def check_triangle_free_conjecture(g: Graph, budgets: BudgetConfig) -> CheckResult:
    t = _T(g, budgets)
    bound = (g.n + 2) // 3
    if t > bound:
        return _fail(T=t, bound=bound)
    return PASSED


# Registry

Check = Callable[[Graph, BudgetConfig], CheckResult]


@dataclass(frozen=True)
class Theorem:
    """A statement checked over a graph source.

    ``source`` is ``graphs`` (connected graphs of a hereditary ``family``),
    ``family-F`` (every graph whose blocks are all triangles) or ``k-tree``
    (seeded random 3- and 5-trees).
    """

    id: str
    statement: str
    hypothesis: str
    check: Check
    family: str = "connected"
    source: str = "graphs"
    n_min: int = 1
    default_n_max: int = 7
    parity: Optional[int] = None
    applies: Optional[Callable[[Graph], bool]] = None
    note: Optional[str] = None

    def describe(self) -> str:
        parity = {None: "", 0: ", even n", 1: ", odd n"}[self.parity]
        return f"{self.source}: {self.family}{parity}; {self.hypothesis}"


def _many_edges(g: Graph) -> bool:
    return g.m >= 2 * g.n - 3


def _few_edges(g: Graph) -> bool:
    return 2 * g.m <= 3 * g.n - 8


def _small_treewidth(g: Graph) -> bool:
    return 2 * treewidth(g) <= g.n - 4


THEOREMS: Dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem(
            "half-order", "T(G) <= ceil(n/2) via removable stars", "connected, n >= 2",
            check_half_order, n_min=2, default_n_max=8,
        ),
        Theorem(
            "removable-star", "a star K_{1,p} with connected nonempty remainder exists",
            "connected, n >= 3", check_removable_star, n_min=3,
        ),
        Theorem(
            "girth5", "T(G) <= floor(n/3)", "connected, girth >= 5, n >= 6",
            check_girth5, family="girth-5", n_min=6, default_n_max=9,
        ),
        Theorem(
            "odd-extremal", "T(G) = ceil(n/2) iff every block is a triangle",
            "connected outerplanar, odd n >= 3", check_odd_extremal,
            family="outerplanar", n_min=3, default_n_max=9, parity=1,
        ),
        Theorem(
            "even-extremal", "T(G) = n/2 iff leaf, bridge or core-and-triangles construction",
            "connected outerplanar, even n >= 4", check_even_extremal,
            family="outerplanar", n_min=4, default_n_max=8, parity=0,
            note="disagreements are reported as counterexamples, not reconciled",
        ),
        Theorem(
            "leaf-invariance", "T(G - v) = T(G) for every leaf v", "connected with a leaf",
            check_leaf_invariance, n_min=2, default_n_max=8,
        ),
        Theorem(
            "subdivision-invariance", "subdividing an edge keeps T", "connected, m >= 1",
            check_subdivision_invariance, n_min=2,
        ),
        Theorem(
            "bridge-additivity", "T(G) = T(G1) + T(G2) - 1 across a bridge",
            "connected with a bridge", check_bridge_additivity, n_min=2, default_n_max=8,
        ),
        Theorem(
            "cut-vertex", "T(G) = sum T(Gi) - h + 1 across a cut vertex",
            "connected with a cut vertex", check_cut_vertex, n_min=3,
        ),
        Theorem(
            "edge-bracket", "T(G) - 1 <= T(G - e) <= T(G) + 1", "connected, m >= 1",
            check_edge_bracket, n_min=2,
        ),
        Theorem(
            "vertex-bracket", "T(G) - 1 <= T(G - v) <= T(G) + deg(v) - 1", "connected",
            check_vertex_bracket,
        ),
        Theorem(
            "independence-bound", "T(G) <= n - alpha(G), attained by a star cover",
            "connected, n >= 2", check_independence_bound, n_min=2,
        ),
        Theorem(
            "path-cover", "T(G) <= P(G) with P over induced paths", "connected",
            check_path_cover,
            note="every induced path is an induced tree, so the bound runs T(G) <= P(G)",
        ),
        Theorem(
            "psd-forcing", "T(G) <= Z+(G) <= Z(G)", "connected", check_psd_forcing,
            note="M+(G) = 2 implies Z+(G) = 2 needs M+ and is not checked",
        ),
        Theorem(
            "f-chain", "Z = P = T = Z+ = ceil(n/2), with a cover by edges and one vertex",
            "every block a triangle", check_f_chain, family="family-F", source="family-F",
            n_min=3, default_n_max=11,
        ),
        Theorem(
            "pendant-blocks", "at least two pendant blocks", "every block a triangle, b >= 2",
            check_pendant_blocks, family="family-F", source="family-F", n_min=5,
            default_n_max=11,
        ),
        Theorem(
            "triangle-augment",
            "X X^T certifies rank m on G^tri, alpha(G^tri) = m and T(G^tri) <= n",
            "connected, n >= 2", check_triangle_augment, n_min=2, default_n_max=6,
            note="the rank bound is compared with alpha(G^tri), not alpha(G)",
        ),
        Theorem(
            "line-graph", "T(L(G)) <= ceil(m/2) <= m - n + 2", "connected, m >= 2n - 3",
            check_line_graph, n_min=2, default_n_max=6, applies=_many_edges,
            note="the ceil(n/2) bound applied to L(G) gives T(L(G)) <= ceil(m/2)",
        ),
        Theorem(
            "complement", "T(Gc) <= ceil(n/2) <= (n - 3) - (m - (n - 1))",
            "connected, m <= 3n/2 - 4", check_complement, n_min=2, applies=_few_edges,
            note="graphs whose complement is disconnected are skipped",
        ),
        Theorem(
            "treewidth-complement", "T(Gc) <= ceil(n/2) <= n - tw(G) - 2",
            "connected, tw(G) <= (n - 4)/2", check_treewidth_complement, n_min=4,
            applies=_small_treewidth,
            note="graphs whose complement is disconnected are skipped",
        ),
        Theorem(
            "k-tree", "T(G) = (k + 1)/2 for odd k", "seeded 3-trees and 5-trees",
            check_k_tree, family="k in {3, 5}", source="k-tree", n_min=4, default_n_max=12,
        ),
        Theorem(
            "oracle", "exact solver, reduced solver and partition oracle agree", "connected",
            check_oracle,
        ),
    ]
}

TRIANGLE_FREE_CONJECTURE = Theorem(
    "triangle-free-conjecture", "T(G) <= ceil(n/3)", "connected, triangle-free",
    check_triangle_free_conjecture, family="triangle-free",
)

_REGISTRY: Dict[str, Theorem] = {**THEOREMS, TRIANGLE_FREE_CONJECTURE.id: TRIANGLE_FREE_CONJECTURE}


def select_theorems(selection: Union[str, Iterable[str], None]) -> List[Theorem]:
    """Resolve ``all``, a comma-separated string or a list of ids."""
    if selection is None or selection == "all":
        return list(THEOREMS.values())
    ids = [s.strip() for s in selection.split(",")] if isinstance(selection, str) else list(selection)
    unknown = [i for i in ids if i not in THEOREMS]
    if unknown:
        raise PreconditionError(
            f"unknown theorem id(s): {', '.join(unknown)}; choose from {', '.join(THEOREMS)}"
        )
    return [THEOREMS[i] for i in dict.fromkeys(ids)]


# Reports


@dataclass
class Violation:
    graph6: str
    observed: Dict[str, object]

    def to_dict(self) -> Dict[str, object]:
        return {"graph6": self.graph6, "observed": self.observed}


@dataclass
class VerificationReport:
    theorem: str
    family: str
    n_min: int
    n_max: int
    graphs_checked: int = 0
    violations: List[Violation] = field(default_factory=list)
    runtime_seconds: float = 0.0
    skipped: int = 0
    notes: List[str] = field(default_factory=list)
    research: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, object]:
        return {
            "theorem": self.theorem,
            "family": self.family,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "graphs_checked": self.graphs_checked,
            "skipped": self.skipped,
            "violations": [v.to_dict() for v in self.violations],
            "runtime_seconds": round(self.runtime_seconds, 3),
            "notes": list(self.notes),
            "research": self.research,
        }


def _graph_source(theorem: Theorem, n_max: int, budgets: BudgetConfig, seeds: int) -> Iterator[Graph]:
    if theorem.source == "family-F":
        for b in range(1, (n_max - 1) // 2 + 1):
            for g in enumerate_family_F(b):
                if g.n >= theorem.n_min:
                    yield g
        return
    if theorem.source == "k-tree":
        for k in (3, 5):
            for n in range(max(k + 1, theorem.n_min), n_max + 1):
                for seed in range(seeds):
                    yield generate_k_tree(k, n, seed)
        return
    if n_max > budgets.enumeration_max:
        raise UnsupportedSizeError("enumerate_graphs", n_max, budgets.enumeration_max)
    hereditary = hereditary_class(theorem.family, budgets.outerplanar_max)
    for g in enumerate_connected_upto(
        n_max, n_min=theorem.n_min, hereditary=hereditary, limit=budgets.enumeration_max
    ):
        if theorem.parity is not None and g.n % 2 != theorem.parity:
            continue
        if theorem.applies is not None and not theorem.applies(g):
            continue
        yield g


def _run_batch(
    theorem_id: str, batch: Sequence[str], budgets: BudgetConfig
) -> List[Tuple[str, CheckResult]]:
    theorem = _REGISTRY[theorem_id]
    return [(code, theorem.check(parse_graph6(code), budgets)) for code in batch]


def _batches(codes: Sequence[str], size: int = BATCH_SIZE) -> List[Sequence[str]]:
    return [codes[i:i + size] for i in range(0, len(codes), size)]


def run_theorem(
    theorem: Theorem,
    n_max: int,
    config: Optional[LabConfig] = None,
    workers: int = 1,
    progress: Optional[Callable[[int], None]] = None,
    research: bool = False,
) -> VerificationReport:
    config = config or LabConfig()
    budgets = config.budgets
    started = time.perf_counter()
    logger.info("checking %s up to n=%d", theorem.id, n_max)

    codes = sorted(
        {to_graph6(g) for g in _graph_source(theorem, n_max, budgets, config.harness.k_tree_seeds)}
    )
    batches = _batches(codes)
    results: List[Tuple[str, CheckResult]] = []
    if workers > 1 and len(batches) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_run_batch, theorem.id, b, budgets) for b in batches]
            for future in futures:
                chunk = future.result()
                results.extend(chunk)
                if progress:
                    progress(len(chunk))
    else:
        for batch in batches:
            chunk = _run_batch(theorem.id, batch, budgets)
            results.extend(chunk)
            if progress:
                progress(len(chunk))

    report = VerificationReport(
        theorem=theorem.id,
        family=theorem.describe(),
        n_min=theorem.n_min,
        n_max=n_max,
        notes=[theorem.note] if theorem.note else [],
        research=research,
    )
    for code, result in sorted(results, key=lambda item: item[0]):
        if result.outcome is Outcome.SKIP:
            report.skipped += 1
            continue
        report.graphs_checked += 1
        if result.outcome is Outcome.FAIL:
            report.violations.append(Violation(code, result.observed))
            logger.warning("%s fails on %s: %s", theorem.id, code, result.observed)
    report.runtime_seconds = time.perf_counter() - started
    logger.info(
        "%s: %d graphs checked, %d skipped, %d violations",
        theorem.id, report.graphs_checked, report.skipped, len(report.violations),
    )
    return report


def count_graphs(theorem: Theorem, n_max: int, config: Optional[LabConfig] = None) -> int:
    config = config or LabConfig()
    return sum(1 for _ in _graph_source(theorem, n_max, config.budgets, config.harness.k_tree_seeds))


def verify_theorems(
    selection: Union[str, Iterable[str], None] = "all",
    n_max: Union[int, Dict[str, int], None] = None,
    config: Optional[LabConfig] = None,
    workers: Optional[int] = None,
    progress: Optional[Callable[[int], None]] = None,
) -> List[VerificationReport]:
    """Check each selected theorem; ``n_max`` is one bound for all or a per-id mapping."""
    config = config or LabConfig()
    workers = workers or config.harness.workers
    reports = []
    for theorem in select_theorems(selection):
        if isinstance(n_max, int):
            bound = n_max
        elif isinstance(n_max, dict) and theorem.id in n_max:
            bound = n_max[theorem.id]
        else:
            bound = config.harness.n_max_for(theorem.id, theorem.default_n_max)
        reports.append(run_theorem(theorem, bound, config, workers, progress))
    return reports


def scan_conjecture_triangle_free(
    n_max: int,
    config: Optional[LabConfig] = None,
    workers: int = 1,
    progress: Optional[Callable[[int], None]] = None,
) -> VerificationReport:
    """T(G) <= ceil(n/3) over connected triangle-free graphs; a violation is a finding."""
    report = run_theorem(TRIANGLE_FREE_CONJECTURE, n_max, config, workers, progress, research=True)
    report.notes.append("conjecture scan: violations are research findings, not failures")
    return report


# Single-graph computation

PARAMETERS = (
    "n", "m", "girth", "alpha", "treewidth", "outerplanar", "T", "T_cover",
    "P", "Z", "Zplus", "blocks", "extremal", "bounds",
)


def compute(
    g: Graph, params: Union[str, Sequence[str]], config: Optional[LabConfig] = None
) -> Dict[str, object]:
    """Evaluate the requested parameters of one graph, in request order."""
    budgets = (config or LabConfig()).budgets
    names = [p.strip() for p in params.split(",")] if isinstance(params, str) else list(params)
    unknown = [p for p in names if p not in PARAMETERS]
    if unknown:
        raise PreconditionError(
            f"unknown parameter(s): {', '.join(unknown)}; choose from {', '.join(PARAMETERS)}"
        )
    record: Dict[str, object] = {}
    cover: Optional[TreeCover] = None
    for name in names:
        if name == "n":
            record[name] = g.n
        elif name == "m":
            record[name] = g.m
        elif name == "girth":
            record[name] = girth(g)
        elif name == "alpha":
            record[name] = independence_number(g)[0]
        elif name == "treewidth":
            record[name] = treewidth(g, limit=budgets.treewidth_max)
        elif name == "outerplanar":
            record[name] = is_outerplanar(g, limit=budgets.outerplanar_max)
        elif name in ("T", "T_cover"):
            if cover is None:
                _, cover = tree_cover_exact(g, limit=budgets.exact_cover_max)
            record[name] = cover.size if name == "T" else cover.as_lists()
        elif name == "P":
            record[name] = path_cover_exact(g, limit=budgets.path_cover_max)
        elif name == "Z":
            record[name] = zero_forcing_number(g, limit=budgets.forcing_max)
        elif name == "Zplus":
            record[name] = psd_zero_forcing_number(g, limit=budgets.forcing_max)
        elif name == "blocks":
            record[name] = block_decomposition(g).to_dict()
        elif name == "extremal":
            record[name] = classify_extremal(g).label
        elif name == "bounds":
            record[name] = bound_report(
                g, limit=budgets.exact_cover_max, forcing_limit=budgets.forcing_max
            ).to_dict()
    return record
