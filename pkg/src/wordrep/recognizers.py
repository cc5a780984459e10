"""Decision procedures: comparability, word-representability, and minimality.

Word-representability is decided by an exhaustive backtracking search for a
semi-transitive orientation. Edge directions are assigned one at a time in a
deterministic order; a branch dies as soon as the partial orientation has a
directed cycle or a violating path, both of which survive any completion, so
the pruning is sound and the search is exhaustive within its node budget.

Comparability is decided the same way but with forcing: assigning a->b forces
a->w whenever w is a neighbour of a but not of b (the reverse direction would
demand the missing chord w..b), and every two-arc chain forces its closing
chord. Backtracking covers the free choices that forcing leaves open.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from . import graphs
from .errors import BudgetExceeded, VertexOutOfRange
from .graphs import Graph, bits
from .orientations import (
    Orientation,
    is_semi_transitive,
    is_transitive,
    source_of,
)

DEFAULT_NODE_BUDGET = 10_000_000

EDGE_ORDER_POLICIES = ("max-degree-asc", "max-degree-desc", "lex")


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the orientation searches.

    fixed_source: require every edge at this vertex to point away from it.
    edge_order: static assignment order; the default sorts edges by increasing
        max endpoint degree with lexicographic tie-breaks.
    node_budget: maximum branch attempts before BudgetExceeded.
    """

    fixed_source: int | None = None
    edge_order: str = "max-degree-asc"
    node_budget: int = DEFAULT_NODE_BUDGET

    def __post_init__(self):
        if self.node_budget <= 0:
            raise ValueError("node_budget must be positive")
        if self.edge_order not in EDGE_ORDER_POLICIES:
            raise ValueError(f"unknown edge order {self.edge_order!r}; choose from {EDGE_ORDER_POLICIES}")


DEFAULT_CONFIG = SearchConfig()


def _ordered_edges(g: Graph, policy: str) -> list[tuple[int, int]]:
    edges = g.edges()
    deg = [g.adj[v].bit_count() for v in range(g.n)]
    if policy == "max-degree-asc":
        return sorted(edges, key=lambda e: (max(deg[e[0]], deg[e[1]]), e))
    if policy == "max-degree-desc":
        return sorted(edges, key=lambda e: (-max(deg[e[0]], deg[e[1]]), e))
    return edges


class _SemiTransSearch:
    """Backtracking over edge directions with incremental violation pruning.

    State per vertex: reach (descendants) and anc (ancestors) bitmasks over the
    arcs assigned so far. Adding a->b only needs the chords (u, w) with
    u reaching a and b reaching w rechecked, because any new violating path
    runs through the new arc (or uses it as its endpoint chord).
    """

    def __init__(self, g: Graph, edge_seq: list[tuple[int, int]], node_budget: int):
        self.n = g.n
        self.adj = g.adj
        self.edges = edge_seq
        self.budget = node_budget
        self.nodes = 0
        self.arcs: list[tuple[int, int]] = []

    def _attempt(self, a, b, reach, anc):
        """Try adding arc a->b; return updated (reach, anc) or None on cycle/violation."""
        if reach[b] >> a & 1:
            return None
        nr = reach[:]
        na = anc[:]
        desc = nr[b] | (1 << b)
        ancs = na[a] | (1 << a)
        x = ancs
        while x:
            low = x & -x
            nr[low.bit_length() - 1] |= desc
            x ^= low
        y = desc
        while y:
            low = y & -y
            na[low.bit_length() - 1] |= ancs
            y ^= low
        adj = self.adj
        for u, w in self.arcs:
            if ancs >> u & 1 and desc >> w & 1:
                b_set = (nr[u] & na[w]) | (1 << u) | (1 << w)
                t = b_set
                while t:
                    low = t & -t
                    if nr[low.bit_length() - 1] & b_set & ~adj[low.bit_length() - 1]:
                        return None
                    t ^= low
        b_set = (nr[a] & na[b]) | (1 << a) | (1 << b)
        t = b_set
        while t:
            low = t & -t
            if nr[low.bit_length() - 1] & b_set & ~adj[low.bit_length() - 1]:
                return None
            t ^= low
        return nr, na

    def preassign(self, arcs, reach, anc):
        """Seed fixed arcs (the fixed-source star); they can never conflict."""
        for a, b in arcs:
            res = self._attempt(a, b, reach, anc)
            assert res is not None
            reach, anc = res
            self.arcs.append((a, b))
        return reach, anc

    def find(self, i, reach, anc, halve_first):
        if i == len(self.edges):
            return True
        u, v = self.edges[i]
        directions = ((u, v),) if (halve_first and i == 0) else ((u, v), (v, u))
        for a, b in directions:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"semi-transitive search exceeded {self.budget} nodes")
            res = self._attempt(a, b, reach, anc)
            if res is not None:
                self.arcs.append((a, b))
                if self.find(i + 1, res[0], res[1], halve_first):
                    return True
                self.arcs.pop()
        return False

    def count(self, i, reach, anc):
        if i == len(self.edges):
            return 1
        u, v = self.edges[i]
        total = 0
        for a, b in ((u, v), (v, u)):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"semi-transitive search exceeded {self.budget} nodes")
            res = self._attempt(a, b, reach, anc)
            if res is not None:
                self.arcs.append((a, b))
                total += self.count(i + 1, res[0], res[1])
                self.arcs.pop()
        return total


def _split_source_star(g: Graph, edge_seq, source):
    star = [(source, w) for w in bits(g.adj[source])]
    free = [e for e in edge_seq if source not in e]
    return star, free


@lru_cache(maxsize=None)
def _semi_transitive_search(g: Graph, config: SearchConfig) -> Orientation | None:
    edge_seq = _ordered_edges(g, config.edge_order)
    search = _SemiTransSearch(g, edge_seq, config.node_budget)
    reach, anc = [0] * g.n, [0] * g.n
    halve = config.fixed_source is None
    if config.fixed_source is not None:
        star, free = _split_source_star(g, edge_seq, config.fixed_source)
        search.edges = free
        reach, anc = search.preassign(star, reach, anc)
    # With no fixed source the first edge's direction may be pinned: reversing
    # every arc of a semi-transitive orientation yields another one, so one
    # half of the space decides existence for the whole space.
    if not search.find(0, reach, anc, halve):
        return None
    cert = Orientation.from_arcs(g, search.arcs)
    assert is_semi_transitive(cert)
    assert config.fixed_source is None or source_of(cert, config.fixed_source)
    return cert


def exists_semi_transitive_orientation(g: Graph, config: SearchConfig | None = None) -> Orientation | None:
    """A semi-transitive orientation (honouring config.fixed_source), or None.

    None means the search space was exhausted, not that a budget ran out;
    budget exhaustion raises BudgetExceeded instead.
    """
    config = config or DEFAULT_CONFIG
    if config.fixed_source is not None and not 0 <= config.fixed_source < g.n:
        raise VertexOutOfRange(f"fixed source {config.fixed_source} not in 0..{g.n - 1}")
    return _semi_transitive_search(g, config)


def count_semi_transitive_orientations(g: Graph, config: SearchConfig | None = None) -> int:
    """Exact number of semi-transitive orientations honouring config.fixed_source."""
    config = config or DEFAULT_CONFIG
    if config.fixed_source is not None and not 0 <= config.fixed_source < g.n:
        raise VertexOutOfRange(f"fixed source {config.fixed_source} not in 0..{g.n - 1}")
    edge_seq = _ordered_edges(g, config.edge_order)
    search = _SemiTransSearch(g, edge_seq, config.node_budget)
    reach, anc = [0] * g.n, [0] * g.n
    if config.fixed_source is not None:
        star, free = _split_source_star(g, edge_seq, config.fixed_source)
        search.edges = free
        reach, anc = search.preassign(star, reach, anc)
    return search.count(0, reach, anc)


class _TransitiveSearch:
    def __init__(self, g: Graph, node_budget: int):
        self.n = g.n
        self.adj = g.adj
        self.edges = g.edges()
        self.budget = node_budget
        self.nodes = 0
        self.succ = [0] * g.n
        self.pred = [0] * g.n
        self.trail: list[tuple[int, int]] = []

    def _undo(self, mark):
        while len(self.trail) > mark:
            x, y = self.trail.pop()
            self.succ[x] ^= 1 << y
            self.pred[y] ^= 1 << x

    def _assign(self, a, b):
        """Propagate a->b to a fixed point; returns False (and undoes) on contradiction."""
        succ, pred, adj = self.succ, self.pred, self.adj
        mark = len(self.trail)
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            if succ[x] >> y & 1:
                continue
            if succ[y] >> x & 1:
                self._undo(mark)
                return False
            succ[x] |= 1 << y
            pred[y] |= 1 << x
            self.trail.append((x, y))
            for w in bits(pred[x]):
                if not adj[w] >> y & 1:
                    self._undo(mark)
                    return False
                queue.append((w, y))
            for w in bits(succ[y]):
                if not adj[x] >> w & 1:
                    self._undo(mark)
                    return False
                queue.append((x, w))
            for w in bits(adj[x] & ~adj[y] & ~(1 << y)):
                queue.append((x, w))
            for w in bits(adj[y] & ~adj[x] & ~(1 << x)):
                queue.append((w, y))
        return True

    def find(self, i):
        succ = self.succ
        while i < len(self.edges):
            u, v = self.edges[i]
            if succ[u] >> v & 1 or succ[v] >> u & 1:
                i += 1
                continue
            break
        else:
            return True
        u, v = self.edges[i]
        for a, b in ((u, v), (v, u)):
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"transitive search exceeded {self.budget} nodes")
            mark = len(self.trail)
            if self._assign(a, b):
                if self.find(i + 1):
                    return True
                self._undo(mark)
        return False


@lru_cache(maxsize=None)
def _transitive_search(g: Graph, node_budget: int) -> Orientation | None:
    search = _TransitiveSearch(g, node_budget)
    if not search.find(0):
        return None
    cert = Orientation.from_arcs(g, search.trail)
    assert is_transitive(cert)
    return cert


def exists_transitive_orientation(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> Orientation | None:
    """A transitive orientation of g, or None when none exists."""
    return _transitive_search(g, node_budget)


def is_word_representable(g: Graph, config: SearchConfig | None = None) -> bool:
    """True iff g admits a semi-transitive orientation."""
    return exists_semi_transitive_orientation(g, config) is not None


def is_comparability(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    return exists_transitive_orientation(g, node_budget) is not None


def is_minimal_non_comparability(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """Not comparability, while every vertex-deleted subgraph is.

    Single-vertex deletions suffice: comparability is hereditary, so if some
    deeper induced subgraph were bad, the one-vertex-deleted subgraph
    containing it would already fail.
    """
    if is_comparability(g, node_budget):
        return False
    return all(is_comparability(graphs.delete_vertex(g, v), node_budget) for v in range(g.n))


def is_minimal_non_word_representable(g: Graph, config: SearchConfig | None = None) -> bool:
    """Not word-representable, while every vertex-deleted subgraph is (hereditary)."""
    if is_word_representable(g, config):
        return False
    return all(is_word_representable(graphs.delete_vertex(g, v), config) for v in range(g.n))


CONE_CHECK_CAP = 10


def cone_characterization_check(h: Graph, config: SearchConfig | None = None) -> bool:
    """Verify on h that cone(h) is minimal non-word-representable exactly when
    h is minimal non-comparability and word-representable.

    A False return is a counterexample to that equivalence.
    """
    if h.n > CONE_CHECK_CAP:
        raise BudgetExceeded(f"cone characterization is desk scale, capped at n = {CONE_CHECK_CAP}")
    left = is_minimal_non_word_representable(graphs.cone(h), config)
    right = is_minimal_non_comparability(h) and is_word_representable(h, config)
    return left == right


@dataclass(frozen=True)
class ClassificationReport:
    """Verdicts plus re-verifiable certificates for one graph."""

    graph_id: str
    is_comparability: bool
    is_word_representable: bool
    is_minimal_non_comparability: bool
    is_minimal_non_word_representable: bool
    transitive_orientation: Orientation | None
    semi_transitive_orientation: Orientation | None
    timings: dict[str, float] = field(compare=False)


def classify(g: Graph, graph_id: str | None = None,
             config: SearchConfig | None = None) -> ClassificationReport:
    """Run all four predicates on g and package the certificates."""
    from .graph6 import emit_graph6

    if graph_id is None:
        graph_id = emit_graph6(g)
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    trans = exists_transitive_orientation(g)
    timings["comparability"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    semi = exists_semi_transitive_orientation(g, config)
    timings["word_representable"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    min_nc = is_minimal_non_comparability(g)
    timings["minimal_non_comparability"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    min_nwr = is_minimal_non_word_representable(g, config)
    timings["minimal_non_word_representable"] = time.perf_counter() - t0

    report = ClassificationReport(
        graph_id=graph_id,
        is_comparability=trans is not None,
        is_word_representable=semi is not None,
        is_minimal_non_comparability=min_nc,
        is_minimal_non_word_representable=min_nwr,
        transitive_orientation=trans,
        semi_transitive_orientation=semi,
        timings=timings,
    )
    assert not (report.is_minimal_non_comparability and report.is_comparability)
    assert not (report.is_minimal_non_word_representable and report.is_word_representable)
    return report


def clear_caches() -> None:
    """Drop memoized search results (searches are pure, so this is only for memory)."""
    _semi_transitive_search.cache_clear()
    _transitive_search.cache_clear()
