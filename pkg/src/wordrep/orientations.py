"""Edge orientations and the transitivity / semi-transitivity certificate checkers.

An acyclic orientation is semi-transitive when no directed path whose two
endpoints are joined by an edge is missing any of its forward chords. The
checker below reduces that to a per-edge test: a violation through the edge
u->v exists exactly when the set B of vertices lying on directed u->v paths
contains a reachable but non-adjacent pair. (If p reaches q inside B, the
walk u->..->p->..->q->..->v is a genuine path because the digraph is acyclic,
and the pair (p, q) is its missing chord.)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import graphs
from .errors import (
    CyclicOrientation,
    ImproperColoring,
    NonInjectiveKey,
    OrientationError,
    TooLargeForBruteForce,
    VertexOutOfRange,
)
from .graphs import Graph, bits

NAIVE_CHECK_CAP = 10


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of base; succ[v] is the out-neighbour bitmask.

    Acyclicity is deliberately not an invariant: the checkers test for it.
    """

    base: Graph
    succ: tuple[int, ...]

    def __post_init__(self):
        if len(self.succ) != self.base.n:
            raise OrientationError("need one out-neighbour row per vertex")
        for v, row in enumerate(self.succ):
            if row & ~self.base.adj[v]:
                raise OrientationError(f"vertex {v} has an arc along a non-edge")
        for u, v in self.base.edges():
            forward = self.succ[u] >> v & 1
            backward = self.succ[v] >> u & 1
            if forward == backward:
                raise OrientationError(f"edge ({u}, {v}) must get exactly one direction")

    @classmethod
    def from_arcs(cls, base: Graph, arcs: Iterable[tuple[int, int]]) -> "Orientation":
        rows = [0] * base.n
        for a, b in arcs:
            if not (0 <= a < base.n and 0 <= b < base.n) or not base.adj[a] >> b & 1:
                raise OrientationError(f"({a}, {b}) is not an edge of the base graph")
            if rows[b] >> a & 1:
                raise OrientationError(f"edge ({a}, {b}) given both directions")
            rows[a] |= 1 << b
        return cls(base, tuple(rows))

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs as (tail, head), lexicographically sorted."""
        return [(a, b) for a in range(self.base.n) for b in bits(self.succ[a])]

    def pred(self, v: int) -> int:
        """In-neighbour bitmask of v."""
        return self.base.adj[v] & ~self.succ[v]


@dataclass(frozen=True)
class DirectedPath:
    """A directed path; consecutive vertices are arcs, all vertices distinct."""

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class ViolatingPath(DirectedPath):
    """A directed path with its endpoint chord present but the pair `missing` absent."""

    missing: tuple[int, int]


@dataclass(frozen=True)
class Coloring:
    """A vertex colouring; properness is checked against a graph at the point of use."""

    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self):
        for c in self.colors:
            if not 0 <= c < self.num_colors:
                raise ImproperColoring(f"colour {c} not in 0..{self.num_colors - 1}")


def is_proper(g: Graph, coloring: Coloring) -> bool:
    if len(coloring.colors) != g.n:
        return False
    return all(coloring.colors[u] != coloring.colors[v] for u, v in g.edges())


def topological_order(o: Orientation) -> list[int] | None:
    """Deterministic topological order (smallest index first), or None if cyclic."""
    n = o.base.n
    indeg = [o.pred(v).bit_count() for v in range(n)]
    ready = sorted(v for v in range(n) if indeg[v] == 0)
    order = []
    while ready:
        v = ready.pop(0)
        order.append(v)
        for w in bits(o.succ[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                # insert keeping ready sorted; n <= 64 keeps this cheap
                lo = 0
                while lo < len(ready) and ready[lo] < w:
                    lo += 1
                ready.insert(lo, w)
    return order if len(order) == n else None


def is_acyclic(o: Orientation) -> bool:
    return topological_order(o) is not None


def source_of(o: Orientation, v: int) -> bool:
    """True iff every edge at v points away from v (vacuously true when isolated)."""
    if not 0 <= v < o.base.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{o.base.n - 1}")
    return o.pred(v) == 0


def is_transitive(o: Orientation) -> bool:
    """True iff a->b and b->c always come with a->c."""
    for a in range(o.base.n):
        sa = o.succ[a]
        for b in bits(sa):
            if o.succ[b] & ~sa:
                return False
    return True


def _reach_rows(succ: Sequence[int], order: Sequence[int]) -> list[int]:
    """reach[v] = bitmask of vertices reachable from v by a nonempty directed walk."""
    reach = [0] * len(succ)
    for v in reversed(order):
        row = succ[v]
        for w in bits(succ[v]):
            row |= reach[w]
        reach[v] = row
    return reach


def semi_transitive_violation(adj: Sequence[int], succ: Sequence[int],
                              reach: Sequence[int]) -> tuple[int, int, int, int] | None:
    """First (u, v, p, q) with u->v an arc and p, q a reachable non-adjacent pair
    on a directed u->v path, scanning vertices in index order. None if sound.
    """
    n = len(adj)
    for u in range(n):
        for v in bits(succ[u]):
            between = reach[u] & _ancestor_mask(v, reach, n)
            b_set = between | (1 << u) | (1 << v)
            t = b_set
            while t:
                low = t & -t
                p = low.bit_length() - 1
                t ^= low
                bad = reach[p] & b_set & ~adj[p]
                if bad:
                    q = (bad & -bad).bit_length() - 1
                    return (u, v, p, q)
    return None


def _ancestor_mask(v: int, reach: Sequence[int], n: int) -> int:
    mask = 0
    for w in range(n):
        if reach[w] >> v & 1:
            mask |= 1 << w
    return mask


def is_semi_transitive(o: Orientation) -> bool:
    """Default (pruned) checker: acyclic and free of violating paths."""
    order = topological_order(o)
    if order is None:
        return False
    reach = _reach_rows(o.succ, order)
    return semi_transitive_violation(o.base.adj, o.succ, reach) is None


def is_semi_transitive_naive(o: Orientation) -> bool:
    """Oracle twin of is_semi_transitive that enumerates every directed path.

    Exponential; refuses graphs with more than NAIVE_CHECK_CAP vertices.
    """
    n = o.base.n
    if n > NAIVE_CHECK_CAP:
        raise TooLargeForBruteForce(f"naive path enumeration is capped at n = {NAIVE_CHECK_CAP}")
    if not is_acyclic(o):
        return False
    adj = o.base.adj
    succ = o.succ

    def violates(path):
        u, v = path[0], path[-1]
        if not adj[u] >> v & 1:
            return False
        for i in range(len(path)):
            for j in range(i + 1, len(path)):
                if not adj[path[i]] >> path[j] & 1:
                    return True
        return False

    def dfs(path, seen):
        if len(path) >= 2 and violates(path):
            return True
        for w in bits(succ[path[-1]] & ~seen):
            path.append(w)
            if dfs(path, seen | (1 << w)):
                return True
            path.pop()
        return False

    return not any(dfs([s], 1 << s) for s in range(n))


def _bfs_distances(succ: Sequence[int], n: int) -> list[list[int]]:
    """Hop distances dist[s][t] along arcs; -1 when unreachable."""
    dist = [[-1] * n for _ in range(n)]
    for s in range(n):
        row = dist[s]
        row[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for w in bits(succ[v]):
                    if row[w] == -1:
                        row[w] = d
                        nxt.append(w)
            frontier = nxt
    return dist


def _shortest_path(succ: Sequence[int], dist: list[list[int]], s: int, t: int) -> list[int]:
    """One shortest s->t path, stepping to the smallest-index eligible successor."""
    path = [s]
    v = s
    while v != t:
        v = next(w for w in bits(succ[v]) if dist[w][t] == dist[v][t] - 1)
        path.append(v)
    return path


def violating_path(o: Orientation) -> ViolatingPath | None:
    """A witness violating path, or None when the orientation is semi-transitive.

    The witness is deterministic: among all violations it has minimum vertex
    count, with ties broken by scanning arcs (u, v) and then pairs (p, q) in
    ascending index order. Cyclic input is an error, not a witness.
    """
    order = topological_order(o)
    if order is None:
        raise CyclicOrientation("violating paths are only defined for acyclic orientations")
    n = o.base.n
    adj = o.base.adj
    succ = o.succ
    reach = _reach_rows(succ, order)
    dist = _bfs_distances(succ, n)

    best = None  # (length, u, v, p, q)
    for u in range(n):
        for v in bits(succ[u]):
            between = reach[u] & _ancestor_mask(v, reach, n)
            b_set = between | (1 << u) | (1 << v)
            for p in bits(b_set):
                for q in bits(reach[p] & b_set & ~adj[p]):
                    length = dist[u][p] + dist[p][q] + dist[q][v]
                    if best is None or length < best[0]:
                        best = (length, u, v, p, q)
    if best is None:
        return None
    _, u, v, p, q = best
    route = _shortest_path(succ, dist, u, p)
    route += _shortest_path(succ, dist, p, q)[1:]
    route += _shortest_path(succ, dist, q, v)[1:]
    return ViolatingPath(tuple(route), (p, q))


def orientation_from_coloring(g: Graph, coloring: Coloring) -> Orientation:
    """Direct every edge from the smaller colour index to the larger.

    Acyclic by construction. With at most three colours the result is
    semi-transitive (directed paths then have at most three vertices), but
    that property is asserted by the checkers, never assumed.
    """
    if len(coloring.colors) != g.n or not is_proper(g, coloring):
        raise ImproperColoring("colouring is not proper on this graph")
    rows = [0] * g.n
    for u, v in g.edges():
        if coloring.colors[u] < coloring.colors[v]:
            rows[u] |= 1 << v
        else:
            rows[v] |= 1 << u
    return Orientation(g, tuple(rows))


def orientation_from_order(g: Graph, key: Callable[[int], int] | Sequence[int]) -> Orientation:
    """Direct every edge from the endpoint with the smaller key; acyclic by construction."""
    if callable(key):
        ranks = [key(v) for v in range(g.n)]
    else:
        ranks = list(key)
        if len(ranks) != g.n:
            raise NonInjectiveKey("need one rank per vertex")
    if len(set(ranks)) != g.n:
        raise NonInjectiveKey("rank key must be injective on the vertices")
    rows = [0] * g.n
    for u, v in g.edges():
        if ranks[u] < ranks[v]:
            rows[u] |= 1 << v
        else:
            rows[v] |= 1 << u
    return Orientation(g, tuple(rows))


def reverse(o: Orientation) -> Orientation:
    """Reverse every arc; preserves acyclicity and semi-transitivity."""
    return Orientation(o.base, tuple(o.pred(v) for v in range(o.base.n)))
