"""Immutable simple graphs on up to 64 vertices.

Adjacency is stored as one integer bitmask per vertex, which keeps
neighbourhood intersections and the orientation searches cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    EndpointOutOfRange,
    KTooSmall,
    SelfLoop,
    SetOutOfRange,
    TooLargeForBruteForce,
    TooManyVertices,
    VertexOutOfRange,
)

MAX_VERTICES = 64
ISO_BRUTE_FORCE_CAP = 12


def bits(mask: int) -> list[int]:
    """Indices of the set bits of mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertices 0..n-1; adj[v] is a neighbour bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if self.n > MAX_VERTICES:
            raise TooManyVertices(f"at most {MAX_VERTICES} vertices supported, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise EndpointOutOfRange(f"row {v} references vertices outside 0..{self.n - 1}")
            if row >> v & 1:
                raise SelfLoop(f"vertex {v} has a self-loop")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({u}, {v})")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    def neighbours(self, v: int) -> list[int]:
        self._check_vertex(v)
        return bits(self.adj[v])


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices with exactly the given edges; duplicates collapse."""
    if n > MAX_VERTICES:
        raise TooManyVertices(f"at most {MAX_VERTICES} vertices supported, got {n}")
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise SelfLoop(f"edge ({u}, {v}) is a self-loop")
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty(n: int) -> Graph:
    return from_edge_list(n, ())


def complete(n: int) -> Graph:
    if n > MAX_VERTICES:
        raise TooManyVertices(f"at most {MAX_VERTICES} vertices supported, got {n}")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(k: int) -> Graph:
    """The cycle 0-1-...-(k-1)-0."""
    if k < 3:
        raise KTooSmall(f"a cycle needs at least 3 vertices, got {k}")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ g.adj[v]) & ~(1 << v) for v in range(g.n)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on the given vertex set, relabelled 0..k-1 in ascending order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise SetOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(keep)}
    rows = [0] * len(keep)
    for v in keep:
        for u in bits(g.adj[v]):
            if u in index:
                rows[index[v]] |= 1 << index[u]
    return Graph(len(keep), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(f"vertex {v} not in 0..{g.n - 1}")
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def cone(g: Graph) -> Graph:
    """Append one vertex adjacent to every existing vertex; the apex is vertex n."""
    if g.n + 1 > MAX_VERTICES:
        raise TooManyVertices(f"cone would exceed {MAX_VERTICES} vertices")
    apex = 1 << g.n
    rows = [g.adj[v] | apex for v in range(g.n)]
    rows.append((1 << g.n) - 1)
    return Graph(g.n + 1, tuple(rows))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test for small graphs (test utility, n <= 12).

    Prunes on degree sequences and on the multiset of neighbour degrees
    before backtracking over vertex assignments.
    """
    if g.n > ISO_BRUTE_FORCE_CAP or h.n > ISO_BRUTE_FORCE_CAP:
        raise TooLargeForBruteForce(f"isomorphism is brute force, capped at n = {ISO_BRUTE_FORCE_CAP}")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    n = g.n
    deg_g = [g.adj[v].bit_count() for v in range(n)]
    deg_h = [h.adj[v].bit_count() for v in range(n)]
    if sorted(deg_g) != sorted(deg_h):
        return False

    def profile(adj, deg, v):
        return (deg[v], tuple(sorted(deg[u] for u in bits(adj[v]))))

    prof_g = [profile(g.adj, deg_g, v) for v in range(n)]
    prof_h = [profile(h.adj, deg_h, v) for v in range(n)]
    if sorted(prof_g) != sorted(prof_h):
        return False

    order = sorted(range(n), key=lambda v: (-deg_g[v], v))
    candidates = [[w for w in range(n) if prof_h[w] == prof_g[v]] for v in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def extend(i):
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if bool(g.adj[v] >> u & 1) != bool(h.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)
