"""Shared corpora and strategies for the test suite."""

from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from wordrep.graph6 import emit_graph6, parse_graph6
from wordrep.graphs import Graph
from wordrep.orientations import Orientation


def graph_from_code(n: int, code: int) -> Graph:
    """Decode an edge bitmask over the lexicographic pair order into a Graph."""
    rows = [0] * n
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if code >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, tuple(rows))


def iso_class_representatives(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on n vertices.

    Orbit marking: walk the 2^(n choose 2) edge codes in order and stamp out
    the entire permutation orbit of each unseen code.
    """
    pairs = list(combinations(range(n), 2))
    pair_index = {p: k for k, p in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        table = []
        for u, v in pairs:
            a, b = perm[u], perm[v]
            table.append(pair_index[(a, b) if a < b else (b, a)])
        tables.append(table)
    seen = bytearray(1 << len(pairs))
    reps = []
    for code in range(1 << len(pairs)):
        if seen[code]:
            continue
        reps.append(graph_from_code(n, code))
        for table in tables:
            image = 0
            x = code
            while x:
                low = x & -x
                image |= 1 << table[low.bit_length() - 1]
                x ^= low
            seen[image] = 1
    return reps


def all_orientations(g: Graph):
    """Every orientation of g (2^m of them), deterministic order."""
    edges = g.edges()
    for mask in range(1 << len(edges)):
        rows = [0] * g.n
        for k, (u, v) in enumerate(edges):
            if mask >> k & 1:
                rows[u] |= 1 << v
            else:
                rows[v] |= 1 << u
        yield Orientation(g, tuple(rows))


@pytest.fixture(scope="session")
def corpus_upto_5() -> list[Graph]:
    """All 53 isomorphism classes of graphs on at most 5 vertices."""
    out = []
    for n in range(6):
        out.extend(iso_class_representatives(n))
    return out


@pytest.fixture(scope="session")
def corpus_6_lines() -> list[str]:
    """The 156 isomorphism classes on 6 vertices, as graph6 lines."""
    return [emit_graph6(g) for g in iso_class_representatives(6)]


@pytest.fixture(scope="session")
def corpus_6(corpus_6_lines) -> list[Graph]:
    """The 6-vertex corpus, ingested back through the graph6 parser."""
    return [parse_graph6(line) for line in corpus_6_lines]


@st.composite
def graphs_st(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return graph_from_code(n, code)


@st.composite
def orientations_st(draw, min_n: int = 1, max_n: int = 7):
    g = draw(graphs_st(min_n=min_n, max_n=max_n))
    edges = g.edges()
    mask = draw(st.integers(0, (1 << len(edges)) - 1))
    rows = [0] * g.n
    for k, (u, v) in enumerate(edges):
        if mask >> k & 1:
            rows[u] |= 1 << v
        else:
            rows[v] |= 1 << u
    return Orientation(g, tuple(rows))
