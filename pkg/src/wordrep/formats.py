"""Plain-text graph and orientation formats: edge lists and DOT.

Edge lists are 0-based ("n m" then one "u v" line per edge). DOT output uses
the display labels visible on the command line: family labels when known,
1-based vertex numbers otherwise. DOT text is deterministic: node lines
sorted, then edge lines sorted.
"""

from __future__ import annotations

import re
from typing import Sequence

from .errors import GraphError
from .graphs import Graph, from_edge_list
from .orientations import Orientation


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a 'n m' line")
    n, m = (int(tok) for tok in rows[0])
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise GraphError(f"bad edge line {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))
    if len(edges) != m:
        raise GraphError(f"header announced {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(v + 1) for v in range(n))


def emit_dot(obj: Graph | Orientation, labels: Sequence[str] | None = None) -> str:
    """Deterministic DOT text; '--' for graphs, '->' for orientations."""
    if isinstance(obj, Orientation):
        g, directed, pairs = obj.base, True, obj.arcs()
    else:
        g, directed, pairs = obj, False, obj.edges()
    if labels is None:
        labels = default_labels(g.n)
    if len(labels) != g.n:
        raise GraphError("need one label per vertex")
    node_lines = sorted(f'  "{labels[v]}";' for v in range(g.n))
    arrow = "->" if directed else "--"
    edge_lines = sorted(f'  "{labels[u]}" {arrow} "{labels[v]}";' for u, v in pairs)
    head = "digraph" if directed else "graph"
    return "\n".join([f"{head} G {{", *node_lines, *edge_lines, "}"]) + "\n"


_DOT_EDGE_RE = re.compile(r'"?([\w+-]+)"?\s*(->|--)\s*"?([\w+-]+)"?\s*;?')


def parse_dot_orientation(text: str) -> Orientation:
    """Read a digraph in the emit_dot dialect back into an Orientation.

    The underlying graph is exactly the arc set; labels must be the 1-based
    numeric labels emit_dot uses for unlabeled graphs.
    """
    arcs = []
    seen: set[int] = set()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith(("digraph", "graph", "}")):
            continue
        m = _DOT_EDGE_RE.match(line)
        if m:
            a, kind, b = m.groups()
            if kind != "->":
                raise GraphError("expected a digraph, found an undirected edge")
            arcs.append((int(a) - 1, int(b) - 1))
            seen.update(arcs[-1])
        else:
            m = re.match(r'"?([\w+-]+)"?\s*;', line)
            if m:
                seen.add(int(m.group(1)) - 1)
    if not seen:
        raise GraphError("no vertices found in DOT input")
    n = max(seen) + 1
    base = from_edge_list(n, arcs)
    return Orientation.from_arcs(base, arcs)
