"""Generators for the minimal non-comparability families G1..G9 and H1..H11.

Each family comes with its documented certificate where one exists: a proper
3-colouring for G1..G3, an explicit orientation for G5..G8 and H2..H11, and a
constant expected-verdict table for the semi-transitivity classification.
The H graphs are fixed 7-vertex edge tables; they are validated by the test
suite (minimal non-comparability plus the orientation verdicts) rather than
trusted.

Internal vertex numbering per family is fixed; display labels mirror the
family's conventional names and are carried separately.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import graphs
from .errors import BadParameter
from .graphs import Graph
from .orientations import Coloring, Orientation

G_FAMILY_FLOORS = {
    "G1": 2, "G2": 2, "G3": 3, "G4": 3, "G5": 3,
    "G6": 3, "G7": 1, "G8": 1, "G9": 2,
}
H_FAMILIES = tuple(f"H{k}" for k in range(1, 12))
ALL_FAMILIES = tuple(G_FAMILY_FLOORS) + H_FAMILIES

EXPECTED_SEMI_TRANSITIVE = {
    "G1": True, "G2": True, "G3": True, "G4": False, "G5": True,
    "G6": True, "G7": True, "G8": True, "G9": False,
    "H1": False, "H2": True, "H3": True, "H4": True, "H5": True, "H6": True,
    "H7": True, "H8": True, "H9": True, "H10": True, "H11": True,
}

# Fixed 7-vertex graphs, 0-based (vertex k carries display label str(k+1)).
H_EDGES = {
    1: [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (1, 6), (2, 3),
        (2, 4), (2, 6), (3, 4), (4, 5), (4, 6), (5, 6)],
    2: [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 5), (3, 4), (3, 6),
        (4, 5), (4, 6)],
    3: [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (3, 4),
        (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
    4: [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (1, 6), (2, 3),
        (3, 5), (4, 5), (4, 6), (5, 6)],
    5: [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3),
        (2, 5), (3, 4), (3, 6), (4, 6)],
    6: [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3),
        (3, 4), (3, 6), (4, 6)],
    7: [(0, 1), (0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4),
        (3, 6), (4, 6), (5, 6)],
    8: [(0, 1), (0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4),
        (3, 6), (5, 6)],
    9: [(0, 1), (0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4),
        (3, 6)],
    10: [(0, 1), (0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4),
         (3, 6), (4, 6)],
    11: [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 6), (2, 3),
         (2, 4), (3, 4), (3, 5), (4, 6)],
}

# Certificate orientations for the semi-transitive H graphs, as (tail, head).
H_ORIENTATIONS = {
    2: [(0, 2), (0, 3), (0, 4), (0, 5), (1, 0), (1, 3), (1, 5), (3, 4), (3, 6),
        (4, 6), (5, 4)],
    3: [(0, 1), (0, 3), (0, 4), (0, 5), (1, 5), (2, 0), (2, 1), (2, 3), (3, 4),
        (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)],
    4: [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 5), (1, 6), (2, 1), (2, 3),
        (3, 5), (4, 5), (4, 6), (5, 6)],
    5: [(0, 1), (0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (2, 0), (2, 1), (2, 3),
        (2, 5), (3, 4), (3, 6), (4, 6)],
    6: [(0, 1), (0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (2, 0), (2, 1), (2, 3),
        (3, 4), (3, 6), (4, 6)],
    7: [(0, 1), (0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4),
        (3, 6), (4, 6), (5, 6)],
    8: [(0, 1), (0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4),
        (3, 6), (5, 6)],
    9: [(0, 1), (0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4),
        (3, 6)],
    10: [(0, 1), (0, 2), (0, 3), (0, 5), (1, 3), (1, 4), (1, 5), (2, 5), (3, 4),
         (3, 6), (4, 6)],
    11: [(0, 1), (0, 3), (0, 4), (0, 5), (1, 4), (1, 6), (2, 0), (2, 1), (2, 3),
         (2, 4), (3, 4), (3, 5), (4, 6)],
}

_SPEC_RE = re.compile(r"^(g[1-9]):(\d+)$|^(h(?:[1-9]|1[01]))$", re.IGNORECASE)


@dataclass(frozen=True)
class FamilySpec:
    """One family member: family name plus parameter n (G families only)."""

    family: str
    n: int | None = None

    def __post_init__(self):
        if self.family not in ALL_FAMILIES:
            raise BadParameter(f"unknown family {self.family!r}")
        if self.family in G_FAMILY_FLOORS:
            floor = G_FAMILY_FLOORS[self.family]
            if self.n is None or self.n < floor:
                raise BadParameter(f"{self.family} needs parameter n >= {floor}, got {self.n}")
        elif self.n is not None:
            raise BadParameter(f"{self.family} takes no parameter")

    def __str__(self):
        if self.n is None:
            return self.family.lower()
        return f"{self.family.lower()}:{self.n}"


def parse_spec(text: str) -> FamilySpec:
    """Parse strings like 'g1:4' or 'h7' (case-insensitive)."""
    m = _SPEC_RE.match(text.strip())
    if not m:
        raise BadParameter(f"cannot parse family spec {text!r} (expected e.g. g1:4 or h7)")
    if m.group(1):
        return FamilySpec(m.group(1).upper(), int(m.group(2)))
    return FamilySpec(m.group(3).upper())


@dataclass(frozen=True)
class LabeledGraph:
    """A generated family member with its display labels."""

    graph: Graph
    labels: tuple[str, ...]

    def label_index(self) -> dict[str, int]:
        return {lab: v for v, lab in enumerate(self.labels)}


def _gen_g1(n):
    k = 2 * n + 1
    return graphs.cycle(k), tuple(str(v + 1) for v in range(k))


def _gen_g2(n):
    # 0 = hub '1'; 1..2n = path '2'..'2n+1'; then x, y.
    top = 2 * n
    x, y = top + 1, top + 2
    edges = [(0, v) for v in range(1, top + 1)]
    edges += [(v, v + 1) for v in range(1, top)]
    edges += [(top, x), (1, y)]
    labels = tuple(str(v + 1) for v in range(top + 1)) + ("x", "y")
    return graphs.from_edge_list(top + 3, edges), labels


def _gen_g3(n):
    # 0 = apex '1'; 1..2n-2 = path '2'..'2n-1'; 2n-1 = apex '2n'; then x, y.
    last_path = 2 * n - 2
    apex2 = 2 * n - 1
    x, y = 2 * n, 2 * n + 1
    edges = [(v, v + 1) for v in range(1, last_path)]
    edges += [(0, v) for v in range(1, last_path + 1)]
    edges += [(apex2, v) for v in range(1, last_path + 1)]
    edges += [(x, 0), (x, last_path), (y, 1), (y, apex2)]
    labels = tuple(str(v + 1) for v in range(apex2 + 1)) + ("x", "y")
    return graphs.from_edge_list(2 * n + 2, edges), labels


def _gen_g4(n):
    # 0 = apex '1'; 1..2n-1 = path '2'..'2n'; 2n = apex '2n+1'; then x, y.
    last_path = 2 * n - 1
    apex2 = 2 * n
    x, y = 2 * n + 1, 2 * n + 2
    edges = [(v, v + 1) for v in range(1, last_path)]
    edges += [(0, v) for v in range(1, last_path + 1)]
    edges += [(0, apex2)]
    edges += [(apex2, v) for v in range(1, last_path + 1)]
    edges += [(x, 0), (x, last_path), (y, 1), (y, apex2)]
    labels = tuple(str(v + 1) for v in range(apex2 + 1)) + ("x", "y")
    return graphs.from_edge_list(2 * n + 3, edges), labels


def _g5_labels(n):
    labels = []
    for i in range(1, n + 1):
        labels += [f"a{i}", f"b{i}"]
    return tuple(labels)


def _gen_g5(n):
    # Complement of the 2n-cycle a1,b1,a2,b2,...,an,bn.
    return graphs.complement(graphs.cycle(2 * n)), _g5_labels(n)


def _gen_g6(n):
    # Complement of the (2n+1)-cycle c0,a1,b1,...,an,bn.
    return graphs.complement(graphs.cycle(2 * n + 1)), ("c0",) + _g5_labels(n)


def _level_graph_edges(n, bc_edge):
    """Shared construction for G7 (bc_edge False) and G8 (bc_edge True).

    Vertices: 0..3 = a,b,c,d; 4..n+3 = level-2 vertices 1..n; n+4 = x.
    """
    a, b, c, d = 0, 1, 2, 3
    x = n + 4
    lvl2 = lambda j: j + 3  # label j in 1..n
    edges = [(a, c), (a, d), (b, d)]
    if bc_edge:
        edges.append((b, c))
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            edges.append((lvl2(i), lvl2(j)))
    edges += [(a, lvl2(j)) for j in range(2, n + 1)]
    edges += [(d, lvl2(j)) for j in range(1, n)]
    edges += [(x, a), (x, d)]
    edges += [(x, lvl2(j)) for j in range(1, n + 1)]
    labels = ("a", "b", "c", "d") + tuple(str(j) for j in range(1, n + 1)) + ("x",)
    return graphs.from_edge_list(n + 5, edges), labels


def _gen_g7(n):
    return _level_graph_edges(n, bc_edge=False)


def _gen_g8(n):
    return _level_graph_edges(n, bc_edge=True)


def _gen_g9(n):
    # 0..n+1 = row a,1..n,b (complete minus consecutive pairs); n+2 = c; n+3 = d.
    bv, c, d = n + 1, n + 2, n + 3
    edges = [(i, j) for i in range(n + 2) for j in range(i + 2, n + 2)]
    edges += [(c, 0), (c, bv)]
    edges += [(d, v) for v in range(n + 2)]
    labels = ("a",) + tuple(str(j) for j in range(1, n + 1)) + ("b", "c", "d")
    return graphs.from_edge_list(n + 4, edges), labels


def _gen_h(k):
    return graphs.from_edge_list(7, H_EDGES[k]), tuple(str(v + 1) for v in range(7))


_GENERATORS = {
    "G1": _gen_g1, "G2": _gen_g2, "G3": _gen_g3, "G4": _gen_g4, "G5": _gen_g5,
    "G6": _gen_g6, "G7": _gen_g7, "G8": _gen_g8, "G9": _gen_g9,
}


def generate(spec: FamilySpec) -> LabeledGraph:
    """Build the family member named by spec."""
    if spec.family in _GENERATORS:
        graph, labels = _GENERATORS[spec.family](spec.n)
    else:
        graph, labels = _gen_h(int(spec.family[1:]))
    return LabeledGraph(graph, labels)


def prescribed_orientation(spec: FamilySpec) -> Orientation | None:
    """The family's documented certificate orientation, where one exists.

    Present for G5..G8 (any n) and H2..H11; absent for G1..G4, G9 and H1.
    G5/G6 direct each edge from the smaller to the larger position in the
    cycle order (c0 lowest for G6). G7/G8 fix the four level-1 vertices,
    direct level 2 from smaller to larger label, and send every cross edge
    towards the higher level.
    """
    fam = spec.family
    member = generate(spec)
    g = member.graph
    if fam in ("G5", "G6"):
        # Internal numbering already follows the index order.
        from .orientations import orientation_from_order
        return orientation_from_order(g, list(range(g.n)))
    if fam in ("G7", "G8"):
        n = spec.n
        a, b, c, d = 0, 1, 2, 3
        x = n + 4
        level1 = [(a, c), (b, d), (d, a)] if fam == "G7" else [(c, a), (d, b), (d, a), (c, b)]
        arcs = list(level1)
        for i in range(1, n + 1):
            for j in range(i + 2, n + 1):
                arcs.append((i + 3, j + 3))
        arcs += [(a, j + 3) for j in range(2, n + 1)]
        arcs += [(d, j + 3) for j in range(1, n)]
        arcs += [(a, x), (d, x)]
        arcs += [(j + 3, x) for j in range(1, n + 1)]
        return Orientation.from_arcs(g, arcs)
    if fam in H_FAMILIES and fam != "H1":
        return Orientation.from_arcs(g, H_ORIENTATIONS[int(fam[1:])])
    return None


def prescribed_coloring(spec: FamilySpec) -> Coloring | None:
    """The documented proper 3-colouring for G1, G2 and G3; None otherwise.

    G1: odd labels / even labels / {2n+1}. G2: {1, x, y} / even / odd labels.
    G3: the two apexes / evens plus x / odds plus y.
    """
    fam, n = spec.family, spec.n
    if fam == "G1":
        colors = []
        for v in range(2 * n + 1):
            label = v + 1
            if label == 2 * n + 1:
                colors.append(2)
            else:
                colors.append(0 if label % 2 == 1 else 1)
        return Coloring(tuple(colors), 3)
    if fam == "G2":
        colors = [0]
        for v in range(1, 2 * n + 1):
            colors.append(1 if (v + 1) % 2 == 0 else 2)
        colors += [0, 0]  # x, y
        return Coloring(tuple(colors), 3)
    if fam == "G3":
        colors = [0]
        for v in range(1, 2 * n - 1):
            colors.append(1 if (v + 1) % 2 == 0 else 2)
        colors.append(0)  # apex 2n
        colors += [1, 2]  # x, y
        return Coloring(tuple(colors), 3)
    return None


def expected_semi_transitive(spec: FamilySpec) -> bool:
    """The classification table's verdict for the family (constant per family)."""
    return EXPECTED_SEMI_TRANSITIVE[spec.family]


def classification_table(nmax: int = 4) -> list[FamilySpec]:
    """Every family member in the desk-scale verification table."""
    specs = []
    for fam, floor in G_FAMILY_FLOORS.items():
        for n in range(floor, nmax + 1):
            specs.append(FamilySpec(fam, n))
    specs.extend(FamilySpec(fam) for fam in H_FAMILIES)
    return specs
