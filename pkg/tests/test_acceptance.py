"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete. Criteria 1 and 3 contain a data point (g9:2) whose tabled verdict
disagrees with what the exhaustive search, the naive checker and the
independent word oracle all establish; those two tests fail honestly rather
than bending either the table or the deciders. See the README for the
analysis.
"""

import time
from itertools import combinations

from wordrep.gallai import FamilySpec, classification_table, expected_semi_transitive, \
    generate, prescribed_coloring, prescribed_orientation
from wordrep.graphs import (
    complement,
    complete,
    cone,
    cycle,
    from_edge_list,
    induced_subgraph,
    is_isomorphic,
)
from wordrep.orientations import (
    is_proper,
    is_semi_transitive,
    is_semi_transitive_naive,
    orientation_from_coloring,
    source_of,
)
from wordrep.recognizers import (
    SearchConfig,
    cone_characterization_check,
    count_semi_transitive_orientations,
    exists_semi_transitive_orientation,
    is_minimal_non_comparability,
    is_minimal_non_word_representable,
    is_word_representable,
)
from wordrep.words import alternate, represents, word_from_string

from .conftest import all_orientations


def _report(num, ok, detail=""):
    line = f"ACCEPTANCE {num:2d}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, f"acceptance criterion {num}: {detail}"


def test_criterion_01_classification_table():
    """Search agrees with the expected semi-transitivity verdict on every spec."""
    t0 = time.perf_counter()
    mismatches = []
    for spec in classification_table(4):
        found = exists_semi_transitive_orientation(generate(spec).graph) is not None
        if found != expected_semi_transitive(spec):
            mismatches.append(f"{spec}: search={found} expected={expected_semi_transitive(spec)}")
    elapsed = time.perf_counter() - t0
    assert elapsed < 300
    _report(1, not mismatches, "; ".join(mismatches) or f"{elapsed:.1f}s")


def test_criterion_02_gallai_list_rederivation():
    """Every table member is machine-verified minimal non-comparability."""
    t0 = time.perf_counter()
    failures = [str(spec) for spec in classification_table(4)
                if not is_minimal_non_comparability(generate(spec).graph)]
    _report(2, not failures, "; ".join(failures) or f"{time.perf_counter() - t0:.1f}s")


def test_criterion_03_negative_results_by_exhaustion():
    """The six tabled non-representable graphs: exhausted-absent and minimal."""
    t0 = time.perf_counter()
    targets = [FamilySpec("G4", 3), FamilySpec("G4", 4), FamilySpec("G9", 2),
               FamilySpec("G9", 3), FamilySpec("G9", 4), FamilySpec("H1")]
    failures = []
    for spec in targets:
        g = generate(spec).graph
        if exists_semi_transitive_orientation(g) is not None:
            failures.append(f"{spec}: search found a certificate")
        elif not is_minimal_non_word_representable(g):
            failures.append(f"{spec}: not minimal non-word-representable")
    elapsed = time.perf_counter() - t0
    assert elapsed < 180
    _report(3, not failures, "; ".join(failures) or f"{elapsed:.1f}s")


def test_criterion_04_prescribed_certificates():
    failures = []
    for fam, lo in (("G5", 3), ("G6", 3), ("G7", 1), ("G8", 1)):
        for n in range(lo, 6):
            spec = FamilySpec(fam, n)
            cert = prescribed_orientation(spec)
            if cert.base != generate(spec).graph or not is_semi_transitive(cert):
                failures.append(str(spec))
    for k in range(2, 12):
        spec = FamilySpec(f"H{k}")
        cert = prescribed_orientation(spec)
        if cert.base != generate(spec).graph or not is_semi_transitive(cert):
            failures.append(str(spec))
    for fam, lo in (("G1", 2), ("G2", 2), ("G3", 3)):
        for n in range(lo, 6):
            spec = FamilySpec(fam, n)
            g = generate(spec).graph
            coloring = prescribed_coloring(spec)
            ok = (coloring.num_colors <= 3 and is_proper(g, coloring)
                  and is_semi_transitive(orientation_from_coloring(g, coloring)))
            if not ok:
                failures.append(str(spec))
    _report(4, not failures, "; ".join(failures))


def test_criterion_05_four_orientation_count():
    """G4 minus {x, y} has exactly four semi-transitive orientations with
    vertex 1 as the source, for n = 3 and n = 4."""
    t0 = time.perf_counter()
    counts = {}
    for n in (3, 4):
        member = generate(FamilySpec("G4", n))
        idx = member.label_index()
        core = [v for v in range(member.graph.n) if v not in (idx["x"], idx["y"])]
        core_graph = induced_subgraph(member.graph, core)
        counts[n] = count_semi_transitive_orientations(
            core_graph, SearchConfig(fixed_source=0))
    elapsed = time.perf_counter() - t0
    assert elapsed < 60
    ok = counts == {3: 4, 4: 4}
    _report(5, ok, f"counts={counts}, {elapsed:.1f}s")


def test_criterion_06_cone_characterization(corpus_6):
    t0 = time.perf_counter()
    failures = []
    for line_graph in corpus_6:
        if not cone_characterization_check(line_graph):
            failures.append(line_graph)
    extras = {
        "g9:2": generate(FamilySpec("G9", 2)).graph,
        "c5": cycle(5),
        "k4": complete(4),
        "p4": from_edge_list(4, [(0, 1), (1, 2), (2, 3)]),
    }
    for name, g in extras.items():
        if not cone_characterization_check(g):
            failures.append(name)
    elapsed = time.perf_counter() - t0
    assert elapsed < 600
    _report(6, not failures, f"{len(corpus_6)} six-vertex classes, {elapsed:.1f}s"
            if not failures else f"counterexamples: {failures}")


def test_criterion_07_word_semantics_fidelity():
    w = word_from_string("3123143")
    verdicts = {(1, 2): True, (1, 3): True, (2, 4): True,
                (2, 3): False, (1, 4): False, (3, 4): False}
    ok = all(alternate(w, i - 1, j - 1) is v for (i, j), v in verdicts.items())
    fig1_g1 = complement(from_edge_list(6, [(3, 5)]))
    ok = ok and represents(word_from_string("6123564"), fig1_g1)
    ok = ok and not is_word_representable(cone(cycle(5)))
    _report(7, ok)


def test_criterion_08_oracle_equivalence(corpus_upto_5):
    t0 = time.perf_counter()
    checked = 0
    for g in corpus_upto_5:
        any_st = False
        for o in all_orientations(g):
            pruned = is_semi_transitive(o)
            assert pruned == is_semi_transitive_naive(o)
            any_st = any_st or pruned
            checked += 1
        assert any_st == (exists_semi_transitive_orientation(g) is not None)
    _report(8, True, f"{checked} orientations across {len(corpus_upto_5)} graphs, "
            f"{time.perf_counter() - t0:.1f}s")


def test_criterion_09_source_vertex_freedom(corpus_upto_5, corpus_6):
    t0 = time.perf_counter()
    failures = []
    for g in corpus_upto_5 + corpus_6:
        if not is_word_representable(g):
            continue
        for v in range(g.n):
            cert = exists_semi_transitive_orientation(g, SearchConfig(fixed_source=v))
            if cert is None or not source_of(cert, v):
                failures.append((g, v))
    _report(9, not failures, f"{time.perf_counter() - t0:.1f}s")


def test_criterion_10_non_minimality_witnesses():
    # W5 plus a 7th vertex on two consecutive rim vertices
    g2_seven = from_edge_list(7, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                                  (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
                                  (3, 6), (4, 6)])
    w5 = cone(cycle(5))
    ok = not is_minimal_non_word_representable(g2_seven)
    witness = None
    for subset in combinations(range(7), 6):
        candidate = induced_subgraph(g2_seven, subset)
        if is_isomorphic(candidate, w5):
            witness = subset
            break
    ok = ok and witness is not None
    # C5 plus a 6th vertex adjacent to two rim vertices
    g2_six = from_edge_list(6, [(0, 1), (1, 2), (2, 4), (0, 3), (4, 3), (2, 5), (5, 4)])
    ok = ok and not is_minimal_non_comparability(g2_six)
    _report(10, ok, f"induced W5 on vertices {witness}")
