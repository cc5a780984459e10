import random

import pytest
from hypothesis import given, settings

from wordrep import errors
from wordrep.gallai import classification_table, generate
from wordrep.graph6 import emit_graph6, parse_graph6
from wordrep.graphs import Graph, complete, cycle, empty, from_edge_list

from .conftest import graph_from_code, graphs_st


def reference_decode(line: str) -> Graph:
    """Deliberately different decoder: bit strings instead of integer shifting."""
    data = [ord(ch) - 63 for ch in line.strip()]
    if data[0] == 63:  # '~' long form
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    bitstring = "".join(format(b, "06b") for b in body)
    edges = []
    k = 0
    for col in range(1, n):
        for row in range(col):
            if bitstring[k] == "1":
                edges.append((row, col))
            k += 1
    assert set(bitstring[k:]) <= {"0"}
    return from_edge_list(n, edges)


class TestKnownLines:
    def test_star_line(self):
        g = parse_graph6("D?{")
        assert g == from_edge_list(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
        assert emit_graph6(g) == "D?{"

    def test_single_vertex(self):
        assert parse_graph6("@") == empty(1)
        assert emit_graph6(empty(1)) == "@"

    def test_null_graph(self):
        assert parse_graph6("?") == empty(0)
        assert emit_graph6(empty(0)) == "?"

    def test_k2(self):
        assert emit_graph6(complete(2)) == "A_"
        assert parse_graph6("A_") == complete(2)

    def test_trailing_newline_tolerated(self):
        assert parse_graph6("D?{\n") == parse_graph6("D?{")


class TestLongForm:
    def test_n63_round_trip(self):
        g = cycle(63)
        line = emit_graph6(g)
        assert line.startswith("~")
        assert parse_graph6(line) == g
        assert reference_decode(line) == g

    def test_n64_round_trip(self):
        g = complete(64)
        line = emit_graph6(g)
        assert parse_graph6(line) == g

    def test_long_form_rejected_above_cap(self):
        line = "~" + chr(63) + chr(64) + chr(63)  # n = 65
        padded = line + "?" * ((65 * 64 // 2 + 5) // 6)
        with pytest.raises(errors.TooManyVertices):
            parse_graph6(padded)

    def test_long_form_must_not_encode_short_counts(self):
        with pytest.raises(errors.MalformedHeader):
            parse_graph6("~??@")  # long form for n = 1


class TestErrors:
    def test_empty_line(self):
        with pytest.raises(errors.MalformedHeader):
            parse_graph6("")

    def test_bad_header_byte(self):
        with pytest.raises(errors.MalformedHeader):
            parse_graph6("\x1f")

    def test_truncated_body(self):
        with pytest.raises(errors.TruncatedBits):
            parse_graph6("D?")

    def test_trailing_bytes(self):
        with pytest.raises(errors.TruncatedBits):
            parse_graph6("D?{?")

    def test_non_canonical_padding(self):
        # C5 needs 10 bits; flip a padding bit in the last byte
        line = emit_graph6(cycle(5))
        bad = line[:-1] + chr(ord(line[-1]) | 1)
        with pytest.raises(errors.NonCanonicalPadding):
            parse_graph6(bad)

    def test_bad_body_byte(self):
        with pytest.raises(errors.Graph6Error):
            parse_graph6("D?\x05")


class TestRoundTrip:
    def test_random_corpus_against_reference(self):
        rng = random.Random(1234)
        for _ in range(1000):
            n = rng.randint(0, 16)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            line = emit_graph6(g)
            assert parse_graph6(line) == g
            assert reference_decode(line) == g

    def test_family_instances(self):
        for spec in classification_table(5):
            g = generate(spec).graph
            assert parse_graph6(emit_graph6(g)) == g

    @settings(max_examples=80)
    @given(graphs_st(max_n=12))
    def test_property_round_trip(self, g):
        assert parse_graph6(emit_graph6(g)) == g
