"""JSON report documents for classification runs, plus their schema."""

from __future__ import annotations

from typing import Any

from .gallai import FamilySpec, generate, prescribed_coloring
from .graph6 import emit_graph6, parse_graph6
from .orientations import Coloring, Orientation, is_proper, is_semi_transitive
from .recognizers import ClassificationReport

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "ClassificationReportDocument",
    "type": "object",
    "properties": {
        "graph": {"type": "string", "description": "graph6 encoding of the graph"},
        "family": {"type": "string", "description": "family spec such as g5:3 or h7"},
        "verdicts": {
            "type": "object",
            "properties": {
                "comparability": {"type": "boolean"},
                "word_representable": {"type": "boolean"},
                "minimal_non_comparability": {"type": "boolean"},
                "minimal_non_word_representable": {"type": "boolean"},
            },
            "required": [
                "comparability",
                "word_representable",
                "minimal_non_comparability",
                "minimal_non_word_representable",
            ],
            "additionalProperties": False,
        },
        "certificates": {
            "type": "object",
            "properties": {
                "orientation": {
                    "type": "object",
                    "description": "semi-transitive orientation as arc pairs",
                    "properties": {
                        "arcs": {
                            "type": "array",
                            "items": {
                                "type": "array",
                                "items": {"type": "integer", "minimum": 0},
                                "minItems": 2,
                                "maxItems": 2,
                            },
                        }
                    },
                    "required": ["arcs"],
                    "additionalProperties": False,
                },
                "coloring": {
                    "type": "object",
                    "properties": {
                        "colors": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                        "num_colors": {"type": "integer", "minimum": 1},
                    },
                    "required": ["colors", "num_colors"],
                    "additionalProperties": False,
                },
            },
            "additionalProperties": False,
        },
        "expected": {"type": "boolean"},
        "agree": {"type": "boolean"},
    },
    "required": ["graph", "verdicts", "certificates"],
    "additionalProperties": False,
}


def build_report(report: ClassificationReport, graph,
                 family: FamilySpec | None = None,
                 expected: bool | None = None) -> dict[str, Any]:
    """Assemble the JSON document for one classified graph.

    Timings are deliberately left out so repeated runs are byte-identical.
    """
    doc: dict[str, Any] = {"graph": emit_graph6(graph)}
    if family is not None:
        doc["family"] = str(family)
    doc["verdicts"] = {
        "comparability": report.is_comparability,
        "word_representable": report.is_word_representable,
        "minimal_non_comparability": report.is_minimal_non_comparability,
        "minimal_non_word_representable": report.is_minimal_non_word_representable,
    }
    certificates: dict[str, Any] = {}
    if report.semi_transitive_orientation is not None:
        certificates["orientation"] = {
            "arcs": [list(arc) for arc in report.semi_transitive_orientation.arcs()]
        }
    if family is not None:
        coloring = prescribed_coloring(family)
        if coloring is not None:
            certificates["coloring"] = {
                "colors": list(coloring.colors),
                "num_colors": coloring.num_colors,
            }
    doc["certificates"] = certificates
    if expected is not None:
        doc["expected"] = expected
        doc["agree"] = expected == report.is_word_representable
    return doc


def verify_report(doc: dict[str, Any]) -> None:
    """Re-verify a loaded report document; raises ValueError on any failure."""
    g = parse_graph6(doc["graph"])
    family = doc.get("family")
    if family is not None:
        from .gallai import parse_spec

        member = generate(parse_spec(family))
        if member.graph != g:
            raise ValueError(f"graph6 does not match generated family member {family}")
    certs = doc.get("certificates", {})
    if "orientation" in certs:
        o = Orientation.from_arcs(g, [tuple(arc) for arc in certs["orientation"]["arcs"]])
        if not is_semi_transitive(o):
            raise ValueError("orientation certificate fails the semi-transitivity check")
        if not doc["verdicts"]["word_representable"]:
            raise ValueError("certificate present but verdict says non-representable")
    if "coloring" in certs:
        c = Coloring(tuple(certs["coloring"]["colors"]), certs["coloring"]["num_colors"])
        if not is_proper(g, c):
            raise ValueError("coloring certificate is not proper")
