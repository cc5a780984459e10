"""Command-line surface.

Exit codes: 0 = ran and answered (true, for check-style commands);
1 = the checked property is false / nothing found; 2 = usage error;
3 = a search ran out of budget before answering.

Vertex labels visible on the command line (words, DOT, --source) are 1-based;
edge lists and graph6 keep their 0-based and raw conventions.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import formats, gallai, graph6, reports, words
from .errors import BudgetExceeded, WordrepError
from .graphs import Graph, cone
from .orientations import is_semi_transitive
from .recognizers import (
    SearchConfig,
    classify,
    exists_semi_transitive_orientation,
    exists_transitive_orientation,
    is_comparability,
    is_minimal_non_comparability,
    is_minimal_non_word_representable,
    is_word_representable,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

GRAPH_FORMATS = ("graph6", "edgelist", "dot")


def _read_text(args) -> str:
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="ascii") as fh:
            return fh.read()
    return sys.stdin.read()


def _read_graph(args) -> Graph:
    text = _read_text(args)
    if args.informat == "edgelist":
        return formats.parse_edgelist(text)
    for line in text.splitlines():
        if line.strip():
            return graph6.parse_graph6(line.strip())
    raise WordrepError("no graph on input")


def _emit_graph(g: Graph, fmt: str, labels=None) -> str:
    if fmt == "graph6":
        return graph6.emit_graph6(g) + "\n"
    if fmt == "edgelist":
        return formats.emit_edgelist(g)
    return formats.emit_dot(g, labels)


def _config(args) -> SearchConfig:
    kwargs = {}
    if getattr(args, "source", None) is not None:
        if args.source < 1:
            raise WordrepError("--source takes a 1-based vertex label")
        kwargs["fixed_source"] = args.source - 1
    if getattr(args, "budget", None) is not None:
        kwargs["node_budget"] = args.budget
    return SearchConfig(**kwargs)


def _cmd_gen(args) -> int:
    member = gallai.generate(gallai.parse_spec(args.spec))
    sys.stdout.write(_emit_graph(member.graph, args.format, member.labels))
    return EXIT_OK


CHECK_KEYS = {
    "wr": "word_representable",
    "comparability": "comparability",
    "minimal-nwr": "minimal_non_word_representable",
    "minimal-ncomp": "minimal_non_comparability",
    "semitransitive-cert": "semi_transitive",
}


def _cmd_check(args) -> int:
    config = _config(args)
    if args.property == "semitransitive-cert":
        orientation = formats.parse_dot_orientation(_read_text(args))
        verdict = is_semi_transitive(orientation)
    else:
        g = _read_graph(args)
        if args.property == "wr":
            verdict = is_word_representable(g, config)
        elif args.property == "comparability":
            verdict = is_comparability(g, config.node_budget)
        elif args.property == "minimal-nwr":
            verdict = is_minimal_non_word_representable(g, config)
        else:
            verdict = is_minimal_non_comparability(g, config.node_budget)
    print(json.dumps({CHECK_KEYS[args.property]: verdict}))
    return EXIT_OK if verdict else EXIT_FALSE


def _cmd_orient(args) -> int:
    g = _read_graph(args)
    config = _config(args)
    if args.kind == "semitransitive":
        cert = exists_semi_transitive_orientation(g, config)
    else:
        cert = exists_transitive_orientation(g, config.node_budget)
    if cert is None:
        print(f"no {args.kind} orientation exists", file=sys.stderr)
        return EXIT_FALSE
    if args.format == "json":
        print(json.dumps({"arcs": [list(a) for a in cert.arcs()]}))
    else:
        sys.stdout.write(formats.emit_dot(cert))
    return EXIT_OK


def _cmd_cone(args) -> int:
    g = _read_graph(args)
    sys.stdout.write(_emit_graph(cone(g), args.format))
    return EXIT_OK


def _cmd_word(args) -> int:
    if args.word_command == "check":
        w = words.word_from_string(args.word)
        for i in range(w.alphabet_size):
            for j in range(i + 1, w.alphabet_size):
                verdict = "alternate" if words.alternate(w, i, j) else "non-alternate"
                print(f"{i + 1} {j + 1} {verdict}")
        return EXIT_OK
    if args.word_command == "graph":
        w = words.word_from_string(args.word)
        sys.stdout.write(_emit_graph(words.graph_of_word(w), args.format))
        return EXIT_OK
    g = _read_graph(args)
    found = words.find_word_bruteforce(g, args.kmax)
    if found is None:
        print(f"no representing word with letter multiplicity <= {args.kmax}", file=sys.stderr)
        return EXIT_FALSE
    print(words.word_to_string(found))
    return EXIT_OK


_FILTER_PREDICATES = {
    "wr": is_word_representable,
    "comparability": lambda g: is_comparability(g),
    "minimal-nwr": is_minimal_non_word_representable,
    "minimal-ncomp": lambda g: is_minimal_non_comparability(g),
}


def _filter_one(task: tuple[str, str]) -> str:
    prop, line = task
    g = graph6.parse_graph6(line)
    try:
        return "true" if _FILTER_PREDICATES[prop](g) else "false"
    except BudgetExceeded:
        return "budget-exceeded"


def _cmd_filter(args) -> int:
    lines = [line.strip() for line in sys.stdin if line.strip()]
    tasks = [(args.property, line) for line in lines]
    for line in lines:  # surface malformed input before any verdicts
        graph6.parse_graph6(line)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            verdicts = list(pool.map(_filter_one, tasks))
    else:
        verdicts = [_filter_one(t) for t in tasks]
    for line, verdict in zip(lines, verdicts):
        print(f"{line}\t{verdict}")
    return EXIT_BUDGET if "budget-exceeded" in verdicts else EXIT_OK


def _cmd_reproduce(args) -> int:
    docs = []
    for spec in gallai.classification_table(args.nmax):
        member = gallai.generate(spec)
        report = classify(member.graph, graph_id=str(spec))
        docs.append(reports.build_report(
            report, member.graph, family=spec,
            expected=gallai.expected_semi_transitive(spec),
        ))
    print(json.dumps(docs, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordrep",
        description="Decide word-representability and comparability of small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named family member")
    p.add_argument("spec", help="family spec such as g1:4 or h7")
    p.add_argument("--format", choices=GRAPH_FORMATS, default="graph6")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="check one property of one graph (or certificate)")
    p.add_argument("property", choices=tuple(CHECK_KEYS))
    p.add_argument("--input", help="read from this file instead of stdin")
    p.add_argument("--informat", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--source", type=int, help="1-based vertex that must be a source")
    p.add_argument("--budget", type=int, help="search node budget")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("orient", help="emit an orientation certificate")
    p.add_argument("kind", choices=("semitransitive", "transitive"))
    p.add_argument("--input")
    p.add_argument("--informat", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--source", type=int, help="1-based vertex that must be a source")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=_cmd_orient)

    p = sub.add_parser("cone", help="append an all-adjacent apex vertex")
    p.add_argument("--input")
    p.add_argument("--informat", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--format", choices=GRAPH_FORMATS, default="graph6")
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("word", help="alternation word operations")
    wsub = p.add_subparsers(dest="word_command", required=True)
    q = wsub.add_parser("check", help="print the alternation verdict of every letter pair")
    q.add_argument("word")
    q.set_defaults(func=_cmd_word)
    q = wsub.add_parser("graph", help="print the graph the word represents")
    q.add_argument("word")
    q.add_argument("--format", choices=GRAPH_FORMATS, default="edgelist")
    q.set_defaults(func=_cmd_word)
    q = wsub.add_parser("find", help="brute-force a representing word for a graph")
    q.add_argument("--kmax", type=int, default=2, help="max occurrences per letter")
    q.add_argument("--input")
    q.add_argument("--informat", choices=("graph6", "edgelist"), default="graph6")
    q.set_defaults(func=_cmd_word)

    p = sub.add_parser("filter", help="verdict per graph6 line on stdin, order preserved")
    p.add_argument("property", choices=tuple(_FILTER_PREDICATES))
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_filter)

    p = sub.add_parser("reproduce-paper", help="run the full classification table as JSON reports")
    p.add_argument("--nmax", type=int, default=4, help="largest family parameter in the table")
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except WordrepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
