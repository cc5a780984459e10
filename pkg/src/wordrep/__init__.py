"""wordrep: word-representability and comparability deciders for small graphs.

Decides word-representability via exhaustive semi-transitive orientation
search, comparability via transitive-orientation forcing, generates the
minimal non-comparability families G1..G9 and H1..H11 with their documented
certificates, and verifies the cone characterization of minimal
non-word-representable graphs with an all-adjacent vertex.
"""

from . import errors
from .formats import emit_dot, emit_edgelist, parse_dot_orientation, parse_edgelist
from .gallai import (
    FamilySpec,
    LabeledGraph,
    classification_table,
    expected_semi_transitive,
    generate,
    parse_spec,
    prescribed_coloring,
    prescribed_orientation,
)
from .graph6 import emit_graph6, parse_graph6
from .graphs import (
    Graph,
    complement,
    complete,
    cone,
    cycle,
    delete_vertex,
    empty,
    from_edge_list,
    induced_subgraph,
    is_isomorphic,
)
from .orientations import (
    Coloring,
    DirectedPath,
    Orientation,
    ViolatingPath,
    is_acyclic,
    is_proper,
    is_semi_transitive,
    is_semi_transitive_naive,
    is_transitive,
    orientation_from_coloring,
    orientation_from_order,
    reverse,
    source_of,
    violating_path,
)
from .recognizers import (
    ClassificationReport,
    SearchConfig,
    classify,
    cone_characterization_check,
    count_semi_transitive_orientations,
    exists_semi_transitive_orientation,
    exists_transitive_orientation,
    is_comparability,
    is_minimal_non_comparability,
    is_minimal_non_word_representable,
    is_word_representable,
)
from .reports import REPORT_SCHEMA, build_report, verify_report
from .words import (
    Word,
    alternate,
    find_word_bruteforce,
    graph_of_word,
    represents,
    restrict,
    word_from_string,
    word_to_string,
)

__version__ = "0.1.0"
