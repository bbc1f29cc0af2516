"""Acyclic edge coloring of degenerate graphs.

Constructive colorers for 3-degenerate graphs (max_degree + 5 colors) and
k-degenerate graphs with k >= 4 (ceil((k+1)/2 * max_degree) + 1 colors),
an exact brute-force oracle, verifiers, seeded generators, an HTTP service
and a CLI.
"""

from .coloring import (
    BichromaticCycle,
    BichromaticPath,
    ColoringReport,
    PartialEdgeColoring,
    coloring_from_dict,
    coloring_to_dict,
    is_acyclic,
)
from .deg3 import Not3Degenerate, color_graph_3deg, extend_edge_3deg, is_freeable
from .errors import (
    BadSpec,
    EdgeAlreadyColored,
    EmptyGraph,
    ExtensionFailed,
    GraphError,
    ImproperColoring,
    KTooSmall,
    MaxColorsExceeded,
    NotACandidate,
    NotKDegenerate,
    PropernessViolation,
    UncoloredEdge,
    UnknownEdge,
)
from .generate import GenSpec, build, random_k_degenerate, subcubic_random
from .graph import (
    DegeneracyDecomposition,
    Graph,
    degeneracy,
    find_low_degree_edge,
    find_special_edge,
    format_edge_list,
    is_k_degenerate,
    parse_edge_list,
)
from .kdeg import color_graph_kdeg, extend_edge_kdeg, palette_size_k
from .oracle import OracleResult, exact_acyclic_chromatic_index, verify_coloring

__version__ = "0.1.0"

__all__ = [
    "BadSpec",
    "BichromaticCycle",
    "BichromaticPath",
    "ColoringReport",
    "DegeneracyDecomposition",
    "EdgeAlreadyColored",
    "EmptyGraph",
    "ExtensionFailed",
    "GenSpec",
    "Graph",
    "GraphError",
    "ImproperColoring",
    "KTooSmall",
    "MaxColorsExceeded",
    "Not3Degenerate",
    "NotACandidate",
    "NotKDegenerate",
    "OracleResult",
    "PartialEdgeColoring",
    "PropernessViolation",
    "UncoloredEdge",
    "UnknownEdge",
    "build",
    "color_graph_3deg",
    "color_graph_kdeg",
    "coloring_from_dict",
    "coloring_to_dict",
    "degeneracy",
    "exact_acyclic_chromatic_index",
    "extend_edge_3deg",
    "extend_edge_kdeg",
    "find_low_degree_edge",
    "find_special_edge",
    "format_edge_list",
    "is_acyclic",
    "is_freeable",
    "is_k_degenerate",
    "palette_size_k",
    "parse_edge_list",
    "random_k_degenerate",
    "subcubic_random",
    "verify_coloring",
]
