"""Conflict-free connection numbers of graphs and of their iterated line graphs."""

from .constructions import (
    construct_cfc_coloring,
    cut_path_coloring,
    ruler_path_coloring,
    star_coloring,
    two_edge_connected_coloring,
)
from .errors import (
    CfcError,
    ColoringError,
    GraphParseError,
    HUndecidableError,
    InternalError,
    MethodRefused,
    NotConnectedError,
    PreconditionError,
    ScaleError,
)
from .graph import (
    Edge,
    Graph,
    induced_subgraph,
    is_complete,
    is_connected,
    parse_dot,
    parse_edge_list,
    parse_graph,
    render_dot,
    render_edge_list,
    render_graph,
)
from .linegraph import LabeledLineGraph, is_star_or_triangle, iterated_line_graph, line_graph
from .oracle import CfcResult, Limits, Method, cfc_oracle
from .solver import K0Result, cfc_exact, cfc_iterated, h_value, k0
from .structure import (
    BlockDecomposition,
    CutStructure,
    Kind,
    block_decomposition,
    classify_cut_components,
    find_bridges,
    is_claw_free,
    is_two_connected,
    is_two_edge_connected,
    nontrivial_block_matching,
    path_through_edge,
)
from .verify import CfcWitness, EdgeColoring, exists_conflict_free_path, is_conflict_free_path, verify_cfc

__version__ = "0.1.0"
