"""Relaxed locally identifying colorings of finite simple graphs.

A vertex coloring, not necessarily proper, is accepted here when every
pair of adjacent vertices with distinct closed neighborhoods also gets
distinct sets of colors on those closed neighborhoods.  The package
bundles exact solvers for the associated chromatic numbers, linear
time verifiers, constructions that realize the known extremal
families, and cheap two-sided bounds, plus a command line front end.
"""

from .bounds import (
    BoundsReport,
    bounds_report,
    characterize_full_palette,
    lower_bound_log_omega,
    split_lower_bound,
)
from .coloring import (
    Coloring,
    ColoringError,
    VerificationReport,
    Violation,
    is_id,
    is_identifying_code,
    is_lid,
    is_proper,
    is_rlid,
    neighborhood_color_set,
    verify_id,
    verify_identifying_code,
    verify_lid,
    verify_proper,
    verify_rlid,
)
from .families import (
    FamilyInstance,
    LevelDecomposition,
    SplitPartition,
    TheoremCounterexample,
    bipartite_three_coloring,
    find_split_partition,
    g_star,
    h_p,
    lift_coloring_gstar,
    power_path,
    project_coloring_gstar,
    prop1_graph,
    q1,
    q2,
    split_rlid_coloring,
    split_separator,
    star,
)
from .graph import (
    BudgetExceeded,
    Graph,
    GraphError,
    TwinPartition,
    are_twins,
    bipartition,
    build_graph,
    degeneracy,
    graph_from_edge_mask,
    is_isomorphic,
    is_twin_free,
    join,
    max_clique_size,
    quotient,
    twin_partition,
)
from .io import (
    ParseError,
    export_dot,
    parse_coloring_file,
    parse_graph_file,
    parse_graph_text,
    parse_vertex_set_file,
    write_graph_dimacs,
    write_graph_edgelist,
    write_result,
)
from .solvers import (
    DEFAULT_NODE_BUDGET,
    Budget,
    SolveResult,
    SolveStats,
    chi_exact,
    decide_k_id,
    decide_k_lid,
    decide_k_proper,
    decide_k_rlid,
    enumerate_graphs,
    gamma_id_exact,
    random_split_graph,
)

__version__ = "1.0.0"

__all__ = [
    "BoundsReport",
    "Budget",
    "BudgetExceeded",
    "Coloring",
    "ColoringError",
    "DEFAULT_NODE_BUDGET",
    "FamilyInstance",
    "Graph",
    "GraphError",
    "LevelDecomposition",
    "ParseError",
    "SolveResult",
    "SolveStats",
    "SplitPartition",
    "TheoremCounterexample",
    "TwinPartition",
    "VerificationReport",
    "Violation",
    "are_twins",
    "bipartite_three_coloring",
    "bipartition",
    "bounds_report",
    "build_graph",
    "characterize_full_palette",
    "chi_exact",
    "decide_k_id",
    "decide_k_lid",
    "decide_k_proper",
    "decide_k_rlid",
    "degeneracy",
    "enumerate_graphs",
    "export_dot",
    "find_split_partition",
    "g_star",
    "gamma_id_exact",
    "graph_from_edge_mask",
    "h_p",
    "is_id",
    "is_identifying_code",
    "is_isomorphic",
    "is_lid",
    "is_proper",
    "is_rlid",
    "is_twin_free",
    "join",
    "lift_coloring_gstar",
    "lower_bound_log_omega",
    "max_clique_size",
    "neighborhood_color_set",
    "parse_coloring_file",
    "parse_graph_file",
    "parse_graph_text",
    "parse_vertex_set_file",
    "power_path",
    "project_coloring_gstar",
    "prop1_graph",
    "q1",
    "q2",
    "quotient",
    "random_split_graph",
    "split_lower_bound",
    "split_rlid_coloring",
    "split_separator",
    "star",
    "twin_partition",
    "verify_id",
    "verify_identifying_code",
    "verify_lid",
    "verify_proper",
    "verify_rlid",
    "write_graph_dimacs",
    "write_graph_edgelist",
    "write_result",
]
