"""Exact tools for 2-edge-colored complete graphs: connectivity
certificates, counterexample colorings, and regime classification."""

from .bounds import (
    Regime,
    RegimeReport,
    Thresholds,
    ceil_isqrt,
    classify,
    construction_admissible,
    lambda_of,
    tau_of,
    thresholds,
)
from .coloring import (
    Color,
    EdgeColoring,
    ParseError,
    SimpleGraph,
    coloring_from_edges,
    induced_subgraph,
    monochromatic_view,
    parse_coloring,
    serialize_coloring,
)
from .connectivity import (
    BudgetExceeded,
    CutResult,
    KConnReport,
    connected_components,
    find_small_cut,
    is_k_connected,
    k_core,
    local_vertex_connectivity,
    max_k_connected_subgraph,
    oracle_is_k_connected,
    oracle_max_k_connected,
)
from .counterexample import (
    CounterexampleInstance,
    PeelingCertificate,
    PeelingVerdict,
    blue_certificate,
    generate,
    parse_labels,
    parse_peeling,
    red_certificate,
    serialize_labels,
    serialize_peeling,
    verify_peeling,
)
from .decomposition import (
    ClauseViolation,
    Decomposed,
    Decomposition,
    EdgePartition,
    FoundSubgraph,
    Triple,
    edge_partition,
    greedy_decompose,
    implies_no_large_subgraph,
    parse_decomposition,
    serialize_decomposition,
    verify_decomposition,
)

__all__ = [
    "BudgetExceeded",
    "ClauseViolation",
    "Color",
    "CounterexampleInstance",
    "CutResult",
    "Decomposed",
    "Decomposition",
    "EdgeColoring",
    "EdgePartition",
    "FoundSubgraph",
    "KConnReport",
    "ParseError",
    "PeelingCertificate",
    "PeelingVerdict",
    "Regime",
    "RegimeReport",
    "SimpleGraph",
    "Thresholds",
    "Triple",
    "blue_certificate",
    "ceil_isqrt",
    "classify",
    "coloring_from_edges",
    "connected_components",
    "construction_admissible",
    "edge_partition",
    "find_small_cut",
    "generate",
    "greedy_decompose",
    "implies_no_large_subgraph",
    "induced_subgraph",
    "is_k_connected",
    "k_core",
    "lambda_of",
    "local_vertex_connectivity",
    "max_k_connected_subgraph",
    "monochromatic_view",
    "oracle_is_k_connected",
    "oracle_max_k_connected",
    "parse_coloring",
    "parse_decomposition",
    "parse_labels",
    "parse_peeling",
    "red_certificate",
    "serialize_coloring",
    "serialize_decomposition",
    "serialize_labels",
    "serialize_peeling",
    "tau_of",
    "thresholds",
    "verify_decomposition",
    "verify_peeling",
]
