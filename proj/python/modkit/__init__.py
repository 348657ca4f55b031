"""Modularity maximization with SDP relaxations and hyperplane rounding."""

from ._core import (
    Graph,
    QMatrix,
    SdpSolution,
    ValidationError,
    bounds,
    build_q,
    cut_expectation_floor,
    exact_cut,
    exact_full,
    full_expectation_floor,
    gram_vectors,
    modularity,
    parse_edge_list,
    q_split,
    read_edge_list,
    round_cut,
    round_full,
    sample_scores,
    select_k_star,
    solve_cut_sdp,
    solve_full_sdp,
)

__all__ = [
    "Graph",
    "QMatrix",
    "SdpSolution",
    "ValidationError",
    "bounds",
    "build_q",
    "cut_expectation_floor",
    "exact_cut",
    "exact_full",
    "full_expectation_floor",
    "gram_vectors",
    "modularity",
    "parse_edge_list",
    "q_split",
    "read_edge_list",
    "round_cut",
    "round_full",
    "sample_scores",
    "select_k_star",
    "solve_cut_sdp",
    "solve_full_sdp",
]
