"""Spectral graph matching: GRAMPA and its row-sum-constrained variant."""

from ._core import (
    CorrelatedPair,
    Matching,
    Permutation,
    SimilarityMatrix,
    SpecmatchError,
    argmax_round,
    brute_force_round,
    center_scale,
    dominance_report,
    gen_er_pair,
    gen_gaussian_pair,
    grampa,
    grampa_contour,
    greedy_round,
    kkt_oracle_regqp,
    kkt_oracle_rowqp,
    lap_round,
    noise_params,
    overlap,
    permute_conjugate,
    resolvent,
    rowqp,
    rowqp_contour,
    semicircle_density,
    similarity_from_array,
    spectral_norm,
    stieltjes_m0,
    trace_m0_check,
)

__all__ = [
    "CorrelatedPair",
    "Matching",
    "Permutation",
    "SimilarityMatrix",
    "SpecmatchError",
    "argmax_round",
    "brute_force_round",
    "center_scale",
    "dominance_report",
    "gen_er_pair",
    "gen_gaussian_pair",
    "grampa",
    "grampa_contour",
    "greedy_round",
    "kkt_oracle_regqp",
    "kkt_oracle_rowqp",
    "lap_round",
    "noise_params",
    "overlap",
    "permute_conjugate",
    "resolvent",
    "rowqp",
    "rowqp_contour",
    "semicircle_density",
    "similarity_from_array",
    "spectral_norm",
    "stieltjes_m0",
    "trace_m0_check",
]
