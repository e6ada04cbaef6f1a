"""Minimum average-length binary codes with at most D ones per codeword."""

from ._core import (
    CodeError,
    alphabetic_binding_threshold,
    average_cost,
    brute_alphabetic,
    brute_feasible,
    brute_prefix,
    build_from_lengths,
    check_feasibility,
    decode,
    encode,
    huffman_cost,
    kraft_sum,
    level_capacity,
    ones_count,
    optimal_alphabetic,
    optimal_prefix,
    prefix_binding_threshold,
)

__version__ = "0.1.0"

__all__ = [
    "CodeError",
    "alphabetic_binding_threshold",
    "average_cost",
    "brute_alphabetic",
    "brute_feasible",
    "brute_prefix",
    "build_from_lengths",
    "check_feasibility",
    "decode",
    "encode",
    "huffman_cost",
    "kraft_sum",
    "level_capacity",
    "ones_count",
    "optimal_alphabetic",
    "optimal_prefix",
    "prefix_binding_threshold",
]
