"""Codes with per-symbol encoding constraints.

Given a bipartite graph saying which message symbols each code symbol may
depend on, this package computes the reachable minimum-distance bounds
(general and systematic), constructs linear codes achieving them as subcodes
of Reed-Solomon codes, and ships exhaustive verification oracles plus an
efficient decoder.
"""

from .bounds import BoundsReport, bounds_report, d_min_bound, k_sys_search
from .construct import (CodeSpec, generic_subcode, mds_nullspace_construct,
                        systematic_dmin, systematic_dsys, validity_check)
from .errors import (DecodingError, GuardExceededError, InfeasibleError,
                     NoMatchingError)
from .field import GF, smallest_prime_at_least
from .graph import (ConstraintGraph, MatchedAdjacency, find_matching,
                    hall_check, load_graph, matched_adjacency,
                    neighborhood_size, row_zero_stats)
from .rs import RSCode, default_defining_set
from .verify import (DistanceReport, min_distance_exhaustive, rank_over_field,
                     subcode_decode, subcode_encode, systematic_fast_read)

__version__ = "0.1.0"

__all__ = [
    "GF", "ConstraintGraph", "MatchedAdjacency", "RSCode", "CodeSpec",
    "BoundsReport", "DistanceReport",
    "bounds_report", "d_min_bound", "k_sys_search",
    "generic_subcode", "systematic_dmin", "systematic_dsys",
    "mds_nullspace_construct", "validity_check",
    "load_graph", "find_matching", "hall_check", "matched_adjacency",
    "neighborhood_size", "row_zero_stats", "default_defining_set",
    "min_distance_exhaustive", "rank_over_field",
    "subcode_encode", "subcode_decode", "systematic_fast_read",
    "smallest_prime_at_least",
    "DecodingError", "GuardExceededError", "InfeasibleError", "NoMatchingError",
]
