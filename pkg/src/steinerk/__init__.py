"""Exact Steiner distance invariants on trees.

Brute-force oracles, polynomial edge-contribution formulas, Steiner
k-medians, extremal ratio bounds and an exhaustive free-tree harness.
"""
from .enumeration import CanonicalTree, canonicalize, enumerate_free_trees, prufer_decode
from .errors import (
    CapExceeded,
    EntryOutOfRange,
    KOutOfRange,
    MalformedInput,
    NotAnEdge,
    NotATree,
    ParameterOutOfRange,
    SteinerError,
    UnknownCheck,
    VertexOutOfRange,
)
from .extremal import (
    CometSpec,
    PendantPath,
    RatioBound,
    comet,
    comet_internal_denominator,
    comet_leaf_denominator,
    global_local_bounds,
    internal_pair_ratio_bound,
    leaf_centroid_lower_bound,
    leaf_pair_ratio_bound,
    path_vertex_distance_closed,
    pendant_path_distance_closed,
)
from .indices import IndexVector, across_edge_delta, all_vertex_index, binomial, steiner_wiener, vertex_index
from .medians import GapCheck, MedianReport, check_gap_bounds, median, median_report, satisfactory
from .oracle import IndexMode, brute_steiner_wiener, brute_vertex_index
from .tree import (
    EdgeSplit,
    Tree,
    VertexClass,
    edge_splits,
    format_tree,
    pairwise_distance,
    parse_tree,
    path_tree,
    star_tree,
    steiner_distance,
)
from .verify import CHECKS, VerificationReport, verify

__version__ = "0.1.0"
