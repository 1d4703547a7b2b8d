"""Alphabet-size lower bounds for secure network coding on wiretap networks.

Given an acyclic unit-capacity network and a collection of wiretap edge
sets, this package groups the sets into equivalence classes (sets sharing a
minimum cut), orders the classes by domination, and computes two lower
bounds on the alphabet any secure code needs: the class count N and the
usually much smaller count N_max of maximal classes. A brute-force oracle
re-derives everything from the definitions for cross-validation, and the
`wtb` command line exposes the whole pipeline on plain text files.
"""

from .errors import (
    CollectionTooLarge,
    CyclicGraph,
    DanglingEndpoint,
    EmptyTargetSet,
    InstanceTooLarge,
    MalformedFlow,
    NoPrimaryFound,
    NotMaximumFlow,
    ParameterOutOfRange,
    ParseError,
    SourceHasIncomingEdges,
    TargetMismatch,
    UnknownEdge,
    UnknownEdgeLabel,
    UnreachableTarget,
    WtbError,
)
from .graph import (
    Network,
    TransformedNetwork,
    build_network,
    edge_precedes,
    identity_transform,
    split_and_sink,
    topological_order,
)
from .flow import Flow, PathSet, base_path, decompose_paths, max_flow, residual_source_set
from .cuts import (
    Cut,
    cut_leq,
    mincut_capacity,
    minord_merge,
    primary_min_cut,
    reachable_nodes,
    separates,
)
from .wiretap import (
    BoundReport,
    EquivalenceClass,
    HasseDiagram,
    WiretapCollection,
    class_hasse,
    compute_bound,
    dominates,
    equivalent,
    partition_classes,
    preprocess,
    reachable_after_delete,
    regularize,
    strict_order_pairs,
)
from .oracle import (
    CheckResult,
    MinCutFamily,
    OracleBounds,
    cross_check,
    enumerate_min_cuts,
    oracle_bounds,
    oracle_primary_min_cut,
)
from .fileio import (
    LabelTable,
    export_hasse_dot,
    gen_combination,
    gen_r_wiretap,
    parse_collection,
    parse_network,
    serialize_collection,
    serialize_network,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CheckResult",
    "CollectionTooLarge",
    "Cut",
    "CyclicGraph",
    "DanglingEndpoint",
    "EmptyTargetSet",
    "EquivalenceClass",
    "Flow",
    "HasseDiagram",
    "InstanceTooLarge",
    "LabelTable",
    "MalformedFlow",
    "MinCutFamily",
    "Network",
    "NoPrimaryFound",
    "NotMaximumFlow",
    "OracleBounds",
    "ParameterOutOfRange",
    "ParseError",
    "PathSet",
    "SourceHasIncomingEdges",
    "TargetMismatch",
    "TransformedNetwork",
    "UnknownEdge",
    "UnknownEdgeLabel",
    "UnreachableTarget",
    "WiretapCollection",
    "WtbError",
    "base_path",
    "build_network",
    "class_hasse",
    "compute_bound",
    "cross_check",
    "cut_leq",
    "decompose_paths",
    "dominates",
    "edge_precedes",
    "enumerate_min_cuts",
    "equivalent",
    "export_hasse_dot",
    "gen_combination",
    "gen_r_wiretap",
    "identity_transform",
    "max_flow",
    "mincut_capacity",
    "minord_merge",
    "oracle_bounds",
    "oracle_primary_min_cut",
    "parse_collection",
    "parse_network",
    "partition_classes",
    "preprocess",
    "primary_min_cut",
    "reachable_after_delete",
    "reachable_nodes",
    "regularize",
    "residual_source_set",
    "separates",
    "serialize_collection",
    "serialize_network",
    "split_and_sink",
    "strict_order_pairs",
    "topological_order",
]
