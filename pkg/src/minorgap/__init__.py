"""Edge-maximal minor-free graphs: enumeration, constructions, certification."""

from .analysis import (
    AddabilityFlags,
    ClassificationVerdict,
    GapRow,
    GapSequence,
    MonotonicityReport,
    addability,
    classify_connected,
    gap_sequence,
    impurity_threshold,
    monotonicity_checks,
)
from .cache import SpectrumCache, default_cache_dir
from .canon import are_isomorphic, canonical_form, canonical_order
from .errors import (
    BadParams,
    BelowFrobenius,
    EdgeCountMismatch,
    MinorgapError,
    NotCoprime,
    NotFree,
    NotMaximal,
    TooLarge,
)
from .families import (
    FAMILY_NAMES,
    Certificate,
    ConstructionRecipe,
    build_family,
    certify,
    frobenius_decompose,
    identify_copies,
    k5_witnesses_14,
)
from .graph import (
    Graph,
    GraphStats,
    clique_sum,
    connectivity,
    add_edge,
    contract_edge,
    disjoint_union,
    graph_stats,
    induced_subgraph,
    is_connected,
    is_planar,
    make_graph,
    named_graph,
    standard_graph,
    subdivide_edge,
)
from .graph6 import graph6_decode, graph6_encode
from .minor import (
    ForbiddenSet,
    MaximalityVerdict,
    MinorModel,
    find_minor_model,
    has_minor,
    is_edge_maximal_free,
    is_free,
    naive_has_minor,
    verify_model,
)
from .spectrum import EdgeSpectrum, edge_spectrum, enumerate_free, gap
from .version import __version__

__all__ = [
    "AddabilityFlags",
    "BadParams",
    "BelowFrobenius",
    "Certificate",
    "ClassificationVerdict",
    "ConstructionRecipe",
    "EdgeCountMismatch",
    "EdgeSpectrum",
    "FAMILY_NAMES",
    "ForbiddenSet",
    "GapRow",
    "GapSequence",
    "Graph",
    "GraphStats",
    "MaximalityVerdict",
    "MinorModel",
    "MinorgapError",
    "MonotonicityReport",
    "NotCoprime",
    "NotFree",
    "NotMaximal",
    "SpectrumCache",
    "TooLarge",
    "addability",
    "are_isomorphic",
    "build_family",
    "canonical_form",
    "canonical_order",
    "certify",
    "classify_connected",
    "clique_sum",
    "connectivity",
    "add_edge",
    "contract_edge",
    "default_cache_dir",
    "disjoint_union",
    "edge_spectrum",
    "enumerate_free",
    "find_minor_model",
    "frobenius_decompose",
    "gap",
    "gap_sequence",
    "graph_stats",
    "graph6_decode",
    "graph6_encode",
    "has_minor",
    "identify_copies",
    "impurity_threshold",
    "induced_subgraph",
    "is_connected",
    "is_edge_maximal_free",
    "is_free",
    "is_planar",
    "make_graph",
    "k5_witnesses_14",
    "monotonicity_checks",
    "naive_has_minor",
    "named_graph",
    "standard_graph",
    "subdivide_edge",
    "verify_model",
    "__version__",
]
