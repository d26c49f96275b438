"""Exact spectral graph toolkit.

Friendship graphs and their one cospectral exception, exact integer
characteristic polynomials, spectral-radius bound checks, exhaustive
enumeration of small graph spaces, and a mechanical replay of the
connected-cospectral-implies-friendship argument.
"""

from .canon import canonical_graph, canonical_key, canonical_labeling, is_isomorphic
from .charpoly import (
    CharPoly,
    CharPolyError,
    are_cospectral,
    char_poly,
    edges_from_charpoly,
    triangles_from_charpoly,
)
from .eigen import (
    BIDEGREED,
    REGULAR,
    STRICT,
    EqualityStructureViolation,
    HongBoundError,
    HongReport,
    SpectrumSummary,
    eigenvalues,
    hong_bound,
    hong_equality_case,
    spectral_radius,
)
from .enumeration import (
    DEFAULT_MAX_VERTICES,
    EnumerationError,
    EnumerationTask,
    MateReport,
    brute_force_class_counts,
    enumerate_graphs,
    find_cospectral_mates,
    verify_ds,
)
from .friendship import (
    build_friendship,
    closed_form_charpoly,
    closed_form_radius,
    f16_mate,
    f16_mate_block,
    is_friendship,
)
from .graph6 import Graph6Error, from_graph6, iter_graph6, to_graph6
from .graphs import (
    Graph,
    GraphError,
    build_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    degree_sequence,
    disjoint_union,
    is_connected,
    min_degree,
    path_graph,
    random_graph,
    relabel,
    star_graph,
    triangle_count,
)
from .proof import (
    ProofReport,
    ProofStep,
    ScopeVerdict,
    check_adjacent_deg2_implies_friendship,
    check_min_degree_property,
    run_proof_pipeline,
)

__version__ = "0.1.0"
