"""Exact spanning-tree counting.

Graph Laplacians, five interchangeable exact determinant engines, closed-form
counts for the friendship-windmill families, and spanning-tree entropy.
"""

from .engines import (
    ENGINES,
    CornerMinors,
    EngineKind,
    det,
    det_bareiss,
    det_chio,
    det_cofactor,
    det_dodgson,
    det_salihu,
    salihu_minors,
)
from .graphs import (
    EdgeListFormatError,
    Graph,
    UnionFind,
    complete_graph,
    connected_components,
    cycle_graph,
    friendship_graph,
    is_connected,
    laplacian,
    parse_edge_list,
    reduced_laplacian,
    serialize_edge_list,
    subdivide,
)
from .matrix import (
    ExactMatrix,
    MatrixFormatError,
    Scalar,
    as_scalar,
    format_scalar,
    parse_matrix,
    parse_scalar,
    serialize_matrix,
)
from .spanning import (
    BRUTE_FORCE_EDGE_CAP,
    EngineConsistencyError,
    EntropyEstimate,
    entropy_estimate,
    entropy_limit,
    entropy_point,
    ln_tree_count,
    tau,
    tau_bruteforce,
    tau_closed_friendship,
    tau_closed_subdivided_friendship,
)

__version__ = "0.1.0"

__all__ = [
    "ENGINES",
    "BRUTE_FORCE_EDGE_CAP",
    "CornerMinors",
    "EdgeListFormatError",
    "EngineConsistencyError",
    "EngineKind",
    "EntropyEstimate",
    "ExactMatrix",
    "Graph",
    "MatrixFormatError",
    "Scalar",
    "UnionFind",
    "as_scalar",
    "complete_graph",
    "connected_components",
    "cycle_graph",
    "det",
    "det_bareiss",
    "det_chio",
    "det_cofactor",
    "det_dodgson",
    "det_salihu",
    "entropy_estimate",
    "entropy_limit",
    "entropy_point",
    "format_scalar",
    "friendship_graph",
    "is_connected",
    "laplacian",
    "ln_tree_count",
    "parse_edge_list",
    "parse_matrix",
    "parse_scalar",
    "reduced_laplacian",
    "salihu_minors",
    "serialize_edge_list",
    "serialize_matrix",
    "subdivide",
    "tau",
    "tau_bruteforce",
    "tau_closed_friendship",
    "tau_closed_subdivided_friendship",
    "__version__",
]
