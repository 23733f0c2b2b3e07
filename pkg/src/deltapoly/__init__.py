"""Vertex-flip algebra on set systems, delta-matroid interlace polynomials,
GF(2) pivots on graphs, and Tutte diagonal identities."""

from .delta import (
    DivisibilityStatus,
    distance_triple,
    divisibility,
    is_delta_matroid,
    is_even,
    is_vf_closed,
)
from .errors import (
    CapExceededError,
    DeltaPolyError,
    DocumentError,
    GroundSetError,
    ImproperSystemError,
    NotAGraphError,
    PivotUndefinedError,
    PreconditionError,
    SizeGuardError,
)
from .gf2 import Gf2Matrix, det_nullity, ppt, schur_complement, support_set_system
from .graphs import (
    Graph,
    elementary_pivots,
    graph_flip,
    graph_poly,
    graph_to_system,
    local_complement,
    loopless_local_complement,
    marked_bracket,
    system_to_graph,
)
from .interlace import (
    MultiQPoly,
    UniPoly,
    evaluate,
    multivariate_Q,
    permute_Q_under_flip,
    poly_direct,
    specialize,
)
from .matroids import (
    BiPoly,
    Matroid,
    Representation,
    TutteEvalReport,
    bicycle_dimension,
    binary_matroid_from_matrix,
    dual_pivot_min_distance,
    fundamental_graph,
    rank_nullity,
    tutte,
    tutte_dc,
    tutte_diagonal_check,
    tutte_evaluations,
    uniform_matroid,
)
from .recursion import (
    ConsistencyReport,
    Q1_recursive,
    RecursionTrace,
    q1_multiplicative_step,
    q1_normal_step,
    q1_recursive,
    q2_edge_step,
    q2_q3_recursive,
    recursion_consistency,
)
from .setsystem import (
    GroundSet,
    SetSystem,
    SystemClass,
    VertexFlipWord,
    apply_vertex_flip,
    distance,
    full_flip_explicit,
    restrict_delete,
    vf_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "CapExceededError",
    "ConsistencyReport",
    "DeltaPolyError",
    "DivisibilityStatus",
    "DocumentError",
    "Gf2Matrix",
    "Graph",
    "GroundSet",
    "GroundSetError",
    "ImproperSystemError",
    "Matroid",
    "MultiQPoly",
    "NotAGraphError",
    "PivotUndefinedError",
    "PreconditionError",
    "Q1_recursive",
    "RecursionTrace",
    "Representation",
    "SetSystem",
    "SizeGuardError",
    "SystemClass",
    "TutteEvalReport",
    "UniPoly",
    "VertexFlipWord",
    "apply_vertex_flip",
    "bicycle_dimension",
    "binary_matroid_from_matrix",
    "det_nullity",
    "distance",
    "distance_triple",
    "divisibility",
    "dual_pivot_min_distance",
    "elementary_pivots",
    "evaluate",
    "full_flip_explicit",
    "fundamental_graph",
    "graph_flip",
    "graph_poly",
    "graph_to_system",
    "is_delta_matroid",
    "is_even",
    "is_vf_closed",
    "local_complement",
    "loopless_local_complement",
    "marked_bracket",
    "multivariate_Q",
    "permute_Q_under_flip",
    "poly_direct",
    "ppt",
    "q1_multiplicative_step",
    "q1_normal_step",
    "q1_recursive",
    "q2_edge_step",
    "q2_q3_recursive",
    "rank_nullity",
    "recursion_consistency",
    "restrict_delete",
    "schur_complement",
    "specialize",
    "support_set_system",
    "system_to_graph",
    "tutte",
    "tutte_dc",
    "tutte_diagonal_check",
    "tutte_evaluations",
    "uniform_matroid",
    "vf_orbit",
]
