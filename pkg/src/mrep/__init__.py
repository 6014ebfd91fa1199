"""M-representations and chain representations of convex polytopes, with
exact rational arithmetic and a brute-force oracle for checking results."""
from .errors import (
    AlphaOutOfRange,
    CapExceeded,
    DimensionMismatch,
    EmptyInput,
    InvalidArgument,
    KindMismatch,
    NotChainForm,
    ParseError,
    PolytopeError,
)
from .ops import (
    candidate_vertices_m,
    candidate_vertices_z,
    canonical_alpha,
    chain_from_points,
    chain_to_crep,
    chain_vertices,
    convex_hull_c,
    convex_hull_m,
    convex_hull_z,
    crep_to_mrep,
    evaluate_m,
    evaluate_z,
    linear_map_c,
    linear_map_m,
    linear_map_z,
    minkowski_m,
    minkowski_z,
    representation_size,
    to_chain_form,
)
from .oracle import (
    contains_point,
    convex_hull_oracle,
    hull_vertices,
    is_point_symmetric,
    minkowski_oracle,
    sets_equal,
)
from .representations import (
    Block,
    CRep,
    ExponentMatrix,
    MRep,
    Rational,
    SegmentList,
    VRep,
    ZRep,
)
from .zonotope import (
    ZonotopeDecomposition,
    detect_zonotope,
    find_maximal_zonotope_subset,
    reduce,
    reduce_vertices,
    zonotope_from_segments,
    zonotope_vertex_count,
)

__version__ = "0.1.0"
