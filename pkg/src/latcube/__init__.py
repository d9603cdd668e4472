"""latcube: exact-arithmetic lattice polytopes at desk scale.

Everything is computed over arbitrary-precision integers and rationals —
convex hulls, face lattices, normal fans, smoothness certificates,
combinatorial-cube labelings, prismatoid slices, and the two independent
integer-decomposition checkers.
"""

from .cubeface import (
    CubeStructure,
    FaceLabel,
    face_of,
    opposite,
    opposite_parallel_axes,
    parallel_facet_pair,
    recognize_cube,
    verify_parallel_propositions,
)
from .exactlat import (
    UnimodularMap,
    lattice_basis_check,
    primitive,
    primitive_direction,
    random_unimodular,
)
from .gen import (
    GenParams,
    GeneratedCube,
    fan_preserving_variant,
    gen_smooth_2cube,
    gen_smooth_cube,
    gen_smooth_cube_lift,
    gen_smooth_prism,
    reeve_simplex,
    scramble,
    skew_prismatoid_control,
)
from .idp import (
    IdpReport,
    idp_cube_pair,
    is_idp,
    is_idp_pair_bruteforce,
    is_idp_pair_regions,
    minkowski_sum,
)
from .polytope import (
    AffineEmbedding,
    FaceLattice,
    LemmaViolation,
    LinearSpan,
    NotDisjointError,
    Polytope,
    SeparationCertificate,
    VertexCone,
    apply_unimodular,
    dilate,
    fan_face_bijection,
    lattice_points,
    lin_span,
    minkowski_equivalent,
    negate,
    parallel,
    polytope_id,
    polytopes_intersect,
    separating_facet_hyperplane,
    translate,
    vertex_cones,
)
from .prismatoid import (
    PrismStructure,
    SliceDecomposition,
    detect_prismatoid,
    idp_via_slices,
    normalize_axis,
    slices,
    verify_slice_lemmas,
)
from .reports import TheoremReport
from .smooth import (
    SmoothnessResult,
    VertexStar,
    is_simple,
    is_smooth,
    standard_position,
    vertex_star,
)
from .verify import CLAIM_TEXT, THEOREM_IDS, verify_theorem

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
