"""Exact geometry of lattice simplices with a single interior lattice point.

The package studies the family of full-dimensional lattice simplices whose
interior holds exactly one lattice point: the inequalities their
barycentric coordinates satisfy, the doubly exponential volume and
coordinate bounds those force, constructive certificates when the
inequalities fail, the extremal families that almost attain the bounds,
and a complete planar atlas.  All arithmetic is exact; floats never
appear.
"""

from .bounds import (
    ChainReport,
    InequalityReport,
    LowerBoundReport,
    LowerChainReport,
    PartitionRecord,
    SortedBarycentrics,
    chain_decompose,
    check_all_partitions,
    coordinate_lower_bounds,
    corpus_extremes,
    face_volume_bound,
    interior_coordinates,
    parallelotope_check,
    partition_matrix,
    partition_ratio,
    partition_slack,
    reduced_system,
    section_volume_check,
    sort_barycentric,
    unique_interior_point,
    zpw_lower_chain,
)
from .certificate import (
    AdmissibleWeights,
    SecondPointCertificate,
    find_admissible_weights,
    minkowski_solve,
    second_interior_point,
)
from .generators import (
    Atlas2D,
    AtlasClass,
    CanonicalForm,
    SylvesterSequence,
    canonical_examples,
    normal_form_2d,
    onepoint_triangle_atlas,
    sylvester,
    zpw_simplex,
)
from .points import (
    DEFAULT_CAP,
    BlichfeldtCheck,
    EnumerationCapError,
    InteriorCensus,
    PointClass,
    blichfeldt_check,
    classify_point,
    count_face_points,
    enumerate_interior,
    is_onepoint,
)
from .simplex import (
    LatticeSimplex,
    RatSimplex,
    SimplexParseError,
    barycentric_of,
    check_barycentric,
    face_of,
    linear_image,
    normalized_volume,
    parse_simplex_text,
    section_simplex,
    simplex_to_text,
    translate,
)

__version__ = "0.1.0"
