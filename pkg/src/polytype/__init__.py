"""Polyhedral types of planar polynomial maps from pairs of Newton polytopes."""

from .geometry import (
    Polygon,
    contains,
    dim,
    face,
    hull,
    interior_count,
    lattice_length,
    lattice_points,
    minkowski,
    mixed_volume,
    normal_rays,
    polygon_from_obj,
    polygon_to_obj,
    primitive,
    rotate90,
    scale,
    shave,
    support_value,
    translate,
    volume,
)
from .newton import (
    PolytopePair,
    conical_det,
    delta_ind,
    is_conical,
    is_conical_pair,
    is_convenient,
    newton_number,
    pair_from_obj,
    pair_to_obj,
    with_origin,
)
from .enumeration import (
    EnumOptions,
    brute_force_polygons,
    conical_pairs,
    conical_polygons,
    enumerate_polygons,
    simplex_points,
)
from .polyhedral import (
    DegeneratePairError,
    InternalInconsistencyError,
    PairEdge,
    PolyhedralType,
    SigmaData,
    correction_term,
    delta_polytope,
    delta_rays,
    face_length,
    fan_polytope,
    gamma_polytopes,
    jacobian_support,
    lifted_polytope,
    lifted_support_polytope,
    pair_edges,
    psi,
    sigma_data,
)
from .census import CensusSummary, run_census

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
