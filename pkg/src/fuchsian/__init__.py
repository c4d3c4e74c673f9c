"""Hyperbolic half-plane isometries, the universal cover of SL(2,R), and
Toledo invariants of surface-group representations."""

from .halfplane import (
    Classification,
    DegenerateDenominator,
    HPoint,
    IsometryClass,
    Mat2,
    NonPositiveScale,
    classify,
    classify_detailed,
    frobenius_distance,
    geodesic_midpoint,
    geodesic_points,
    hyp_distance,
    j_cocycle,
    mobius_act,
    path_length,
    rotation,
    scaling,
)
from .cover import (
    CoverElement,
    KernelValue,
    NotInKernel,
    cover_inv,
    cover_mul,
    kernel_value,
    lift,
    phi_at,
)
from .reps import (
    NonIntegral,
    RelationViolated,
    Representation,
    ToledoResult,
    branch_independence_check,
    goldman_fuchsian_test,
    milnor_check,
    reflect_conjugate,
    relation_product,
    relation_residual,
    toledo,
)
from .polygons import (
    GenusTooSmall,
    HyperbolicPolygon,
    PairingFailed,
    interior_angles,
    polygon_area,
    polygon_area_numeric,
    regular_polygon,
    side_pairings,
)
from .euclidean import LatticeGroup, commutator_check, reduce_point
from .repfile import format_rep, parse_rep, read_rep_file, write_rep_file

__version__ = "0.1.0"
