"""Exact computation with tropical dual numbers, bend loci, and congruence varieties."""

from .arith import (
    EPS,
    INF,
    ONE,
    ZERO,
    DualValue,
    dual_add,
    dual_inverse,
    dual_mul,
    pi,
    trop_add,
    trop_mul,
    tv,
)
from .bend import bend_region, classical_variety_region, in_bend_locus, in_variety, variety_region
from .congruence import CongruencePair, congruence_region, satisfies, twisted_product
from .constructions import (
    Bounded,
    HalfspaceCongruence,
    RayToInfinity,
    UnrepresentableRegion,
    box_complement_ideal,
    congruence_to_dual_ideal,
    congruence_to_ideal,
    convex_to_ideal,
    dual_ideal_to_classical,
    halfspace_congruence_to_ideal,
    horizontal_embed,
    union_to_ideal,
)
from .parse import format_poly, parse_congruence, parse_dual, parse_poly, parse_polys
from .poly import DualPolynomial, SimpleTerm, poly_add, poly_eval, poly_mul, poly_pi, simple_terms
from .polyhedra import CoverUndecided, LinearConstraint, Polyhedron, contains_point, fm_eliminate, is_empty, region_covers
from .region import Region, region_equal, region_intersect, region_subset, region_union

__version__ = "0.1.0"
