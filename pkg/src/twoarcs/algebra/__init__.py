"""Exact and approximate scalars, dense polynomials, polynomial matrices."""

from twoarcs.algebra.parsing import (
    all_exact,
    format_real,
    format_scalar,
    parse_scalar,
    parse_scalar_list,
    poly_from_json,
    poly_to_json,
)
from twoarcs.algebra.poly import Poly, chebyshev_nodes, circle_nodes, poly_interpolate
from twoarcs.algebra.polymat import PolyMat, polymat_det
from twoarcs.algebra.scalar import (
    ONE,
    ZERO,
    GaussianRational,
    Scalar,
    ScalarMode,
    coerce,
    exact_context,
    in_exact_context,
    mode_of,
    to_approx,
    to_exact,
)

__all__ = [
    "GaussianRational",
    "ONE",
    "Poly",
    "PolyMat",
    "Scalar",
    "ScalarMode",
    "ZERO",
    "all_exact",
    "chebyshev_nodes",
    "circle_nodes",
    "coerce",
    "exact_context",
    "format_real",
    "format_scalar",
    "in_exact_context",
    "mode_of",
    "parse_scalar",
    "parse_scalar_list",
    "poly_from_json",
    "poly_interpolate",
    "poly_to_json",
    "polymat_det",
    "to_approx",
    "to_exact",
]
