"""T_n-tuples: endpoint polynomial, extremal points, T_n / U_{n-2}, validation."""

from twoarcs.tuples.construct import (
    build_Tn,
    build_Tn_from_polys,
    chebyshev_t,
    chebyshev_u,
    compose_chebyshev,
    compose_double,
    pell_residual,
    pell_residual_norm,
    power_sum_system_residual,
)
from twoarcs.tuples.endpoint import (
    endpoint_degree_bound,
    endpoint_polynomial,
    max_tuple_count,
    normalize_polynomial,
)
from twoarcs.tuples.extremal import extremal_x_polynomial, extremal_y_polynomial, points_of
from twoarcs.tuples.models import (
    Candidate,
    Classification,
    EndpointCandidates,
    EndpointTuple,
    SolveOptions,
    TnTupleSolution,
)
from twoarcs.tuples.oracle import small_degree_oracle
from twoarcs.tuples.pipeline import (
    enumerate_tuples,
    is_half_degree_tuple,
    role_assignments,
    solve_fourth_endpoint,
    solve_tuple,
)

__all__ = [
    "Candidate",
    "Classification",
    "EndpointCandidates",
    "EndpointTuple",
    "SolveOptions",
    "TnTupleSolution",
    "build_Tn",
    "build_Tn_from_polys",
    "chebyshev_t",
    "chebyshev_u",
    "compose_chebyshev",
    "compose_double",
    "endpoint_degree_bound",
    "endpoint_polynomial",
    "enumerate_tuples",
    "extremal_x_polynomial",
    "extremal_y_polynomial",
    "is_half_degree_tuple",
    "max_tuple_count",
    "normalize_polynomial",
    "pell_residual",
    "pell_residual_norm",
    "points_of",
    "power_sum_system_residual",
    "role_assignments",
    "small_degree_oracle",
    "solve_fourth_endpoint",
    "solve_tuple",
]
