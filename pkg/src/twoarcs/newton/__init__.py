"""Power sums, the F_k sequence and the Cramer form of the power-sum system."""

from twoarcs.newton.cramer import FMatrices, VPolynomial, build_F_matrices, recover_v_polynomial
from twoarcs.newton.identities import SeqF, f_sequence, f_sequence_det, power_sums
from twoarcs.newton.shapes import (
    LABELS,
    Parity,
    RoleAssignment,
    SystemShape,
    Variant,
    endpoint_variant,
    half_degree,
    x_variant,
    y_variant,
)

__all__ = [
    "FMatrices",
    "LABELS",
    "Parity",
    "RoleAssignment",
    "SeqF",
    "SystemShape",
    "VPolynomial",
    "Variant",
    "build_F_matrices",
    "endpoint_variant",
    "f_sequence",
    "f_sequence_det",
    "half_degree",
    "power_sums",
    "recover_v_polynomial",
    "x_variant",
    "y_variant",
]
