"""The Zolotarev problem: outer arc [alpha, beta], Z_n, L_n and checks."""

from twoarcs.zolotarev.construct import (
    build_Zn,
    chebyshev_regime_solution,
    solve_zolotarev,
    verify_equioscillation,
)
from twoarcs.zolotarev.models import Equioscillation, Regime, ZolotarevOptions, ZolotarevSolution
from twoarcs.zolotarev.residuals import sigma_threshold, vieta_residual, zolotarev_residuals
from twoarcs.zolotarev.resultant import alpha_is_resultant_root, resultant_alpha_polynomial
from twoarcs.zolotarev.solver import alpha_bracket, solve_alpha_beta

__all__ = [
    "Equioscillation",
    "Regime",
    "ZolotarevOptions",
    "ZolotarevSolution",
    "alpha_bracket",
    "alpha_is_resultant_root",
    "build_Zn",
    "chebyshev_regime_solution",
    "resultant_alpha_polynomial",
    "sigma_threshold",
    "solve_alpha_beta",
    "solve_zolotarev",
    "verify_equioscillation",
    "vieta_residual",
    "zolotarev_residuals",
]
