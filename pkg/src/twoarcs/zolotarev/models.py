"""Data types for the Zolotarev problem."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, NamedTuple, Optional, Tuple

from twoarcs.algebra.parsing import format_real, poly_to_json
from twoarcs.algebra.poly import Poly


class Regime(str, Enum):
    TWO_ARCS = "two_arcs"
    CHEBYSHEV = "chebyshev"


class Equioscillation(NamedTuple):
    """Extremal-point counts on [-1, 1] and [alpha, beta]."""

    inner: int
    outer: int
    ok: bool


@dataclass(frozen=True)
class ZolotarevOptions:
    """Tolerances and scan settings for the (alpha, beta) solver."""

    inner_tol: float = 1e-12
    accept_tol: float = 1e-10
    scan_points: int = 48
    margin: float = 0.10
    newton_steps: int = 30
    representation_tol: float = 1e-8
    pell_tol: float = 1e-8
    equioscillation_tol: float = 1e-6
    seed: int = 0
    workers: int = 1


@dataclass
class ZolotarevSolution:
    """
    Monic degree-n polynomial with z**(n-1) coefficient -n*sigma and least
    maximum modulus L on [-1, 1].

    In the two-arc regime its inverse image of [-L, L] is [-1, 1] and
    [alpha, beta]; in the Chebyshev regime it is the single interval
    [-1, 1 + 2*sigma] and alpha, beta are None.
    """

    n: int
    sigma: float
    alpha: Optional[float]
    beta: Optional[float]
    L: float
    Z: Poly
    xs: List[float] = field(default_factory=list)
    ys: List[float] = field(default_factory=list)
    residuals: Tuple[float, float] = (0.0, 0.0)
    pell_residual_norm: float = 0.0
    vieta_residual: float = 0.0
    coefficient_error: float = 0.0
    equioscillation: Optional[Equioscillation] = None
    regime: Regime = Regime.TWO_ARCS

    def as_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "n": self.n,
            "sigma": format_real(self.sigma),
            "regime": self.regime.value,
            "alpha": format_real(self.alpha),
            "beta": format_real(self.beta),
            "L_n": format_real(self.L),
            "Z": poly_to_json(self.Z),
            "xs": [format_real(x) for x in self.xs],
            "ys": [format_real(y) for y in self.ys],
            "residuals": {
                "P1": self.residuals[0],
                "P2": self.residuals[1],
                "pell": self.pell_residual_norm,
                "vieta": self.vieta_residual,
                "coefficient": self.coefficient_error,
            },
        }
        if self.equioscillation is not None:
            data["equioscillation"] = {
                "inner": self.equioscillation.inner,
                "outer": self.equioscillation.outer,
                "ok": self.equioscillation.ok,
            }
        return data
