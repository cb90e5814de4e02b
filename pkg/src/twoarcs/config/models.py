"""
Pydantic models for twoarcs configuration.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator

from twoarcs.algebra.scalar import ScalarMode
from twoarcs.tuples.models import SolveOptions
from twoarcs.zolotarev.models import ZolotarevOptions


class RootfindConfig(BaseModel):
    """Simultaneous root iteration."""

    tol: float = Field(default=1e-12, gt=0, description="Step tolerance of the root iteration")
    max_iter: int = Field(default=500, ge=1, description="Iteration budget per polynomial")
    cluster_factor: float = Field(default=1.0, gt=0, description="Multiplier on the cluster radius")


class TupleConfig(BaseModel):
    """Endpoint and extremal-point pipeline."""

    pell_tol: float = Field(default=1e-9, gt=0, description="Relative Pell residual bound")
    det_tol: float = Field(default=0.0, ge=0, description="Relative singularity bound of det FF")
    max_denominator: int = Field(
        default=10**6, ge=1, description="Denominator cap when snapping roots to rationals"
    )
    workers: int = Field(default=1, ge=1, description="Threads for enumerating role assignments")


class ZolotarevConfig(BaseModel):
    """Solver for the outer arc [alpha, beta]."""

    inner_tol: float = Field(default=1e-12, gt=0, description="Newton polish target")
    accept_tol: float = Field(default=1e-10, gt=0, description="Acceptance bound on scaled P1, P2")
    scan_points: int = Field(default=48, ge=3, description="Alpha samples in the outer scan")
    margin: float = Field(default=0.10, ge=0, description="Relative widening of the alpha bracket")
    newton_steps: int = Field(default=30, ge=0, description="Damped Newton steps")
    representation_tol: float = Field(
        default=1e-8, gt=0, description="Agreement of the two product forms of Z_n"
    )
    pell_tol: float = Field(default=1e-8, gt=0, description="Pell bound for Z_n / L_n")
    equioscillation_tol: float = Field(
        default=1e-6, gt=0, description="Relative tolerance on |Z| = L_n at extremal points"
    )
    workers: int = Field(default=1, ge=1, description="Threads for the alpha scan")


class PreimageConfig(BaseModel):
    """Sampling and rendering of the inverse image."""

    grid: int = Field(default=201, ge=2, description="Number of t values in [-1, 1]")
    tol: float = Field(default=1e-9, gt=0, description="Residual bound |T(z) - t|")
    join_tol: float = Field(default=1e-6, gt=0, description="Distance at which track ends join")
    svg_width: int = Field(default=800, ge=1, description="SVG width in pixels")
    svg_height: int = Field(default=600, ge=1, description="SVG height in pixels")


class RunConfig(BaseModel):
    """Resolved configuration of one command."""

    mode: Literal["exact", "approx", "auto"] = Field(default="auto", description="Scalar mode")
    tol: float = Field(default=1e-9, gt=0, description="Numerical tolerance")
    max_iter: int = Field(default=500, ge=1, description="Iteration budget")
    seed: int = Field(default=0, description="Seed for root-finder starts")
    output: Literal["json", "csv", "svg"] = Field(default="json", description="Output format")
    out: Optional[str] = Field(default=None, description="Output path (stdout when omitted)")
    exact_degree_cap: int = Field(
        default=12, ge=1, description="Largest degree for which auto mode stays exact"
    )
    rootfind: RootfindConfig = Field(default_factory=RootfindConfig)
    tuples: TupleConfig = Field(default_factory=TupleConfig)
    zolotarev: ZolotarevConfig = Field(default_factory=ZolotarevConfig)
    preimage: PreimageConfig = Field(default_factory=PreimageConfig)

    @field_validator("out")
    @classmethod
    def _blank_is_stdout(cls, value: Optional[str]) -> Optional[str]:
        return value or None

    def resolve_mode(self, inputs_exact: bool, n: int) -> ScalarMode:
        """
        Scalar mode for a run.

        ``auto`` is exact when every input is a Gaussian rational and
        ``n <= exact_degree_cap``.
        """
        if self.mode == "exact":
            return ScalarMode.EXACT
        if self.mode == "approx":
            return ScalarMode.APPROX
        if inputs_exact and n <= self.exact_degree_cap:
            return ScalarMode.EXACT
        return ScalarMode.APPROX

    def solve_options(self, promote: bool = False) -> SolveOptions:
        return SolveOptions(
            tol=self.tol,
            pell_tol=self.tuples.pell_tol,
            det_tol=self.tuples.det_tol,
            seed=self.seed,
            max_iter=self.max_iter,
            max_denominator=self.tuples.max_denominator,
            promote=promote,
            workers=self.tuples.workers,
        )

    def zolotarev_options(self) -> ZolotarevOptions:
        z = self.zolotarev
        return ZolotarevOptions(
            inner_tol=z.inner_tol,
            accept_tol=z.accept_tol,
            scan_points=z.scan_points,
            margin=z.margin,
            newton_steps=z.newton_steps,
            representation_tol=z.representation_tol,
            pell_tol=z.pell_tol,
            equioscillation_tol=z.equioscillation_tol,
            seed=self.seed,
            workers=z.workers,
        )
