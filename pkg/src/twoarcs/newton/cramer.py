"""
Cramer form of the power-sum system.

With ``F`` from the power sums, the v-side unknowns are the roots of
``v**mu * det(FF) + v**(mu-1) * det(FF_1) + ... + det(FF_mu)``, where ``FF``
is the mu x mu Toeplitz matrix ``FF[r][c] = F_{nu+r-c}`` and ``FF_i`` has
column i replaced by ``(-F_{nu+1}, ..., -F_{nu+mu})``.
"""

from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from twoarcs.algebra.poly import Poly
from twoarcs.algebra.polymat import PolyMat, polymat_det
from twoarcs.algebra.scalar import ScalarMode
from twoarcs.newton.identities import SeqF, as_poly, f_sequence, ring_mode
from twoarcs.newton.shapes import SystemShape
from twoarcs.utils.error_handler import DegenerateSystemError
from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class FMatrices:
    """``FF`` and ``FF_1..FF_mu`` for one shape."""

    base: PolyMat
    replaced: Tuple[PolyMat, ...]

    def all(self) -> List[PolyMat]:
        return [self.base, *self.replaced]


def build_F_matrices(F: SeqF, shape: SystemShape) -> FMatrices:
    """
    Build ``FF`` and the column-replaced ``FF_i``.

    Raises:
        ValueError: F does not reach index nu + mu
    """
    nu, mu = shape.nu, shape.mu
    if F.K < nu + mu:
        raise ValueError(f"need F_0..F_{nu + mu}, have F_0..F_{F.K}")
    mode = ring_mode(F.values)
    base_rows = [[as_poly(F[nu + r - c], mode) for c in range(mu)] for r in range(mu)]
    base = PolyMat.from_rows(base_rows, mode)
    rhs = [as_poly(-F[nu + 1 + r], mode) for r in range(mu)]
    replaced = tuple(base.with_column(i, rhs) for i in range(mu))
    return FMatrices(base, replaced)


@dataclass(frozen=True)
class VPolynomial:
    """
    ``det(FF), det(FF_1), ..., det(FF_mu)`` for one system.

    The determinants are Polys in an unknown endpoint when the power sums
    were polynomial, scalars otherwise.
    """

    shape: SystemShape
    dets: Tuple[Any, ...]
    polynomial_valued: bool
    mode: ScalarMode

    @property
    def det_base(self) -> Any:
        return self.dets[0]

    @property
    def det_magnitude(self) -> float:
        d = self.dets[0]
        if isinstance(d, Poly):
            return d.norm_inf()
        return abs(d)

    def poly(self) -> Poly:
        """``sum det(FF_i) * v**(mu-i)`` as a Poly in v (scalar determinants only)."""
        if self.polynomial_valued:
            raise TypeError("determinants are polynomials; use combine()")
        return Poly(list(reversed(self.dets)), self.mode)

    def monic(self) -> Poly:
        """``v**mu + Lambda_1 v**(mu-1) + ... + Lambda_mu``, ``Lambda_i = det FF_i / det FF``."""
        p = self.poly()
        if p.degree != self.shape.mu:
            raise DegenerateSystemError(
                f"det FF vanishes for {self.shape.variant.value}: u and v sets are not disjoint",
                det_magnitude=self.det_magnitude,
            )
        return p.monic()

    def combine(self, value: Any) -> Any:
        """``sum det(FF_i) * value**(mu-i)`` for a scalar or Poly ``value``."""
        acc: Any = self.dets[0]
        for d in self.dets[1:]:
            acc = acc * value + d
        return acc


def _det_bounds(shape: SystemShape, degree_per_index: int) -> List[int]:
    base = shape.mu * shape.nu * degree_per_index
    return [base + i * degree_per_index for i in range(shape.mu + 1)]


def recover_v_polynomial(
    s: Sequence[Any],
    shape: SystemShape,
    det_tol: float = 0.0,
    radius: float = 1.0,
) -> VPolynomial:
    """
    Determinants of the Cramer form for power sums ``s``.

    Args:
        s: s_1..s_{nu+mu}, all scalars or all Polys in one unknown
        shape: System shape
        det_tol: Relative size of det(FF) below which the system counts as singular
            (approximate scalar systems only)
        radius: Sampling radius for approximate polynomial determinants

    Returns:
        VPolynomial with det(FF) first

    Raises:
        DegenerateSystemError: det(FF) vanishes for scalar power sums
    """
    if len(s) < shape.equations:
        raise ValueError(f"{shape.variant.value} needs {shape.equations} power sums, got {len(s)}")
    s = list(s[: shape.equations])
    mode = ring_mode(s)
    polynomial_valued = any(isinstance(x, Poly) for x in s)
    F = f_sequence(s)
    mats = build_F_matrices(F, shape)

    if polynomial_valued:
        per_index = max(
            (
                -(-p.degree // k)
                for k, p in enumerate(s, 1)
                if isinstance(p, Poly) and p.degree > 0
            ),
            default=1,
        )
        bounds = _det_bounds(shape, per_index)
        dets: Tuple[Any, ...] = tuple(
            polymat_det(mat, degree_bound=bound, radius=radius)
            for mat, bound in zip(mats.all(), bounds)
        )
    else:
        dets = tuple(polymat_det(mat, degree_bound=0).coefficient(0) for mat in mats.all())

    result = VPolynomial(shape, dets, polynomial_valued, mode)
    if not polynomial_valued:
        scale = max([1.0] + [abs(F[k]) for k in range(shape.equations + 1)]) ** max(shape.mu, 1)
        if (mode is ScalarMode.EXACT and not dets[0]) or (
            mode is ScalarMode.APPROX and abs(dets[0]) <= det_tol * scale
        ):
            logger.warning(f"singular Cramer system for {shape.variant.value} (n={shape.n})")
            raise DegenerateSystemError(
                f"det FF = 0 for {shape.variant.value}: u and v sets are not disjoint",
                det_magnitude=result.det_magnitude,
            )
    return result
