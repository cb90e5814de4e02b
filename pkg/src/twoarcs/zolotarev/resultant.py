"""
Eliminate beta from P1 = P2 = 0 for rational sigma.

P1 and P2 are polynomials in beta whose coefficients are polynomials in
alpha. The coefficients are recovered by exact interpolation over integer
alpha samples; the Sylvester determinant is then a univariate polynomial in
alpha whose real roots include the alpha of the two-arc solution.
"""

from typing import Any, Callable, List

from twoarcs.algebra.poly import Poly, poly_interpolate
from twoarcs.algebra.polymat import PolyMat, polymat_det
from twoarcs.algebra.scalar import GaussianRational, ScalarMode, to_exact
from twoarcs.newton.shapes import SystemShape, y_variant
from twoarcs.tuples.endpoint import endpoint_degree_bound, normalize_polynomial
from twoarcs.utils.logger import get_logger
from twoarcs.zolotarev.residuals import endpoint_polynomial_in_beta, vieta_polynomial_in_beta

logger = get_logger(__name__)

_EXACT = ScalarMode.EXACT


def _bivariate(build: Callable[[GaussianRational], Poly], alpha_degree: int) -> List[Poly]:
    """Coefficients in beta (low to high), each a Poly in alpha."""
    samples = [GaussianRational(2 + j) for j in range(alpha_degree + 1)]
    in_beta = [build(a) for a in samples]
    beta_degree = max(p.degree for p in in_beta)
    return [
        poly_interpolate([(a, p.coefficient(k)) for a, p in zip(samples, in_beta)], _EXACT)
        for k in range(beta_degree + 1)
    ]


def sylvester_matrix(p: List[Poly], q: List[Poly]) -> PolyMat:
    """Sylvester matrix of two polynomials given by coefficient lists (low to high)."""
    d1, d2 = len(p) - 1, len(q) - 1
    size = d1 + d2
    zero = Poly.zero(_EXACT)
    rows = []
    for coeffs, count in ((p, d2), (q, d1)):
        for r in range(count):
            row = [zero] * size
            for i, c in enumerate(reversed(coeffs)):
                row[r + i] = c
            rows.append(row)
    return PolyMat.from_rows(rows, _EXACT)


def resultant_alpha_polynomial(n: int, sigma: Any) -> Poly:
    """
    Resultant of P1 and P2 with respect to beta, as a normalized Poly in alpha.

    Args:
        n: Degree, at least 2
        sigma: Rational sigma (int, Fraction or exact scalar)

    Raises:
        ExactnessError: sigma is not rational
    """
    sigma_exact = to_exact(sigma)
    y_shape = SystemShape.create(n, y_variant(n))
    p1 = _bivariate(lambda a: endpoint_polynomial_in_beta(n, a), endpoint_degree_bound(n))
    p2 = _bivariate(
        lambda a: vieta_polynomial_in_beta(n, sigma_exact, a), y_shape.mu * y_shape.nu + 1
    )
    logger.debug(f"resultant for n={n}: beta degrees {len(p1) - 1} and {len(p2) - 1}")
    if len(p1) + len(p2) == 2:
        return Poly.one(_EXACT)
    result = polymat_det(sylvester_matrix(p1, p2))
    return normalize_polynomial(result)


def alpha_is_resultant_root(resultant: Poly, alpha: float, tol: float = 1e-8) -> bool:
    """``|R(alpha)| <= tol * sum |r_k| |alpha|**k``."""
    approx = resultant.to_approx()
    value = abs(complex(approx(complex(alpha))))
    scale = sum(abs(complex(c)) * abs(alpha) ** k for k, c in enumerate(approx.coeffs))
    return value <= tol * max(scale, 1e-300)
