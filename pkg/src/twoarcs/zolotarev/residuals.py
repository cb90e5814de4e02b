"""
The two equations that pin down (alpha, beta) for given (n, sigma).

With endpoints (a, b, c, d) = (alpha, 1, -1, beta):

- P1 is the endpoint expression ``sum D**(mu-i) det(FF_i)`` of the degree,
  so it vanishes exactly when the four points form a tuple.
- P2 is the Vieta relation for the y-points written through the Cramer
  determinants of the y-system: ``-2 det(FF_1) + (alpha [+1] - n sigma) det(FF)``.

Both are reported scaled, ``|sum t_i| / sum |t_i|`` over their terms.
"""

import math
from typing import Any, List, Sequence, Tuple

from twoarcs.algebra.poly import Poly
from twoarcs.algebra.polymat import polymat_det
from twoarcs.algebra.scalar import mode_of
from twoarcs.newton.cramer import build_F_matrices
from twoarcs.newton.identities import f_sequence, power_sums
from twoarcs.newton.shapes import LABELS, SystemShape, endpoint_variant, y_variant


def sigma_threshold(n: int) -> float:
    """``tan(pi/(2n))**2``; above it the inverse image has two arcs."""
    if n < 2:
        raise ValueError(f"degree must be at least 2, got {n}")
    return math.tan(math.pi / (2 * n)) ** 2


def zolotarev_points(alpha: Any, beta: Any) -> Tuple[Any, Any, Any, Any]:
    return (alpha, 1, -1, beta)


def _determinants(shape: SystemShape, points: Sequence[Any]) -> List[Any]:
    """det(FF), det(FF_1), ..., det(FF_mu); Polys when a point is a Poly."""
    s = power_sums(shape, points, shape.equations)
    mats = build_F_matrices(f_sequence(s), shape)
    polynomial = any(isinstance(p, Poly) for p in points)
    dets = []
    for mat in mats.all():
        det = polymat_det(mat, degree_bound=mat.degree_bound())
        dets.append(det if polynomial else det.coefficient(0))
    return dets


def endpoint_terms(n: int, alpha: Any, beta: Any) -> List[Any]:
    """Summands ``D**(mu-i) det(FF_i)`` of P1."""
    shape = SystemShape.create(n, endpoint_variant(n))
    points = zolotarev_points(alpha, beta)
    dets = _determinants(shape, points)
    D = points[LABELS.index(shape.distinguished)]
    return [dets[i] * D ** (shape.mu - i) for i in range(shape.mu + 1)]


def vieta_terms(n: int, sigma: Any, alpha: Any, beta: Any) -> List[Any]:
    """Summands of P2; for m = 1 (odd) or m = 0 (even) there are no y-points."""
    shape = SystemShape.create(n, y_variant(n))
    dets = _determinants(shape, zolotarev_points(alpha, beta))
    # separate summands: the scaled residual must see cancellation without y-points
    terms = [dets[0] * alpha, dets[0] * (-n * sigma)]
    if n % 2 == 0:
        terms.append(dets[0] * 1)
    if shape.mu >= 1:
        terms.append(dets[1] * -2)
    return terms


def _total(terms: Sequence[Any]) -> Any:
    acc = terms[0]
    for t in terms[1:]:
        acc = acc + t
    return acc


def _scaled(terms: Sequence[Any]) -> float:
    total = abs(complex(_total(terms)))
    size = sum(abs(complex(t)) for t in terms)
    return total / size if size else total


def raw_residuals(n: int, sigma: float, alpha: float, beta: float) -> Tuple[float, float]:
    """Unscaled (P1, P2) as reals."""
    p1 = complex(_total(endpoint_terms(n, complex(alpha), complex(beta))))
    p2 = complex(_total(vieta_terms(n, sigma, complex(alpha), complex(beta))))
    return p1.real, p2.real


def zolotarev_residuals(n: int, sigma: float, alpha: float, beta: float) -> Tuple[float, float]:
    """
    Scaled (|P1|, |P2|) at (alpha, beta).

    Both vanish at the solution of the Zolotarev problem; P1 alone vanishes
    on the whole curve of tuples (alpha, 1, -1, beta).
    """
    a, b = complex(alpha), complex(beta)
    return (_scaled(endpoint_terms(n, a, b)), _scaled(vieta_terms(n, sigma, a, b)))


def vieta_residual(n: int, sigma: float, alpha: float, ys: Sequence[float]) -> float:
    """``|2 sum y_j + alpha - n sigma|`` (odd) or ``|2 sum y_j + alpha + 1 - n sigma|`` (even)."""
    shift = 0 if n % 2 else 1
    return abs(2 * sum(ys) + alpha + shift - n * sigma)


def _beta_monomial(alpha: Any) -> Poly:
    return Poly.monomial(1, 1, mode_of(alpha))


def endpoint_polynomial_in_beta(n: int, alpha: Any) -> Poly:
    """P1(alpha, .) as a Poly in beta; exact for exact alpha."""
    return _total(endpoint_terms(n, alpha, _beta_monomial(alpha)))


def vieta_polynomial_in_beta(n: int, sigma: Any, alpha: Any) -> Poly:
    """P2(alpha, .) as a Poly in beta; exact for exact alpha and sigma."""
    total = _total(vieta_terms(n, sigma, alpha, _beta_monomial(alpha)))
    return total if isinstance(total, Poly) else Poly.constant(total, mode_of(alpha))
