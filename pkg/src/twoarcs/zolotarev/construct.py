"""
Reconstruct Z_n from (alpha, beta) and check its extremal behaviour.

With X = prod(x - x_j) over the points where Z_n = +L and Y = prod(x - y_j)
over those where Z_n = -L:

    odd:   Z = (x - beta) X**2 + L           = (x - alpha)(x**2 - 1) Y**2 - L
    even:  Z = (x + 1)(x - beta) X**2 + L    = (x - alpha)(x - 1) Y**2 - L
"""

import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from twoarcs.algebra.poly import Poly
from twoarcs.algebra.scalar import ScalarMode
from twoarcs.newton.shapes import half_degree
from twoarcs.rootfind.aberth import all_roots
from twoarcs.tuples.construct import chebyshev_t, pell_holds
from twoarcs.tuples.extremal import extremal_x_polynomial, extremal_y_polynomial
from twoarcs.tuples.models import EndpointTuple
from twoarcs.utils.error_handler import DegenerateSystemError, ValidationError
from twoarcs.utils.logger import get_logger
from twoarcs.zolotarev.models import Equioscillation, Regime, ZolotarevOptions, ZolotarevSolution
from twoarcs.zolotarev.residuals import sigma_threshold, vieta_residual, zolotarev_residuals
from twoarcs.zolotarev.solver import solve_alpha_beta

logger = get_logger(__name__)

_APPROX = ScalarMode.APPROX


def _real_poly(p: Poly) -> Poly:
    return Poly([complex(c).real for c in p.coeffs], _APPROX)


def _real_points(p: Poly, expected: int, name: str, seed: int) -> List[float]:
    """Real roots of ``p`` in (-1, 1); ValidationError otherwise."""
    if p.degree != expected:
        raise ValidationError(f"{name}-polynomial has degree {p.degree}, expected {expected}")
    if expected == 0:
        return []
    points = []
    for z in all_roots(p, seed=seed).values():
        if abs(z.imag) > 1e-7 or not -1.0 < z.real < 1.0:
            raise ValidationError(f"{name}-point {z} is not inside (-1, 1)")
        points.append(float(z.real))
    return sorted(points)


def _representations(
    n: int, alpha: float, beta: float, X: Poly, Y: Poly
) -> Tuple[Tuple[Poly, float], Tuple[Poly, float]]:
    """(Z, L) from the x-form and from the y-form."""
    x = Poly.monomial(1, 1, _APPROX)
    if n % 2:
        L_x = 0.5 * (beta - alpha) * complex(X(alpha)).real ** 2
        Z_x = (x - beta) * X * X + L_x
        L_y = 0.5 * (beta - alpha) * (beta * beta - 1) * complex(Y(beta)).real ** 2
        Z_y = (x - alpha) * (x * x - 1) * Y * Y - L_y
    else:
        L_x = 0.5 * (alpha + 1) * (beta - alpha) * complex(X(alpha)).real ** 2
        Z_x = (x + 1) * (x - beta) * X * X + L_x
        L_y = 0.5 * (beta - alpha) * (beta - 1) * complex(Y(beta)).real ** 2
        Z_y = (x - alpha) * (x - 1) * Y * Y - L_y
    return (_real_poly(Z_x), L_x), (_real_poly(Z_y), L_y)


def _derivative_extrema(Z: Poly) -> List[float]:
    if Z.degree < 2:
        return []
    out = []
    for z in all_roots(Z.derivative()).values():
        if abs(z.imag) <= 1e-7 * max(1.0, abs(z.real)):
            out.append(float(z.real))
    return out


def _extrema_on(
    Z: Poly, L: float, lo: float, hi: float, critical: Sequence[float], tol: float
) -> List[Tuple[float, float]]:
    """Sorted (point, Z(point)) with |Z| = L within tol, among endpoints and critical points."""
    candidates = sorted({lo, hi, *(c for c in critical if lo <= c <= hi)})
    found: List[Tuple[float, float]] = []
    for x in candidates:
        value = complex(Z(complex(x))).real
        if abs(abs(value) - L) > tol * L:
            continue
        if found and abs(x - found[-1][0]) <= 1e-7 * max(1.0, abs(x)):
            continue
        found.append((x, value))
    return found


def verify_equioscillation(
    Z: Poly,
    L: float,
    alpha: float,
    beta: float,
    tol: float = 1e-6,
    samples: int = 2001,
) -> Equioscillation:
    """
    Count extremal points of Z on [-1, 1] and [alpha, beta].

    A point counts when |Z| = L within ``tol * L`` and it is an interval end
    or a real critical point. ``ok`` requires counts (n, 2), alternating signs
    along [-1, 1], and |Z| <= L (1 + tol) on a dense grid of both intervals.
    """
    n = Z.degree
    critical = _derivative_extrema(Z)
    inner = _extrema_on(Z, L, -1.0, 1.0, critical, tol)
    outer = _extrema_on(Z, L, alpha, beta, critical, tol) if alpha <= beta else []
    alternating = all(v0 * v1 < 0 for (_, v0), (_, v1) in zip(inner, inner[1:]))

    coeffs = np.array([complex(c).real for c in reversed(Z.coeffs)])
    bounded = True
    for lo, hi in ((-1.0, 1.0), (alpha, beta)):
        if hi < lo:
            continue
        grid = np.linspace(lo, hi, samples)
        if float(np.max(np.abs(np.polyval(coeffs, grid)))) > L * (1 + tol):
            bounded = False
    ok = len(inner) == n and len(outer) == 2 and alternating and bounded
    if not ok:
        logger.debug(
            f"equioscillation: inner={len(inner)}, outer={len(outer)}, "
            f"alternating={alternating}, bounded={bounded}"
        )
    return Equioscillation(len(inner), len(outer), ok)


def build_Zn(
    n: int,
    sigma: float,
    alpha: float,
    beta: float,
    options: Optional[ZolotarevOptions] = None,
) -> ZolotarevSolution:
    """
    Z_n, L_n and the extremal points for a solved (alpha, beta).

    The x- and y-points come from the Cramer forms of the tuple
    (alpha, 1, -1, beta); Z is built from both product forms, which must
    agree. T = Z / L and U = X Y / L are checked against the Pell equation.

    Raises:
        ValidationError: Representation mismatch, Pell failure or failed
            equioscillation
    """
    options = options or ZolotarevOptions()
    m = half_degree(n)
    tup = EndpointTuple.create(n, complex(alpha), 1.0, -1.0, complex(beta))
    try:
        x_poly = extremal_x_polynomial(n, tup)
        y_poly = extremal_y_polynomial(n, tup)
    except DegenerateSystemError as e:
        raise ValidationError(f"extremal points undefined at alpha={alpha}, beta={beta}: {e}")
    xs = _real_points(x_poly, m, "x", options.seed)
    ys = _real_points(y_poly, m - 1 if n % 2 else m, "y", options.seed)
    X = Poly.from_roots(xs, _APPROX)
    Y = Poly.from_roots(ys, _APPROX)

    (Z, L), (Z_alt, L_alt) = _representations(n, alpha, beta, X, Y)
    tol = options.representation_tol
    if not Z.is_close(Z_alt, tol) or abs(L - L_alt) > tol * max(1.0, abs(L)):
        raise ValidationError(
            f"the two representations of Z_{n} disagree (L={L:.17g} vs {L_alt:.17g})"
        )
    if L <= 0:
        raise ValidationError(f"non-positive deviation L={L:.17g}")

    T = Z / L
    U = X * Y / L
    pell_ok, pell_norm = pell_holds(T, U, tup, options.pell_tol)
    if not pell_ok:
        raise ValidationError(f"Pell residual {pell_norm:.3g} for Z_{n}/L")

    equi = verify_equioscillation(Z, L, alpha, beta, options.equioscillation_tol)
    if not equi.ok:
        raise ValidationError(
            f"Z_{n} does not equioscillate: {equi.inner} points on [-1, 1], "
            f"{equi.outer} on [alpha, beta]"
        )
    return ZolotarevSolution(
        n=n,
        sigma=sigma,
        alpha=alpha,
        beta=beta,
        L=L,
        Z=Z,
        xs=xs,
        ys=ys,
        residuals=zolotarev_residuals(n, sigma, alpha, beta),
        pell_residual_norm=pell_norm,
        vieta_residual=vieta_residual(n, sigma, alpha, ys),
        coefficient_error=abs(complex(Z.coefficient(n - 1)).real + n * sigma),
        equioscillation=equi,
    )


def chebyshev_regime_solution(n: int, sigma: float) -> ZolotarevSolution:
    """
    ``Z = ((1+sigma)**n / 2**(n-1)) T_n((x - sigma) / (1 + sigma))`` with
    ``L = (1+sigma)**n / 2**(n-1)``; its inverse image is [-1, 1 + 2 sigma].

    xs and ys are the Chebyshev extrema mapped into that interval.
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    L = (1 + sigma) ** n / 2 ** (n - 1)
    inner = Poly([-sigma / (1 + sigma), 1 / (1 + sigma)], _APPROX)
    Z = _real_poly(chebyshev_t(n, _APPROX).compose(inner) * L)
    extrema = [sigma + (1 + sigma) * math.cos(k * math.pi / n) for k in range(n + 1)]
    xs = sorted(e for k, e in enumerate(extrema) if k % 2 == 0)
    ys = sorted(e for k, e in enumerate(extrema) if k % 2 == 1)
    return ZolotarevSolution(
        n=n,
        sigma=sigma,
        alpha=None,
        beta=None,
        L=L,
        Z=Z,
        xs=xs,
        ys=ys,
        coefficient_error=abs(complex(Z.coefficient(n - 1)).real + n * sigma),
        regime=Regime.CHEBYSHEV,
    )


def solve_zolotarev(
    n: int,
    sigma: float,
    options: Optional[ZolotarevOptions] = None,
    allow_chebyshev: bool = False,
) -> ZolotarevSolution:
    """solve_alpha_beta followed by build_Zn; the Chebyshev regime only when allowed."""
    if allow_chebyshev and sigma <= sigma_threshold(n):
        logger.info(f"sigma={sigma} is in the Chebyshev regime for n={n}")
        return chebyshev_regime_solution(n, sigma)
    alpha, beta = solve_alpha_beta(n, sigma, options)
    return build_Zn(n, sigma, alpha, beta, options)
