"""
Solve P1 = P2 = 0 for the outer arc [alpha, beta].

The outer scan runs over alpha in a bracket derived from the Vieta
relation with every y_j inside (-1, 1). For each alpha the real roots of
P1(alpha, .) above alpha are candidate betas; ``g(alpha) = P2(alpha, beta(alpha))``
is then bisected with brentq and the pair polished by a damped Newton step
on (P1, P2).
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from twoarcs.newton.shapes import half_degree
from twoarcs.rootfind.aberth import real_roots_in
from twoarcs.utils.error_handler import DegenerateSystemError, NoSolutionError
from twoarcs.utils.logger import get_logger
from twoarcs.zolotarev.models import ZolotarevOptions
from twoarcs.zolotarev.residuals import (
    endpoint_polynomial_in_beta,
    raw_residuals,
    sigma_threshold,
    zolotarev_residuals,
)

logger = get_logger(__name__)


@dataclass
class ScanPoint:
    alpha: float
    betas: List[float]


class _Undefined(Exception):
    """No beta on the tracked branch for this alpha."""


def alpha_bracket(n: int, sigma: float, margin: float = 0.10) -> Tuple[float, float]:
    """
    Interval for alpha from ``2 sum y_j + alpha [+1] = n sigma`` with |y_j| < 1,
    widened by ``margin`` and clipped to alpha > 1.
    """
    m = half_degree(n)
    if n % 2:
        center, half = n * sigma, 2.0 * (m - 1)
    else:
        center, half = n * sigma - 1.0, 2.0 * m
    pad = margin * max(2.0 * half, 1.0)
    lo = max(center - half - pad, 1.0 + 1e-9)
    hi = center + half + pad
    if hi <= lo:
        raise NoSolutionError(f"empty alpha bracket for n={n}, sigma={sigma}")
    return lo, hi


def beta_candidates(n: int, alpha: float, seed: int = 0) -> List[float]:
    """Real roots of P1(alpha, .) strictly above alpha, ascending."""
    try:
        p = endpoint_polynomial_in_beta(n, complex(alpha))
    except DegenerateSystemError:
        return []
    if p.degree < 1:
        return []
    floor = alpha + 1e-12 * max(1.0, abs(alpha))
    return [b for b in real_roots_in(p, floor, math.inf, tol=1e-7, seed=seed) if b > floor]


def _branch(n: int, k: int, seed: int) -> Callable[[float], float]:
    def beta_of(alpha: float) -> float:
        betas = beta_candidates(n, alpha, seed)
        if len(betas) <= k:
            raise _Undefined(alpha)
        return betas[k]

    return beta_of


def _polish(
    n: int, sigma: float, alpha: float, beta: float, options: ZolotarevOptions
) -> Tuple[float, float]:
    """Damped Newton on (P1, P2) with a forward-difference Jacobian."""
    v = np.array([alpha, beta], dtype=float)

    def F(x: np.ndarray) -> np.ndarray:
        return np.array(raw_residuals(n, sigma, float(x[0]), float(x[1])))

    for step in range(options.newton_steps):
        if max(zolotarev_residuals(n, sigma, v[0], v[1])) <= options.inner_tol:
            break
        f0 = F(v)
        J = np.empty((2, 2))
        for j in range(2):
            h = 1e-7 * max(1.0, abs(v[j]))
            shifted = v.copy()
            shifted[j] += h
            J[:, j] = (F(shifted) - f0) / h
        try:
            delta = np.linalg.solve(J, -f0)
        except np.linalg.LinAlgError:
            logger.debug(f"singular Jacobian at alpha={v[0]:.17g}, beta={v[1]:.17g}")
            break
        size = np.linalg.norm(f0)
        lam = 1.0
        while lam > 1.0 / 64:
            trial = v + lam * delta
            if np.linalg.norm(F(trial)) < size:
                break
            lam /= 2
        else:
            break
        v = trial
        logger.debug(f"newton step {step}: alpha={v[0]:.17g}, beta={v[1]:.17g}, damping={lam}")
        if np.linalg.norm(lam * delta) <= 1e-16 * max(1.0, np.linalg.norm(v)):
            break
    return float(v[0]), float(v[1])


def _scan(n: int, alphas: np.ndarray, options: ZolotarevOptions) -> List[ScanPoint]:
    def run(alpha: float) -> ScanPoint:
        return ScanPoint(float(alpha), beta_candidates(n, float(alpha), options.seed))

    if options.workers > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            return list(pool.map(run, alphas))
    return [run(a) for a in alphas]


def _accepted(n: int, sigma: float, alpha: float, beta: float, options: ZolotarevOptions) -> bool:
    if not 1.0 < alpha < beta:
        return False
    return max(zolotarev_residuals(n, sigma, alpha, beta)) <= options.accept_tol


def solve_alpha_beta(
    n: int, sigma: float, options: Optional[ZolotarevOptions] = None
) -> Tuple[float, float]:
    """
    The unique pair 1 < alpha < beta solving P1 = P2 = 0.

    Args:
        n: Degree, at least 2
        sigma: Must exceed ``sigma_threshold(n)``
        options: Scan and tolerance settings

    Returns:
        (alpha, beta)

    Raises:
        NoSolutionError: sigma in the Chebyshev regime, or no accepted
            sign change of P2 along any beta branch
    """
    options = options or ZolotarevOptions()
    threshold = sigma_threshold(n)
    if sigma <= threshold:
        raise NoSolutionError(
            f"sigma={sigma} is at or below tan^2(pi/{2 * n})={threshold:.17g}: "
            "Chebyshev regime, the inverse image is a single interval"
        )
    lo, hi = alpha_bracket(n, sigma, options.margin)
    logger.debug(f"alpha bracket for n={n}, sigma={sigma}: [{lo:.17g}, {hi:.17g}]")
    scan = _scan(n, np.linspace(lo, hi, options.scan_points), options)
    branches = max((len(p.betas) for p in scan), default=0)

    for k in range(branches):
        beta_of = _branch(n, k, options.seed)
        values: List[Optional[float]] = []
        for point in scan:
            if len(point.betas) > k:
                values.append(raw_residuals(n, sigma, point.alpha, point.betas[k])[1])
            else:
                values.append(None)
        for i in range(len(scan) - 1):
            g0, g1 = values[i], values[i + 1]
            if g0 is None or g1 is None or g0 * g1 > 0:
                continue
            a0, a1 = scan[i].alpha, scan[i + 1].alpha
            logger.debug(f"branch {k}: sign change of P2 in [{a0:.17g}, {a1:.17g}]")
            try:
                if g0 == 0:
                    alpha = a0
                elif g1 == 0:
                    alpha = a1
                else:
                    alpha = brentq(
                        lambda a: raw_residuals(n, sigma, a, beta_of(a))[1],
                        a0,
                        a1,
                        xtol=1e-15,
                        rtol=4 * np.finfo(float).eps,
                    )
                beta = beta_of(alpha)
            except _Undefined:
                continue
            alpha, beta = _polish(n, sigma, alpha, beta, options)
            if _accepted(n, sigma, alpha, beta, options):
                return alpha, beta
            logger.debug(
                f"rejected alpha={alpha:.17g}, beta={beta:.17g}: "
                f"residuals {zolotarev_residuals(n, sigma, alpha, beta)}"
            )

    trace = ", ".join(
        f"{p.alpha:.6g}:{p.betas[0]:.6g}" if p.betas else f"{p.alpha:.6g}:-" for p in scan
    )
    raise NoSolutionError(
        f"no sign change of P2 accepted for n={n}, sigma={sigma} "
        f"(alpha in [{lo:.6g}, {hi:.6g}]; scan alpha:beta = {trace})"
    )
