"""Continuation sampling of T^-1([-1, 1])."""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from twoarcs.algebra.poly import Poly
from twoarcs.rootfind.aberth import all_roots
from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class PreimageSample:
    """The n roots of T(z) = t, ordered consistently with the previous sample."""

    t: float
    roots: List[complex] = field(default_factory=list)
    max_residual: float = 0.0
    converged: bool = True


def chebyshev_grid(count: int) -> List[float]:
    """``-cos(k pi / (count-1))``, k = 0..count-1: from -1 to 1, denser near the ends."""
    if count < 2:
        raise ValueError(f"grid needs at least 2 points, got {count}")
    return [float(-np.cos(k * np.pi / (count - 1))) for k in range(count)]


def match_tracks(previous: Sequence[complex], current: Sequence[complex]) -> List[complex]:
    """Reorder ``current`` so entry j is the root closest to ``previous[j]`` overall."""
    prev = np.asarray(previous, dtype=complex)
    cur = np.asarray(current, dtype=complex)
    cost = np.abs(prev[:, None] - cur[None, :])
    rows, cols = linear_sum_assignment(cost)
    ordered: List[Optional[complex]] = [None] * len(previous)
    for r, c in zip(rows, cols):
        ordered[r] = complex(cur[c])
    return [z for z in ordered if z is not None]


def sample_preimage(
    T: Poly,
    grid: int = 201,
    tol: float = 1e-9,
    seed: int = 0,
    max_iter: int = 500,
    root_tol: float = 1e-12,
    cluster_factor: float = 1.0,
) -> List[PreimageSample]:
    """
    Solve T(z) = t on a Chebyshev grid of t in [-1, 1].

    Each solve is warm-started from the previous roots and the new roots are
    matched to the old ones, so ``roots[j]`` over all samples is one track.

    Args:
        T: Polynomial of degree n >= 1
        grid: Number of t values, at least 2
        tol: Residual bound |T(z) - t| for every emitted point
        seed: Seed of the first (cold) root solve
        max_iter: Iteration budget per solve
        root_tol: Step tolerance of the root iteration
        cluster_factor: Multiplier on the root cluster radius

    Returns:
        One PreimageSample per t, each with n roots
    """
    if T.degree < 1:
        raise ValueError("preimage sampling needs a polynomial of degree >= 1")
    P = T.to_approx()
    coeffs = np.array([complex(c) for c in reversed(P.coeffs)])
    samples: List[PreimageSample] = []
    previous: Optional[List[complex]] = None
    for t in chebyshev_grid(grid):
        found = all_roots(
            P - t,
            tol=root_tol,
            max_iter=max_iter,
            seed=seed,
            initial=previous,
            cluster_factor=cluster_factor,
        )
        roots = found.values()
        if previous is not None:
            roots = match_tracks(previous, roots)
        residual = max(float(abs(np.polyval(coeffs, z) - t)) for z in roots)
        if not found.converged or residual > tol:
            logger.warning(f"t={t:.17g}: residual {residual:.3g}, converged={found.converged}")
        samples.append(PreimageSample(t, roots, residual, found.converged and residual <= tol))
        previous = roots
    return samples
