"""
Simultaneous complex root finding (Aberth-Ehrlich) with multiplicity clustering.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from twoarcs.algebra.poly import Poly
from twoarcs.algebra.scalar import GaussianRational, ScalarMode, scalar_key
from twoarcs.utils.error_handler import ConvergenceError
from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)

_EPS = np.finfo(float).eps


@dataclass
class Root:
    """One distinct root with its cluster multiplicity."""

    value: complex
    multiplicity: int
    residual: float


@dataclass
class RootSet:
    """All roots of one polynomial."""

    roots: List[Root]
    degree: int
    converged: bool = True
    iterations: int = 0

    def values(self) -> List[complex]:
        """Root values repeated by multiplicity."""
        out: List[complex] = []
        for r in self.roots:
            out.extend([r.value] * r.multiplicity)
        return out

    def distinct(self) -> List[complex]:
        return [r.value for r in self.roots]

    @property
    def max_residual(self) -> float:
        return max((r.residual for r in self.roots), default=0.0)


def _as_array(p: Poly) -> np.ndarray:
    """Coefficients high-to-low as a complex numpy array."""
    return np.array([complex(c) for c in reversed(p.coeffs)], dtype=complex)


def _initial_guesses(
    monic: np.ndarray, degree: int, rng: np.random.Generator, initial: Optional[Sequence[complex]]
) -> np.ndarray:
    if initial is not None and len(initial) == degree:
        z = np.array(initial, dtype=complex)
        # identical starts never separate
        scale = max(1.0, float(np.max(np.abs(z))))
        for i in range(degree):
            for j in range(i):
                if abs(z[i] - z[j]) <= 1e-10 * scale:
                    z[i] += scale * 1e-7 * complex(rng.standard_normal(), rng.standard_normal())
                    break
        return z
    radius = 1.0 + float(np.max(np.abs(monic[1:]))) if degree else 1.0
    angles = 2 * math.pi * np.arange(degree) / degree + 0.4 + rng.uniform(-0.1, 0.1, degree)
    return radius * np.exp(1j * angles)


def _aberth(
    coeffs: np.ndarray, z: np.ndarray, tol: float, max_iter: int
) -> Tuple[np.ndarray, bool, int]:
    deriv = np.polyder(coeffs)
    abs_coeffs = np.abs(coeffs)
    degree = len(z)
    active = np.ones(degree, dtype=bool)
    for it in range(1, max_iter + 1):
        pv = np.polyval(coeffs, z)
        dpv = np.polyval(deriv, z)
        scale = np.polyval(abs_coeffs, np.abs(z))
        small = np.abs(pv) <= 4 * _EPS * scale
        active &= ~small
        if not active.any():
            return z, True, it
        with np.errstate(divide="ignore", invalid="ignore"):
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            ratio = pv / dpv
            w = ratio / (1.0 - ratio * inv.sum(axis=1))
        bad = ~np.isfinite(w)
        if bad.any():
            w[bad] = 1e-3 * (1.0 + np.abs(z[bad]))
        step = np.where(active, w, 0.0)
        z = z - step
        if np.all(np.abs(step) <= tol * np.maximum(1.0, np.abs(z))):
            return z, True, it
    return z, False, max_iter


def _cluster(values: np.ndarray, radius: float) -> List[List[int]]:
    parent = list(range(len(values)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(values)):
        for j in range(i):
            if abs(values[i] - values[j]) <= radius:
                parent[find(i)] = find(j)
    groups: dict = {}
    for i in range(len(values)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _polish(coeffs: np.ndarray, z0: complex, multiplicity: int, steps: int = 5) -> complex:
    """Newton on the (k-1)-th derivative, which has a simple root at a k-fold root."""
    target = coeffs
    for _ in range(multiplicity - 1):
        target = np.polyder(target)
    d_target = np.polyder(target)
    z = z0
    best = abs(np.polyval(target, z))
    for _ in range(steps):
        dv = np.polyval(d_target, z)
        if dv == 0:
            break
        cand = z - np.polyval(target, z) / dv
        val = abs(np.polyval(target, cand))
        if not np.isfinite(val) or val >= best:
            break
        z, best = cand, val
    return complex(z)


def all_roots(
    p: Poly,
    tol: float = 1e-12,
    max_iter: int = 500,
    seed: int = 0,
    initial: Optional[Sequence[complex]] = None,
    cluster_factor: float = 1.0,
    strict: bool = False,
) -> RootSet:
    """
    All complex roots of ``p`` with multiplicities.

    Args:
        p: Polynomial of degree >= 1 (exact input is converted)
        tol: Step tolerance; the cluster radius is ``sqrt(tol)`` times the root bound
        max_iter: Iteration budget
        seed: Seed for the angular jitter of the starting circle
        initial: Optional warm-start iterates, one per root
        cluster_factor: Multiplier on the cluster radius
        strict: Raise ``ConvergenceError`` instead of flagging non-convergence

    Returns:
        RootSet sorted by (real part, imaginary part)
    """
    if p.degree < 1:
        raise ValueError("root finding needs a polynomial of degree >= 1")
    coeffs = _as_array(p)
    max_coeff = float(np.max(np.abs(coeffs)))
    lead = 0
    while lead < p.degree and abs(coeffs[lead]) < tol * max_coeff:
        lead += 1
    if lead:
        logger.debug(f"dropping {lead} numerically zero leading coefficients")
        coeffs = coeffs[lead:]
    degree = len(coeffs) - 1
    if degree < 1:
        raise ValueError("polynomial is numerically constant")
    zero_mult = 0
    while zero_mult < degree and coeffs[degree - zero_mult] == 0:
        zero_mult += 1
    work = coeffs[: degree + 1 - zero_mult] / coeffs[0]
    inner_degree = degree - zero_mult

    rng = np.random.default_rng(seed)
    z = np.zeros(0, dtype=complex)
    converged, iterations = True, 0
    if inner_degree:
        warm = None
        if initial is not None:
            warm = [w for w in initial if w != 0][:inner_degree] if zero_mult else list(initial)
        z = _initial_guesses(work, inner_degree, rng, warm)
        z, converged, iterations = _aberth(work, z, tol, max_iter)

    bound = 1.0 + float(np.max(np.abs(work[1:]))) if inner_degree else 1.0
    radius = cluster_factor * math.sqrt(tol) * bound
    groups = _cluster(z, radius) if inner_degree else []

    roots: List[Root] = []
    scale = max(1.0, max_coeff)
    for group in groups:
        k = len(group)
        centre = complex(np.mean(z[group]))
        value = _polish(coeffs, centre, k)
        residual = float(abs(np.polyval(coeffs, value))) / scale
        roots.append(Root(value, k, residual))
    if zero_mult:
        roots.append(Root(0j, zero_mult, 0.0))
    roots.sort(key=lambda r: scalar_key(r.value))

    result = RootSet(roots, degree, converged, iterations)
    if not converged:
        logger.warning(f"root finder stopped after {iterations} iterations (degree {degree})")
        if strict:
            raise ConvergenceError(f"root finder did not converge for degree {degree}")
    return result


def real_roots_in(
    p: Poly,
    lo: float,
    hi: float,
    tol: float = 1e-9,
    seed: int = 0,
    max_iter: int = 500,
) -> List[float]:
    """Distinct roots with ``|imag| <= tol * max(1, |re|)`` and real part in [lo, hi]."""
    found = all_roots(p, max_iter=max_iter, seed=seed)
    out = []
    for r in found.roots:
        v = r.value
        if abs(v.imag) <= tol * max(1.0, abs(v.real)) and lo <= v.real <= hi:
            out.append(float(v.real))
    return sorted(out)


@dataclass
class ExactRoots:
    """Gaussian-rational roots split off exactly, and the cofactor that is left."""

    roots: List[Tuple[GaussianRational, int]] = field(default_factory=list)
    remainder: Optional[Poly] = None

    @property
    def complete(self) -> bool:
        return self.remainder is None or self.remainder.degree <= 0


def _snap(value: float, max_denominator: int) -> Fraction:
    return Fraction(value).limit_denominator(max_denominator)


def exact_roots(p: Poly, max_denominator: int = 10**6, seed: int = 0) -> ExactRoots:
    """
    Split every Gaussian-rational root off an exact polynomial.

    Numeric roots are snapped to nearby rationals and kept only when the
    exact polynomial vanishes there; each accepted root is divided out
    exactly, so multiplicities are exact.
    """
    if p.mode is not ScalarMode.EXACT:
        raise ValueError("exact root extraction needs an exact polynomial")
    result = ExactRoots(remainder=p)
    if p.degree < 1:
        return result
    remainder = p
    if p.degree == 1:
        root = -p.coeffs[0] / p.coeffs[1]
        return ExactRoots([(root, 1)], Poly.one(ScalarMode.EXACT) * p.leading)

    numeric = all_roots(p.to_approx(), seed=seed)
    found: List[Tuple[GaussianRational, int]] = []
    for r in numeric.roots:
        cand = GaussianRational(
            _snap(r.value.real, max_denominator), _snap(r.value.imag, max_denominator)
        )
        if any(cand == f for f, _ in found):
            continue
        mult = 0
        factor = Poly([-cand, 1], ScalarMode.EXACT)
        while remainder.degree >= 1 and not remainder(cand):
            remainder = remainder.exact_quotient(factor)
            mult += 1
        if mult:
            found.append((cand, mult))
    found.sort(key=lambda item: scalar_key(item[0]))
    return ExactRoots(found, remainder)
