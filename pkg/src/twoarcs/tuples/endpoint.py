"""
The endpoint polynomial: given three endpoints, the fourth is a root of

    p = D**mu * det(FF) + D**(mu-1) * det(FF_1) + ... + det(FF_mu)

where the power sums use the endpoint variant of the degree and D is the
distinguished endpoint (d for odd degree, a for even degree). The unknown
endpoint enters the power sums as the monomial z, so p is a Poly in z.
"""

import math
from fractions import Fraction
from functools import reduce
from typing import Any, Dict, Mapping, Optional

from twoarcs.algebra.poly import Poly
from twoarcs.algebra.scalar import GaussianRational, ScalarMode, coerce, mode_of
from twoarcs.newton.cramer import recover_v_polynomial
from twoarcs.newton.identities import power_sums
from twoarcs.newton.shapes import LABELS, SystemShape, endpoint_variant
from twoarcs.utils.error_handler import DegenerateSystemError


def endpoint_degree_bound(n: int) -> int:
    """(n**2-1)/4 for odd n, n**2/4 for even n."""
    return (n * n - 1) // 4 if n % 2 else n * n // 4


def max_tuple_count(n: int) -> int:
    """At most n**2-1 (odd) or 3n**2/4 (even) tuples through three fixed points."""
    return n * n - 1 if n % 2 else 3 * n * n // 4


def distinguished_label(n: int) -> str:
    return "d" if n % 2 else "a"


_UNITS = (
    GaussianRational(1),
    GaussianRational(0, 1),
    GaussianRational(-1),
    GaussianRational(0, -1),
)


def normalize_polynomial(p: Poly) -> Poly:
    """
    Canonical scalar multiple of ``p``.

    Exact: Gaussian-integer coefficients with content 1 and leading
    coefficient in the quadrant re > 0, im >= 0. Approximate: monic.
    """
    if p.is_zero:
        return p
    if p.mode is ScalarMode.APPROX:
        return p.monic()
    parts = [part for c in p.coeffs for part in (c.re, c.im)]
    denom = reduce(math.lcm, (f.denominator for f in parts), 1)
    content = reduce(math.gcd, (int(f * denom) for f in parts), 0)
    scaled = p * Fraction(denom, content)
    lead = scaled.leading
    for unit in _UNITS:
        rotated = lead * unit
        if rotated.re > 0 and rotated.im >= 0:
            return scaled * unit
    return scaled


def _endpoint_values(known: Mapping[str, Any], unknown: str) -> Dict[str, Any]:
    if unknown not in LABELS:
        raise ValueError(f"unknown endpoint must be one of {', '.join(LABELS)}, got {unknown!r}")
    expected = set(LABELS) - {unknown}
    if set(known) != expected:
        raise ValueError(f"known endpoints must be exactly {sorted(expected)}, got {sorted(known)}")
    mode = ScalarMode.EXACT
    for v in known.values():
        if mode_of(v) is ScalarMode.APPROX:
            mode = ScalarMode.APPROX
    values: Dict[str, Any] = {label: coerce(v, mode) for label, v in known.items()}
    values[unknown] = Poly.monomial(1, 1, mode)
    return values


def endpoint_polynomial(
    n: int,
    known: Mapping[str, Any],
    unknown: Optional[str] = None,
    normalize: bool = True,
) -> Poly:
    """
    Polynomial in the unknown endpoint whose roots complete a tuple.

    Args:
        n: Degree, at least 2
        known: The three known endpoints keyed by label
        unknown: Label of the unknown endpoint (default d for odd n, a for even n)
        normalize: Return the canonical scalar multiple

    Returns:
        Poly of degree at most ``endpoint_degree_bound(n)``

    Raises:
        DegenerateSystemError: det(FF) or p vanishes identically
    """
    unknown = unknown or distinguished_label(n)
    values = _endpoint_values(known, unknown)
    shape = SystemShape.create(n, endpoint_variant(n))
    points = [values[label] for label in LABELS]
    radius = max([1.0] + [abs(complex(v)) for v in values.values() if not isinstance(v, Poly)])
    s = power_sums(shape, points, shape.equations)
    vpoly = recover_v_polynomial(s, shape, radius=radius)
    if isinstance(vpoly.det_base, Poly) and vpoly.det_base.is_zero:
        raise DegenerateSystemError("det FF vanishes identically for these known endpoints")
    p = vpoly.combine(values[shape.distinguished])
    if p.is_zero:
        raise DegenerateSystemError("the endpoint polynomial vanishes identically")
    return normalize_polynomial(p) if normalize else p
