"""
Power sums and the F_k sequence.

Ring elements are scalars (``GaussianRational`` / ``complex``) or ``Poly``;
every function here works with either.
"""

import math
from dataclasses import dataclass
from typing import Any, List, Sequence, Tuple

from twoarcs.algebra.poly import Poly
from twoarcs.algebra.polymat import PolyMat, polymat_det
from twoarcs.algebra.scalar import ONE, ScalarMode, coerce, mode_of
from twoarcs.newton.shapes import SystemShape


def ring_mode(values: Sequence[Any]) -> ScalarMode:
    """Scalar mode shared by a list of ring elements."""
    for v in values:
        m = v.mode if isinstance(v, Poly) else mode_of(v)
        if m is ScalarMode.APPROX:
            return ScalarMode.APPROX
    return ScalarMode.EXACT


def as_poly(value: Any, mode: ScalarMode) -> Poly:
    if isinstance(value, Poly):
        return value if value.mode is mode else value.to_approx()
    return Poly.constant(coerce(value, mode), mode)


@dataclass(frozen=True)
class SeqF:
    """F_0..F_K; indices outside that range read as zero."""

    values: Tuple[Any, ...]

    @property
    def K(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Any:
        if k < 0:
            return self.values[0] * 0
        if k > self.K:
            raise IndexError(f"F_{k} requested but only F_0..F_{self.K} computed")
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)


def power_sums(shape: SystemShape, endpoints: Sequence[Any], K: int) -> List[Any]:
    """
    s_1..s_K for the variant of ``shape``.

    Args:
        shape: System shape, fixes the sign pattern
        endpoints: ``(a, b, c, d)``; an unknown endpoint is passed as a Poly
        K: Number of power sums

    Returns:
        ``[s_1, ..., s_K]`` with ``s_k = 1/2 * sum(sign_j * e_j**k)``
    """
    if len(endpoints) != 4:
        raise ValueError(f"{shape.variant.value} needs 4 endpoints, got {len(endpoints)}")
    if K < 1:
        raise ValueError("K must be at least 1")
    signs = shape.signs
    powers = list(endpoints)
    sums: List[Any] = []
    for k in range(1, K + 1):
        total: Any = 0
        for sign, p in zip(signs, powers):
            total = total + p if sign > 0 else total - p
        sums.append(total / 2)
        if k < K:
            powers = [p * e for p, e in zip(powers, endpoints)]
    return sums


def f_sequence(s: Sequence[Any], unit: Any = ONE) -> SeqF:
    """
    F_0..F_K from s_1..s_K by ``k * F_k = -sum_{i=1..k} s_i * F_{k-i}``.

    ``unit`` is only used to type F_0 when ``s`` is empty.
    """
    if s:
        unit = s[0] * 0 + 1
    values: List[Any] = [unit]
    for k in range(1, len(s) + 1):
        acc = s[0] * values[k - 1]
        for i in range(2, k + 1):
            acc = acc + s[i - 1] * values[k - i]
        values.append(-acc / k)
    return SeqF(tuple(values))


def f_sequence_det(s: Sequence[Any], k: int) -> Any:
    """
    F_k as ``(-1)**k / k!`` times the determinant of the k x k matrix with
    s_1 on the diagonal, s_{r-c+1} below it and 1, 2, ..., k-1 above it.
    """
    if k == 0:
        return s[0] * 0 + 1 if s else ONE
    if k > len(s):
        raise ValueError(f"F_{k} needs s_1..s_{k}")
    mode = ring_mode(s[:k])
    rows = []
    for r in range(k):
        row = []
        for c in range(k):
            if c <= r:
                row.append(as_poly(s[r - c], mode))
            elif c == r + 1:
                row.append(Poly.constant(r + 1, mode))
            else:
                row.append(Poly.zero(mode))
        rows.append(row)
    mat = PolyMat.from_rows(rows, mode)
    det = polymat_det(mat, degree_bound=mat.degree_bound())
    value = det * (-1) ** k / math.factorial(k)
    if any(isinstance(x, Poly) for x in s[:k]):
        return value
    return value.coefficient(0)
