"""
T_n and U_{n-2} from a tuple and its extremal points, Pell verification,
and composition with Chebyshev polynomials.
"""

from typing import Any, List, Optional, Sequence, Tuple

from twoarcs.algebra.poly import Poly
from twoarcs.algebra.scalar import ScalarMode
from twoarcs.newton.shapes import half_degree
from twoarcs.tuples.models import EndpointTuple
from twoarcs.utils.error_handler import ValidationError
from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)


def pell_residual(T: Poly, U: Poly, tup: EndpointTuple) -> Poly:
    """``T**2 - H*U**2 - 1`` with ``H = (z-a)(z-b)(z-c)(z-d)``."""
    H = tup.H()
    if ScalarMode.APPROX in (H.mode, T.mode, U.mode):
        H, T, U = H.to_approx(), T.to_approx(), U.to_approx()
    return T * T - H * U * U - 1


def pell_residual_norm(T: Poly, U: Poly, tup: EndpointTuple) -> float:
    return pell_residual(T, U, tup).norm_inf()


def pell_holds(T: Poly, U: Poly, tup: EndpointTuple, tol: float) -> Tuple[bool, float]:
    """Exact test in exact mode; relative to ``max|T coeff|**2`` otherwise."""
    residual = pell_residual(T, U, tup)
    norm = residual.norm_inf()
    if residual.mode is ScalarMode.EXACT:
        return residual.is_zero, norm
    return norm <= tol * max(1.0, T.norm_inf()) ** 2, norm


def _counts(n: int) -> Tuple[int, int]:
    m = half_degree(n)
    return (m, m - 1) if n % 2 else (m, m)


def _product_forms(n: int, tup: EndpointTuple, X: Poly, Y: Poly) -> List[Poly]:
    """Both product representations of T_n that have nonzero denominators."""
    mode = X.mode
    a, b, c, d = tup.points
    z = Poly.monomial(1, 1, mode)
    one = Poly.one(mode)
    forms: List[Poly] = []
    if n % 2:
        plus_num = (z - d) * X * X
        plus_den = (a - d) * X(a) ** 2
        minus_num = (z - a) * (z - b) * (z - c) * Y * Y
        minus_den = (d - a) * (d - b) * (d - c) * Y(d) ** 2
    else:
        plus_num = (z - c) * (z - d) * X * X
        plus_den = (a - c) * (a - d) * X(a) ** 2
        minus_num = (z - a) * (z - b) * Y * Y
        minus_den = (c - a) * (c - b) * Y(c) ** 2
    if plus_den:
        forms.append(one - plus_num * 2 / plus_den)
    if minus_den:
        forms.append(minus_num * 2 / minus_den - one)
    return forms


def build_Tn_from_polys(
    n: int, tup: EndpointTuple, X: Poly, Y: Poly, tol: float = 1e-9
) -> Tuple[Poly, Poly]:
    """
    T_n and U_{n-2} from the monic polynomials whose roots are the x_j and y_j.

    Raises:
        ValidationError: Wrong extremal counts, both representations singular,
            or the two representations disagree
    """
    nx, ny = _counts(n)
    if X.degree != nx or Y.degree != ny:
        raise ValidationError(
            f"degree {n} needs {nx} x-points and {ny} y-points, got {X.degree} and {Y.degree}"
        )
    forms = _product_forms(n, tup, X, Y)
    if not forms:
        raise ValidationError("both product formulas for T_n are singular for this tuple")
    T = forms[0]
    if len(forms) == 2:
        other = forms[1]
        agree = T == other if T.mode is ScalarMode.EXACT else T.is_close(other, tol)
        if not agree:
            raise ValidationError("the two product representations of T_n disagree")
    if T.degree != n:
        raise ValidationError(f"T has degree {T.degree}, expected {n}")
    U = X * Y * T.leading
    return T, U


def build_Tn(
    n: int, tup: EndpointTuple, xs: Sequence[Any], ys: Sequence[Any], tol: float = 1e-9
) -> Tuple[Poly, Poly]:
    """
    T_n from both product formulas and ``U = lc(T) * prod(z-x_j) * prod(z-y_j)``.

    Args:
        n: Degree
        tup: Endpoint tuple
        xs: Points with T_n = +1 (m of them)
        ys: Points with T_n = -1 (m-1 for odd n, m for even n)
        tol: Agreement tolerance in approximate mode

    Returns:
        (T, U)
    """
    mode = tup.mode
    if any(isinstance(v, complex) for v in list(xs) + list(ys)):
        mode = ScalarMode.APPROX
        tup = tup.to_approx()
    X = Poly.from_roots(xs, mode)
    Y = Poly.from_roots(ys, mode)
    return build_Tn_from_polys(n, tup, X, Y, tol)


def power_sum_system_residual(
    n: int,
    tup: EndpointTuple,
    xs: Sequence[Any],
    ys: Sequence[Any],
    composed: bool = False,
) -> float:
    """
    Largest modulus of the power-sum system left-hand sides.

    ``sum x_j**k - sum y_j**k + 1/2 * sum(role_sign * e**k)`` over
    k = 1..n-1, where role_sign is +1 for endpoints with T_n = +1. Composed
    tuples have T_n = +1 at all four endpoints.
    """
    if composed:
        signs = (1, 1, 1, 1)
    elif n % 2:
        signs = (-1, -1, -1, 1)
    else:
        signs = (-1, -1, 1, 1)
    worst = 0.0
    for k in range(1, n):
        total: Any = 0
        for x in xs:
            total = total + x**k
        for y in ys:
            total = total - y**k
        for sign, e in zip(signs, tup.points):
            total = total + e**k * sign / 2
        worst = max(worst, abs(total))
    return float(worst)


def _half_h(T_half: Poly, U_half: Poly, tup: Optional[EndpointTuple], tol: float) -> None:
    if U_half.is_zero:
        raise ValidationError("U is identically zero")
    if tup is not None:
        ok, norm = pell_holds(T_half, U_half, tup, tol)
        if not ok:
            raise ValidationError(f"input pair fails its Pell check (residual {norm:.3g})")
        return
    H, rem = (T_half * T_half - 1).divrem(U_half * U_half)
    if rem.mode is ScalarMode.EXACT:
        small = rem.is_zero
    else:
        small = rem.norm_inf() <= tol * max(1.0, T_half.norm_inf()) ** 2
    if not small or H.degree != 4:
        raise ValidationError("input pair does not satisfy a Pell equation with a quartic H")


def chebyshev_t(k: int, mode: ScalarMode = ScalarMode.EXACT) -> Poly:
    """Chebyshev polynomial of the first kind by ``T_k = 2z T_{k-1} - T_{k-2}``."""
    prev, cur = Poly.one(mode), Poly.monomial(1, 1, mode)
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, cur * Poly.monomial(1, 2, mode) - prev
    return cur


def chebyshev_u(k: int, mode: ScalarMode = ScalarMode.EXACT) -> Poly:
    """Chebyshev polynomial of the second kind, ``U_0 = 1``, ``U_1 = 2z``."""
    prev, cur = Poly.one(mode), Poly.monomial(1, 2, mode)
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, cur * Poly.monomial(1, 2, mode) - prev
    return cur


def compose_chebyshev(
    T: Poly, U: Poly, k: int, tup: Optional[EndpointTuple] = None, tol: float = 1e-9
) -> Tuple[Poly, Poly]:
    """
    ``(T_k(T), U * U_{k-1}(T))``, a solution of degree k*n for the same endpoints.

    Raises:
        ValidationError: (T, U) is not itself a solution
    """
    if k < 1:
        raise ValueError("composition order must be positive")
    _half_h(T, U, tup, tol)
    T_new = chebyshev_t(k, T.mode).compose(T)
    U_new = U * chebyshev_u(k - 1, T.mode).compose(T)
    return T_new, U_new


def compose_double(
    T_half: Poly, U_half: Poly, tup: Optional[EndpointTuple] = None, tol: float = 1e-9
) -> Tuple[Poly, Poly]:
    """``T = 2 T_half**2 - 1``, ``U = 2 T_half U_half``, post-checked by the Pell identity."""
    T, U = compose_chebyshev(T_half, U_half, 2, tup, tol)
    if tup is not None:
        ok, norm = pell_holds(T, U, tup, tol)
        if not ok:
            raise ValidationError(f"composed pair fails the Pell check (residual {norm:.3g})")
    return T, U
