"""
Hard-coded endpoint and extremal-point equations for degrees 2, 3 and 4.

Every function works on scalars or on Polys, so an equation can also be
read as a polynomial in one unknown.
"""

from typing import Any, Callable, Dict, Optional, Tuple

from twoarcs.utils.error_handler import ValidationError


def _endpoint_2(a: Any, b: Any, c: Any, d: Any) -> Any:
    return a + b - c - d


def _endpoint_3(a: Any, b: Any, c: Any, d: Any) -> Any:
    return (
        a * a - 2 * a * b + b * b - 2 * a * c - 2 * b * c + c * c
        + 2 * a * d + 2 * b * d + 2 * c * d - 3 * d * d
    )


def _x_3(a: Any, b: Any, c: Any, d: Any, x: Any) -> Any:
    slope = -4 * a + 4 * b + 4 * c - 4 * d
    const = (
        a * a + 2 * a * b - 3 * b * b + 2 * a * c - 2 * b * c - 3 * c * c
        - 2 * a * d + 2 * b * d + 2 * c * d + d * d
    )
    return x * slope + const


def _endpoint_4(a: Any, b: Any, c: Any, d: Any) -> Any:
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    a3, b3, c3, d3 = a2 * a, b2 * b, c2 * c, d2 * d
    return (
        a2 * a2 + 4 * a3 * b - 10 * a2 * b2 + 4 * a * b3 + b2 * b2
        - 4 * a3 * c + 4 * a2 * b * c + 4 * a * b2 * c - 4 * b3 * c + 6 * a2 * c2
        - 4 * a * b * c2 + 6 * b2 * c2 - 4 * a * c3 - 4 * b * c3 + c2 * c2
        - 4 * a3 * d + 4 * a2 * b * d + 4 * a * b2 * d - 4 * b3 * d - 4 * a2 * c * d
        - 8 * a * b * c * d - 4 * b2 * c * d + 4 * a * c2 * d + 4 * b * c2 * d + 4 * c3 * d
        + 6 * a2 * d2 - 4 * a * b * d2 + 6 * b2 * d2
        + 4 * a * c * d2 + 4 * b * c * d2 - 10 * c2 * d2 - 4 * a * d3 - 4 * b * d3
        + 4 * c * d3 + d2 * d2
    )


def _y_4(a: Any, b: Any, c: Any, d: Any, y: Any) -> Any:
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    slope = (
        -2 * a2 + 4 * a * b - 2 * b2 + 4 * a * c + 4 * b * c - 2 * c2
        - 4 * a * d - 4 * b * d - 4 * c * d + 6 * d2
    )
    const = (
        a2 * a - a2 * b - a * b2 + b2 * b - a2 * c + 2 * a * b * c - b2 * c - a * c2
        - b * c2 + c2 * c + a2 * d - 2 * a * b * d + b2 * d - 2 * a * c * d
        - 2 * b * c * d + c2 * d + 3 * a * d2 + 3 * b * d2 + 3 * c * d2 - 5 * d2 * d
    )
    return y * slope + const


def _x_4(a: Any, b: Any, c: Any, d: Any, x: Any) -> Any:
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    slope = (
        -2 * a2 - 4 * a * b + 6 * b2 + 4 * a * c - 4 * b * c - 2 * c2
        + 4 * a * d - 4 * b * d + 4 * c * d - 2 * d2
    )
    const = (
        a2 * a + a2 * b + 3 * a * b2 - 5 * b2 * b - a2 * c - 2 * a * b * c + 3 * b2 * c
        - a * c2 + b * c2 + c2 * c - a2 * d - 2 * a * b * d + 3 * b2 * d + 2 * a * c * d
        - 2 * b * c * d - c2 * d - a * d2 + b * d2 - c * d2 + d2 * d
    )
    return x * slope + const


_ENDPOINT: Dict[int, Callable[..., Any]] = {2: _endpoint_2, 3: _endpoint_3, 4: _endpoint_4}
_EXTREMAL: Dict[Tuple[int, str], Callable[..., Any]] = {
    (3, "x"): _x_3,
    (4, "x"): _x_4,
    (4, "y"): _y_4,
}

ORACLE_KINDS = ("endpoint", "x", "y")


def small_degree_oracle(
    n: int, a: Any, b: Any, c: Any, d: Any, kind: str = "endpoint", at: Optional[Any] = None
) -> Any:
    """
    Evaluate the explicit small-degree equation at ``(a, b, c, d)``.

    Args:
        n: Degree 2, 3 or 4
        a, b, c, d: Endpoints in the role order of the degree
        kind: ``endpoint`` for the tuple equation, ``x`` or ``y`` for an
            extremal-point equation (n=3: x only; n=4: x and y)
        at: The extremal point, required for ``x`` and ``y``

    Returns:
        The residual; zero exactly when the equation holds

    Raises:
        ValidationError: Unsupported degree or kind
    """
    if kind == "endpoint":
        if n not in _ENDPOINT:
            raise ValidationError(f"no explicit endpoint equation for degree {n}")
        return _ENDPOINT[n](a, b, c, d)
    if kind not in ORACLE_KINDS or (n, kind) not in _EXTREMAL:
        raise ValidationError(f"no explicit {kind}-equation for degree {n}")
    if at is None:
        raise ValidationError(f"the {kind}-equation needs the extremal point")
    return _EXTREMAL[(n, kind)](a, b, c, d, at)
