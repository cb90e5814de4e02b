"""Polynomials whose roots are the extremal points x_j (T_n = +1) and y_j (T_n = -1)."""

from typing import List, Tuple

from twoarcs.algebra.poly import Poly
from twoarcs.algebra.scalar import Scalar, ScalarMode
from twoarcs.newton.cramer import recover_v_polynomial
from twoarcs.newton.identities import power_sums
from twoarcs.newton.shapes import SystemShape, Variant, x_variant, y_variant
from twoarcs.rootfind.aberth import all_roots, exact_roots
from twoarcs.tuples.models import EndpointTuple
from twoarcs.utils.error_handler import ExactnessError
from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)


def _extremal_polynomial(n: int, tup: EndpointTuple, variant: Variant, det_tol: float) -> Poly:
    shape = SystemShape.create(n, variant)
    s = power_sums(shape, tup.points, shape.equations)
    return recover_v_polynomial(s, shape, det_tol=det_tol).poly()


def extremal_y_polynomial(n: int, tup: EndpointTuple, det_tol: float = 0.0) -> Poly:
    """
    ``sum det(FF_i) * y**(mu-i)``; its roots are the y_j.

    Degree m-1 for odd n (d joins the x_j on the u-side) and m for even n
    (c joins the x_j).

    Raises:
        DegenerateSystemError: det(FF) = 0
    """
    return _extremal_polynomial(n, tup, y_variant(n), det_tol)


def extremal_x_polynomial(n: int, tup: EndpointTuple, det_tol: float = 0.0) -> Poly:
    """
    ``sum det(FF_i) * x**(mu-i)``; its roots are the x_j.

    Degree m for both parities; a joins the y_j on the u-side.

    Raises:
        DegenerateSystemError: det(FF) = 0
    """
    return _extremal_polynomial(n, tup, x_variant(n), det_tol)


def points_of(
    p: Poly, seed: int = 0, max_denominator: int = 10**6, promote: bool = True
) -> Tuple[List[Scalar], bool]:
    """
    Roots of ``p`` repeated by multiplicity, sorted.

    Exact polynomials give Gaussian rationals when every root is one;
    otherwise all roots come back approximate and the flag is False.

    Raises:
        ExactnessError: An exact polynomial has an irrational root and
            ``promote`` is False
    """
    if p.degree < 1:
        return [], True
    if p.mode is ScalarMode.EXACT:
        found = exact_roots(p, max_denominator=max_denominator, seed=seed)
        if found.complete:
            return [r for r, mult in found.roots for _ in range(mult)], True
        if not promote:
            raise ExactnessError(
                f"{found.remainder.degree} irrational extremal points (degree {p.degree}); "
                "use --mode auto or approx"
            )
        logger.info(f"irrational extremal points (degree {p.degree}); reported approximately")
    return all_roots(p.to_approx(), seed=seed).values(), False
