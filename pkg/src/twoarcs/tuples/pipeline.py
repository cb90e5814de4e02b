"""
The four-step procedure: fourth endpoint, y_j, x_j, then T_n and U_{n-2},
with Pell validation of every candidate and the half-degree composition
branch for even degree.
"""

from concurrent.futures import ThreadPoolExecutor
from contextlib import nullcontext
from dataclasses import replace
from typing import Any, ContextManager, Dict, List, Mapping, Optional, Sequence, Tuple

from twoarcs.algebra.poly import Poly
from twoarcs.algebra.scalar import ScalarMode, exact_context, scalar_key
from twoarcs.rootfind.aberth import all_roots, exact_roots
from twoarcs.tuples.construct import (
    build_Tn_from_polys,
    compose_double,
    pell_holds,
    power_sum_system_residual,
)
from twoarcs.tuples.endpoint import distinguished_label, endpoint_polynomial
from twoarcs.tuples.extremal import extremal_x_polynomial, extremal_y_polynomial, points_of
from twoarcs.tuples.models import (
    Candidate,
    Classification,
    EndpointCandidates,
    EndpointTuple,
    SolveOptions,
    TnTupleSolution,
    coincide,
)
from twoarcs.utils.error_handler import DegenerateSystemError, ExactnessError, ValidationError
from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_OPTIONS = SolveOptions()

# failures that mean "this tuple is not a solution" rather than a bug
_REJECTIONS = (DegenerateSystemError, ValidationError)


def _strict(tup: EndpointTuple) -> ContextManager[None]:
    """No silent float promotion while an exact tuple is being solved."""
    return exact_context() if tup.mode is ScalarMode.EXACT else nullcontext()


def _solve_direct(n: int, tup: EndpointTuple, options: SolveOptions) -> TnTupleSolution:
    with _strict(tup):
        X = extremal_x_polynomial(n, tup, options.det_tol).monic()
        Y = extremal_y_polynomial(n, tup, options.det_tol).monic()
        T, U = build_Tn_from_polys(n, tup, X, Y, options.tol)
        ok, norm = pell_holds(T, U, tup, options.pell_tol)
    if not ok:
        raise ValidationError(f"Pell residual {norm:.3g} for degree {n}")
    xs, x_exact = points_of(X, options.seed, options.max_denominator, options.promote)
    ys, y_exact = points_of(Y, options.seed, options.max_denominator, options.promote)
    return TnTupleSolution(
        n=n,
        tuple=tup,
        xs=xs,
        ys=ys,
        T=T,
        U=U,
        pell_residual_norm=norm,
        system_residual=power_sum_system_residual(n, tup, xs, ys),
        points_exact=x_exact and y_exact,
    )


def solve_tuple(
    n: int, tup: EndpointTuple, options: SolveOptions = DEFAULT_OPTIONS
) -> TnTupleSolution:
    """
    Extremal points, T_n and U_{n-2} for a complete tuple, Pell-validated.

    Even degrees fall back to the half-degree composition when the direct
    system has no solution.

    Raises:
        DegenerateSystemError: The Cramer system is singular
        ValidationError: The tuple is not a T_n-tuple with these roles
        ExactnessError: An exact tuple has irrational extremal points and
            ``options.promote`` is False
    """
    try:
        return _solve_direct(n, tup, options)
    except _REJECTIONS as exc:
        if n % 2 == 0 and n >= 4:
            found, solution = is_half_degree_tuple(n, tup, options)
            if found and solution is not None:
                return solution
        logger.debug(f"tuple rejected at degree {n}: {exc}")
        raise


def _half_arrangements(h: int, points: Sequence[Any]) -> List[Tuple[Any, Any, Any, Any]]:
    """Every role assignment of four points at degree h, one per T -> -T pair."""
    arrangements = []
    if h % 2:
        for plus in range(4):
            minus = [points[j] for j in range(4) if j != plus]
            arrangements.append((minus[0], minus[1], minus[2], points[plus]))
        return arrangements
    for partner in range(1, 4):
        rest = [points[j] for j in range(1, 4) if j != partner]
        arrangements.append((points[0], points[partner], rest[0], rest[1]))
    return arrangements


def is_half_degree_tuple(
    n: int, tup: EndpointTuple, options: SolveOptions = DEFAULT_OPTIONS
) -> Tuple[bool, Optional[TnTupleSolution]]:
    """
    Whether the four points are also a T_{n/2}-tuple.

    On success the solution is the degree-n composition ``2 T_{n/2}**2 - 1``;
    its xs are the half-degree extremal points (T_n = +1) and its ys the
    zeros of T_{n/2} (T_n = -1).

    Raises:
        ExactnessError: The composition holds but its extremal points are
            irrational and ``options.promote`` is False
    """
    if n % 2:
        raise ValueError(f"half-degree test needs an even degree, got {n}")
    h = n // 2
    if h < 2:
        return False, None
    # only T_{n/2} and U are used from the half solve
    half_options = replace(options, promote=True)
    for arrangement in _half_arrangements(h, tup.points):
        half_tup = EndpointTuple.create(h, *arrangement, tol=options.tol)
        try:
            half = solve_tuple(h, half_tup, half_options)
            with _strict(tup):
                T, U = compose_double(half.T, half.U, tup, options.pell_tol)
        except _REJECTIONS:
            continue
        _, norm = pell_holds(T, U, tup, options.pell_tol)
        xs, x_exact = points_of(
            half.U.monic(), options.seed, options.max_denominator, options.promote
        )
        ys, y_exact = points_of(
            half.T.monic(), options.seed, options.max_denominator, options.promote
        )
        logger.debug(f"degree-{n} tuple composed from degree {h}")
        return True, TnTupleSolution(
            n=n,
            tuple=tup,
            xs=xs,
            ys=ys,
            T=T,
            U=U,
            pell_residual_norm=norm,
            system_residual=power_sum_system_residual(n, tup, xs, ys, composed=True),
            points_exact=x_exact and y_exact,
            composed_from=h,
        )
    return False, None


def _endpoint_roots(p: Poly, options: SolveOptions) -> Tuple[List[Tuple[Any, int]], int]:
    """(root, multiplicity) pairs and the number of irrational roots left out."""
    if p.mode is ScalarMode.APPROX:
        found = all_roots(p, max_iter=options.max_iter, seed=options.seed)
        return [(r.value, r.multiplicity) for r in found.roots], 0
    exact = exact_roots(p, max_denominator=options.max_denominator, seed=options.seed)
    roots: List[Tuple[Any, int]] = list(exact.roots)
    if exact.complete:
        return roots, 0
    rest = exact.remainder
    if options.promote:
        logger.info(f"promoting {rest.degree} irrational endpoint roots to approximate values")
        found = all_roots(rest.to_approx(), max_iter=options.max_iter, seed=options.seed)
        roots.extend((r.value, r.multiplicity) for r in found.roots)
        return roots, 0
    logger.warning(f"skipping {rest.degree} irrational endpoint roots in exact mode")
    return roots, rest.degree


def solve_fourth_endpoint(
    n: int,
    known: Mapping[str, Any],
    unknown: Optional[str] = None,
    options: SolveOptions = DEFAULT_OPTIONS,
) -> EndpointCandidates:
    """
    Roots of the endpoint polynomial, each classified and validated.

    Args:
        n: Degree
        known: Three known endpoints keyed by label
        unknown: Label of the unknown endpoint
        options: Tolerances, seed and exact-mode policy

    Returns:
        EndpointCandidates sorted by (real part, imaginary part)
    """
    unknown = unknown or distinguished_label(n)
    p = endpoint_polynomial(n, known, unknown)
    result = EndpointCandidates(polynomial=p)
    if p.degree < 1:
        logger.warning("endpoint polynomial is a nonzero constant: no tuple completes these points")
        return result
    roots, result.skipped_irrational = _endpoint_roots(p, options)

    for value, multiplicity in roots:
        labels: Dict[str, Any] = dict(known)
        labels[unknown] = value
        tup = EndpointTuple.from_labels(n, labels, tol=options.tol)
        degenerate = any(coincide(value, k, options.tol) for k in known.values())
        classification = Classification.DEGENERATE if degenerate else Classification.PROPER
        solution: Optional[TnTupleSolution] = None
        message = ""
        try:
            solution = solve_tuple(n, tup, options)
        except ExactnessError as exc:
            message = exc.message
            logger.warning(f"candidate {unknown}={value} left unsolved: {message}")
        except _REJECTIONS as exc:
            message = exc.message
            if classification is Classification.PROPER:
                classification = Classification.INVALID
                logger.warning(f"candidate {unknown}={value} failed validation: {message}")
        result.candidates.append(
            Candidate(value, unknown, tup, classification, multiplicity, solution, message)
        )
    result.candidates.sort(key=lambda c: scalar_key(c.value))
    return result


def role_assignments(n: int, points: Sequence[Any]) -> List[Tuple[Dict[str, Any], str]]:
    """
    Every way to place three given points and one unknown on the labels.

    Odd degree: the unknown is d, or the unknown is a minus endpoint and one
    given point is d (4 ways). Even degree: the unknown is a and each given
    point in turn is its partner b (3 ways).
    """
    if len(points) != 3:
        raise ValueError(f"need exactly 3 points, got {len(points)}")
    p = list(points)
    if n % 2:
        out = [({"a": p[0], "b": p[1], "c": p[2]}, "d")]
        for i in range(3):
            rest = [p[j] for j in range(3) if j != i]
            out.append(({"b": rest[0], "c": rest[1], "d": p[i]}, "a"))
        return out
    out = []
    for i in range(3):
        rest = [p[j] for j in range(3) if j != i]
        out.append(({"b": p[i], "c": rest[0], "d": rest[1]}, "a"))
    return out


def enumerate_tuples(
    n: int, points: Sequence[Any], options: SolveOptions = DEFAULT_OPTIONS
) -> List[TnTupleSolution]:
    """
    All validated tuples through three given points, deduplicated by endpoint set.

    Role assignments run concurrently when ``options.workers > 1``; the
    merge is ordered, so output does not depend on scheduling.
    """
    assignments = role_assignments(n, points)

    def run(item: Tuple[Dict[str, Any], str]) -> EndpointCandidates:
        known, unknown = item
        try:
            return solve_fourth_endpoint(n, known, unknown, options)
        except DegenerateSystemError as exc:
            logger.warning(f"assignment with unknown {unknown} skipped: {exc.message}")
            return EndpointCandidates(polynomial=None)

    if options.workers > 1:
        with ThreadPoolExecutor(max_workers=options.workers) as pool:
            batches = list(pool.map(run, assignments))
    else:
        batches = [run(item) for item in assignments]

    seen: Dict[Tuple, TnTupleSolution] = {}
    for batch in batches:
        for solution in batch.validated():
            key = solution.tuple.multiset_key()
            if key not in seen:
                seen[key] = solution
    return [seen[key] for key in sorted(seen)]
