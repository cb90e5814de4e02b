"""
Tuple commands: endpoint (step 1), extremal (steps 2-3), build (step 4), oracle.
"""

from typing import Any, Dict, List, Optional

import click

from twoarcs.algebra.parsing import all_exact, format_scalar, poly_to_json
from twoarcs.cli_commands.common import (
    console_of,
    emit_json,
    in_mode,
    mode_for,
    parse_points,
    parse_roles,
    require_json,
    resolve_config,
    run_options,
)
from twoarcs.newton.shapes import LABELS
from twoarcs.tuples import (
    EndpointTuple,
    enumerate_tuples,
    extremal_x_polynomial,
    extremal_y_polynomial,
    points_of,
    small_degree_oracle,
    solve_fourth_endpoint,
    solve_tuple,
)
from twoarcs.tuples.oracle import ORACLE_KINDS
from twoarcs.utils.error_handler import (
    ExactnessError,
    NoSolutionError,
    ParseError,
    handle_cli_error,
)
from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)


def _four_points(
    n: int, points: Optional[str], minus: Optional[str], plus: Optional[str]
) -> List[Any]:
    """a, b, c, d from ``--points`` or from complete role lists."""
    if points is not None:
        return parse_points(points, 4)
    known, unknown = parse_roles(n, minus, plus)
    if unknown is not None:
        raise ParseError("four endpoints are needed; give all of them with --minus/--plus")
    return [known[label] for label in LABELS]


@click.command(name="endpoint")
@click.option("--n", "n", type=click.IntRange(min=2), required=True, help="Degree of T_n")
@click.option("--points", default=None, help="Three known endpoints; all role assignments tried")
@click.option("--minus", default=None, help="Known endpoints with T_n = -1")
@click.option("--plus", default=None, help="Known endpoints with T_n = +1")
@run_options
@click.pass_context
@handle_cli_error()
def endpoint(
    ctx: click.Context,
    n: int,
    points: Optional[str],
    minus: Optional[str],
    plus: Optional[str],
    **flags: Any,
) -> None:
    """Solve for the fourth endpoint of a T_n-tuple

    Examples:
        twoarcs endpoint --n 3 --minus=-1,1/2,1/2
        twoarcs endpoint --n 4 --points 0,1,2+i
    """
    config = resolve_config(ctx, **flags)
    require_json(config)
    console = console_of(ctx)

    if points is not None:
        given = parse_points(points, 3)
        mode = mode_for(config, given, n)
        solutions = enumerate_tuples(
            n, in_mode(given, mode), config.solve_options(promote=config.mode == "auto")
        )
        for solution in solutions:
            console.solution(solution)
        emit_json(config, {"n": n, "tuples": [s.as_dict() for s in solutions]})
        if not solutions:
            raise NoSolutionError(f"no T_{n}-tuple through the given points")
        return

    known, unknown = parse_roles(n, minus, plus)
    if unknown is None:
        raise ParseError("give exactly three endpoints with --minus/--plus")
    mode = mode_for(config, list(known.values()), n)
    known = dict(zip(known, in_mode(list(known.values()), mode)))
    result = solve_fourth_endpoint(
        n, known, unknown, config.solve_options(promote=config.mode == "auto")
    )
    if result.skipped_irrational and config.mode == "exact":
        raise ExactnessError(
            f"{result.skipped_irrational} endpoint roots are irrational; use --mode auto or approx"
        )
    console.candidates(result)
    candidates: List[Dict[str, Any]] = []
    for candidate in result:
        data = candidate.as_dict()
        if candidate.solution is not None:
            data["solution"] = candidate.solution.as_dict()
        candidates.append(data)
    emit_json(
        config,
        {
            "n": n,
            "unknown": unknown,
            "polynomial": poly_to_json(result.polynomial) if result.polynomial else None,
            "candidates": candidates,
            "skipped_irrational": result.skipped_irrational,
        },
    )
    if not result.validated():
        raise NoSolutionError(f"no proper candidate for {unknown} validated")


@click.command(name="extremal")
@click.option("--n", "n", type=click.IntRange(min=2), required=True, help="Degree of T_n")
@click.option("--points", default=None, help="Endpoints a,b,c,d in role order")
@click.option("--minus", default=None, help="Endpoints with T_n = -1")
@click.option("--plus", default=None, help="Endpoints with T_n = +1")
@run_options
@click.pass_context
@handle_cli_error()
def extremal(
    ctx: click.Context,
    n: int,
    points: Optional[str],
    minus: Optional[str],
    plus: Optional[str],
    **flags: Any,
) -> None:
    """Compute the extremal points x_j (T_n = +1) and y_j (T_n = -1)"""
    config = resolve_config(ctx, **flags)
    require_json(config)
    values = _four_points(n, points, minus, plus)
    mode = mode_for(config, values, n)
    tup = EndpointTuple.create(n, *in_mode(values, mode), tol=config.tol)
    options = config.solve_options(promote=config.mode == "auto")
    x_poly = extremal_x_polynomial(n, tup, options.det_tol)
    y_poly = extremal_y_polynomial(n, tup, options.det_tol)
    xs, xs_exact = points_of(x_poly, options.seed, options.max_denominator, options.promote)
    ys, ys_exact = points_of(y_poly, options.seed, options.max_denominator, options.promote)
    emit_json(
        config,
        {
            "n": n,
            "tuple": tup.as_dict(),
            "x_polynomial": poly_to_json(x_poly),
            "y_polynomial": poly_to_json(y_poly),
            "xs": [format_scalar(x) for x in xs],
            "ys": [format_scalar(y) for y in ys],
            "points_exact": xs_exact and ys_exact,
        },
    )


@click.command(name="build")
@click.option("--n", "n", type=click.IntRange(min=2), required=True, help="Degree of T_n")
@click.option("--points", default=None, help="Endpoints a,b,c,d in role order")
@click.option("--minus", default=None, help="Endpoints with T_n = -1")
@click.option("--plus", default=None, help="Endpoints with T_n = +1")
@run_options
@click.pass_context
@handle_cli_error()
def build(
    ctx: click.Context,
    n: int,
    points: Optional[str],
    minus: Optional[str],
    plus: Optional[str],
    **flags: Any,
) -> None:
    """Build T_n and U_{n-2} for a tuple and verify the Pell equation

    Example:
        twoarcs build --n 3 --points=-1,1/2,1/2,1
    """
    config = resolve_config(ctx, **flags)
    require_json(config)
    values = _four_points(n, points, minus, plus)
    mode = mode_for(config, values, n)
    tup = EndpointTuple.create(n, *in_mode(values, mode), tol=config.tol)
    solution = solve_tuple(n, tup, config.solve_options(promote=config.mode == "auto"))
    console_of(ctx).solution(solution)
    emit_json(config, solution.as_dict())


@click.command(name="oracle")
@click.option("--n", "n", type=click.IntRange(2, 4), required=True, help="Degree 2, 3 or 4")
@click.option("--points", required=True, help="Endpoints a,b,c,d")
@click.option(
    "--kind", type=click.Choice(ORACLE_KINDS), default="endpoint", help="Which equation"
)
@click.option("--at", default=None, help="Extremal point for --kind x or y")
@run_options
@click.pass_context
@handle_cli_error()
def oracle(
    ctx: click.Context, n: int, points: str, kind: str, at: Optional[str], **flags: Any
) -> None:
    """Evaluate the explicit endpoint or extremal-point equation for n = 2, 3, 4

    Example:
        twoarcs oracle --n 2 --points 0,0,-1,1
    """
    config = resolve_config(ctx, **flags)
    require_json(config)
    values = parse_points(points, 4)
    extra = parse_points(at, 1, "--at") if at is not None else []
    mode = mode_for(config, values + extra, n)
    a, b, c, d = in_mode(values, mode)
    point = in_mode(extra, mode)[0] if extra else None
    residual = small_degree_oracle(n, a, b, c, d, kind=kind, at=point)
    emit_json(
        config,
        {
            "n": n,
            "kind": kind,
            "residual": format_scalar(residual),
            "exact": all_exact([residual]),
        },
    )
