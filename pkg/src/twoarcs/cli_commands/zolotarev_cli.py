"""
Zolotarev command.
"""

from typing import Any, Dict

import click

from twoarcs.algebra.parsing import all_exact, parse_scalar, poly_to_json
from twoarcs.cli_commands.common import (
    console_of,
    emit_json,
    require_json,
    resolve_config,
    run_options,
)
from twoarcs.utils.error_handler import ExactnessError, ParseError, handle_cli_error
from twoarcs.zolotarev import (
    alpha_is_resultant_root,
    resultant_alpha_polynomial,
    solve_zolotarev,
)


@click.command(name="zolotarev")
@click.option("--n", "n", type=click.IntRange(min=2), required=True, help="Degree of Z_n")
@click.option("--sigma", required=True, help="sigma > 0 (z**(n-1) coefficient is -n*sigma)")
@click.option(
    "--allow-chebyshev",
    is_flag=True,
    help="Below tan^2(pi/2n) return the transformed Chebyshev polynomial instead of failing",
)
@click.option(
    "--cross-check",
    is_flag=True,
    help="Also eliminate beta exactly (rational sigma) and test alpha against the resultant",
)
@run_options
@click.pass_context
@handle_cli_error()
def zolotarev(
    ctx: click.Context,
    n: int,
    sigma: str,
    allow_chebyshev: bool,
    cross_check: bool,
    **flags: Any,
) -> None:
    """Solve for [alpha, beta] and build the Zolotarev polynomial Z_n

    Example:
        twoarcs zolotarev --n 3 --sigma 2/3
    """
    config = resolve_config(ctx, **flags)
    require_json(config)
    value = parse_scalar(sigma)
    if complex(value).imag != 0 or complex(value).real <= 0:
        raise ParseError(f"sigma must be a positive real number, got {sigma}")
    sigma_float = complex(value).real

    solution = solve_zolotarev(n, sigma_float, config.zolotarev_options(), allow_chebyshev)
    console_of(ctx).zolotarev(solution)
    result: Dict[str, Any] = solution.as_dict()
    if cross_check and solution.alpha is not None:
        if not all_exact([value]):
            raise ExactnessError("--cross-check needs a rational sigma such as 2/3")
        resultant = resultant_alpha_polynomial(n, value)
        result["cross_check"] = {
            "resultant": poly_to_json(resultant),
            "alpha_is_root": alpha_is_resultant_root(resultant, solution.alpha),
        }
    emit_json(config, result)
