"""
Preimage command: sample T^-1([-1, 1]) and write JSON, CSV or SVG.
"""

import json
from pathlib import Path
from typing import Any, Optional

import click

from twoarcs.algebra.parsing import format_scalar, parse_scalar_list, poly_from_json
from twoarcs.algebra.poly import Poly
from twoarcs.cli_commands.common import resolve_config, run_options
from twoarcs.output.serialize import envelope, to_json, write_output
from twoarcs.preimage import emit_csv, emit_svg, order_into_arcs, sample_preimage
from twoarcs.utils.error_handler import ParseError, handle_cli_error


def _load_poly(poly: Optional[str], poly_file: Optional[str]) -> Poly:
    """
    Coefficients (low to high) inline, or from a JSON file holding a list, an
    object with a ``T`` key, or the output of ``build``.
    """
    if (poly is None) == (poly_file is None):
        raise ParseError("give exactly one of --poly and --poly-file")
    if poly is not None:
        return Poly(parse_scalar_list(poly))
    try:
        data = json.loads(Path(poly_file).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read polynomial file {poly_file}: {e}") from e
    if isinstance(data, dict) and "result" in data:
        data = data["result"]
    if isinstance(data, dict):
        data = data.get("T")
    if not isinstance(data, list):
        raise ParseError(f"{poly_file} holds no coefficient list")
    return poly_from_json(data)


@click.command(name="preimage")
@click.option("--poly", default=None, help="Coefficients of T, low to high, comma-separated")
@click.option(
    "--poly-file", type=click.Path(exists=True, dir_okay=False), default=None, help="JSON file"
)
@click.option("--grid", type=click.IntRange(min=2), default=None, help="Number of t samples")
@run_options
@click.pass_context
@handle_cli_error()
def preimage(
    ctx: click.Context,
    poly: Optional[str],
    poly_file: Optional[str],
    grid: Optional[int],
    **flags: Any,
) -> None:
    """Sample the inverse image of [-1, 1] under T

    Examples:
        twoarcs preimage --poly=-1,0,2 --format csv
        twoarcs build --n 3 --points=-1,1/2,1/2,1 --out t3.json
        twoarcs preimage --poly-file t3.json --format svg --out t3.svg
    """
    overrides = dict(flags)
    # --tol bounds |T(z) - t|; --max-iter is the per-sample root budget
    overrides["preimage"] = {"grid": grid, "tol": flags.get("tol")}
    overrides["rootfind"] = {"max_iter": flags.get("max_iter")}
    config = resolve_config(ctx, **overrides)
    T = _load_poly(poly, poly_file)
    if T.degree < 1:
        raise ParseError("T must have degree at least 1")

    settings = config.preimage
    samples = sample_preimage(
        T,
        grid=settings.grid,
        tol=settings.tol,
        seed=config.seed,
        max_iter=config.rootfind.max_iter,
        root_tol=config.rootfind.tol,
        cluster_factor=config.rootfind.cluster_factor,
    )
    arcs = order_into_arcs(samples, settings.join_tol)

    if config.output == "csv":
        data = emit_csv(samples, arcs.track_arc)
    elif config.output == "svg":
        data = emit_svg(arcs.polylines, settings.svg_width, settings.svg_height)
    else:
        data = to_json(
            envelope(
                config,
                {
                    "degree": T.degree,
                    "samples": len(samples),
                    "max_residual": max(s.max_residual for s in samples),
                    "cloud": arcs.cloud,
                    "arc_count": len(arcs),
                    "endpoints": [format_scalar(z) for z in arcs.endpoints()],
                    "arcs": [[format_scalar(z) for z in line] for line in arcs.polylines],
                },
            )
        )
    write_output(data, config.out)
