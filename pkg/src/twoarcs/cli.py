"""
CLI command definitions using Click.
"""

import logging
from pathlib import Path
from typing import Optional

import click

from twoarcs import __version__
from twoarcs.output.console import Console
from twoarcs.utils.logger import ROOT_LOGGER, setup_logger


@click.group(invoke_without_command=True)
@click.version_option(version=__version__, prog_name="twoarcs")
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="YAML file overriding the built-in defaults",
)
@click.option("--verbose", "-v", is_flag=True, help="Progress tables on stderr")
@click.option("--debug", is_flag=True, help="Debug logging and tracebacks")
@click.option(
    "--log-file", type=click.Path(dir_okay=False), default=None, help="Also log to this file"
)
@click.pass_context
def main(
    ctx: click.Context,
    config_path: Optional[str],
    verbose: bool,
    debug: bool,
    log_file: Optional[str],
) -> None:
    """
    twoarcs - polynomials whose inverse image of [-1, 1] is two Jordan arcs.

    Construct such polynomials from prescribed arc endpoints, compute
    Zolotarev polynomials, and sample the arcs themselves.

    Examples:
        twoarcs build --n 3 --points=-1,1/2,1/2,1
        twoarcs endpoint --n 3 --minus=-1,1/2,1/2
        twoarcs zolotarev --n 3 --sigma 2/3
        twoarcs preimage --poly=-1,0,2 --format csv
    """
    # Store global options in context
    ctx.ensure_object(dict)
    ctx.obj["config_path"] = config_path
    ctx.obj["debug"] = debug
    ctx.obj["console"] = Console(enabled=verbose)

    setup_logger(
        ROOT_LOGGER,
        level=logging.DEBUG if debug else logging.INFO,
        console_level=logging.DEBUG if debug else logging.WARNING,
        log_file=Path(log_file) if log_file else None,
    )

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


# Import CLI command modules
from twoarcs.cli_commands import (  # noqa: E402
    build,
    config_cli,
    endpoint,
    extremal,
    oracle,
    preimage,
    version,
    zolotarev,
)

# Register all command groups and commands
main.add_command(build)  # twoarcs build
main.add_command(endpoint)  # twoarcs endpoint
main.add_command(extremal)  # twoarcs extremal
main.add_command(oracle)  # twoarcs oracle
main.add_command(zolotarev)  # twoarcs zolotarev
main.add_command(preimage)  # twoarcs preimage
main.add_command(config_cli)  # twoarcs config
main.add_command(version)  # twoarcs version
