"""
Config commands - show or write the resolved configuration.
"""

from pathlib import Path

import click
import yaml

from twoarcs.cli_commands.common import resolve_config
from twoarcs.config import ConfigManager
from twoarcs.utils.error_handler import handle_cli_error


@click.group(name="config")
def config_cli() -> None:
    """Configuration management"""


@config_cli.command(name="show")
@click.pass_context
@handle_cli_error()
def show_config(ctx: click.Context) -> None:
    """Print the resolved configuration as YAML"""
    config = resolve_config(ctx)
    click.echo(yaml.dump(config.model_dump(), default_flow_style=False, sort_keys=False), nl=False)


@config_cli.command(name="init")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--force", is_flag=True, help="Overwrite an existing file")
@click.pass_context
@handle_cli_error()
def init_config(ctx: click.Context, path: str, force: bool) -> None:
    """Write the resolved configuration to PATH for later use with --config"""
    target = Path(path)
    if target.exists() and not force:
        raise click.ClickException(f"{target} exists; use --force to overwrite")
    ConfigManager().dump(resolve_config(ctx), target)
    click.echo(f"Wrote {target}", err=True)
