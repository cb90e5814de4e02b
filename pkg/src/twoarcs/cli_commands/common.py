"""
Shared options and helpers for the command modules.
"""

from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import click

from twoarcs.algebra.parsing import all_exact, parse_scalar_list
from twoarcs.algebra.scalar import Scalar, ScalarMode, coerce
from twoarcs.config import ConfigManager, RunConfig
from twoarcs.newton.shapes import RoleAssignment
from twoarcs.output.console import Console
from twoarcs.output.serialize import envelope, to_json, write_output
from twoarcs.utils.error_handler import ConfigurationError, ParseError


def run_options(func: Callable) -> Callable:
    """Options every computing command accepts; all default to the config file."""
    options = [
        click.option(
            "--mode",
            type=click.Choice(["exact", "approx", "auto"]),
            default=None,
            help="Scalar mode (default: auto)",
        ),
        click.option("--tol", type=float, default=None, help="Numerical tolerance"),
        click.option("--seed", type=int, default=None, help="Seed for root-finder starts"),
        click.option("--max-iter", type=int, default=None, help="Iteration budget"),
        click.option(
            "--format",
            "output",
            type=click.Choice(["json", "csv", "svg"]),
            default=None,
            help="Output format (csv and svg only for preimage)",
        ),
        click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output file"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def resolve_config(ctx: click.Context, **overrides: Any) -> RunConfig:
    """RunConfig from defaults, ``--config`` and the given flag values."""
    obj = ctx.obj or {}
    path = obj.get("config_path")
    manager = ConfigManager(Path(path) if path else None)
    return manager.resolve(overrides)


def console_of(ctx: click.Context) -> Console:
    obj = ctx.obj or {}
    return obj.get("console") or Console(enabled=False)


def require_json(config: RunConfig) -> None:
    if config.output != "json":
        raise ConfigurationError(f"--format {config.output} is only available for preimage")


def parse_points(text: Optional[str], count: int, flag: str = "--points") -> List[Scalar]:
    if text is None:
        raise ParseError(f"{flag} is required")
    values = parse_scalar_list(text)
    if len(values) != count:
        raise ParseError(f"{flag} needs {count} comma-separated values, got {len(values)}")
    return values


def in_mode(values: Sequence[Scalar], mode: ScalarMode) -> List[Scalar]:
    """Bring parsed values into the run mode; exact mode refuses decimals."""
    return [coerce(v, mode) for v in values]


def mode_for(config: RunConfig, values: Sequence[Scalar], n: int) -> ScalarMode:
    return config.resolve_mode(all_exact(values), n)


def labelled_roles(
    n: int, minus: Sequence[Scalar], plus: Sequence[Scalar]
) -> Tuple[Dict[str, Scalar], Optional[str]]:
    """
    Place points given by role on the labels a, b, c, d.

    With three points the label of the missing role is returned as the
    unknown; with four it is None.
    """
    roles = RoleAssignment.for_degree(n)
    minus_labels = sorted(roles.minus_endpoints)
    plus_labels = sorted(roles.plus_endpoints)
    if len(minus) > len(minus_labels) or len(plus) > len(plus_labels):
        raise ParseError(
            f"degree {n} has {len(minus_labels)} minus and {len(plus_labels)} plus endpoints, "
            f"got {len(minus)} and {len(plus)}"
        )
    total = len(minus) + len(plus)
    if total not in (3, 4):
        raise ParseError(f"need 3 or 4 endpoints by role, got {total}")
    unknown: Optional[str] = None
    if len(minus) < len(minus_labels):
        unknown, minus_labels = minus_labels[0], minus_labels[1:]
    elif len(plus) < len(plus_labels):
        unknown, plus_labels = plus_labels[-1], plus_labels[:-1]
    known = dict(zip(minus_labels, minus))
    known.update(zip(plus_labels, plus))
    return known, unknown


def parse_roles(
    n: int, minus: Optional[str], plus: Optional[str]
) -> Tuple[Dict[str, Scalar], Optional[str]]:
    return labelled_roles(n, parse_scalar_list(minus or ""), parse_scalar_list(plus or ""))


def emit_json(config: RunConfig, result: Any) -> None:
    write_output(to_json(envelope(config, result)), config.out)
