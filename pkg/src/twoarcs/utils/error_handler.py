"""
Unified error handling for twoarcs.

Every failure the library can report is a ``TwoArcsError`` carrying the exit
code the command-line surface uses for it.
"""

import sys
import traceback
from functools import wraps
from typing import Any, Callable, Optional

import click

from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NO_SOLUTION = 2
EXIT_VALIDATION = 3
EXIT_PARSE = 4


class TwoArcsError(Exception):
    """Base exception for twoarcs errors."""

    exit_code = EXIT_FAILURE

    def __init__(self, message: str, exit_code: Optional[int] = None):
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(message)


class ConfigurationError(TwoArcsError):
    """Configuration-related errors."""


class ParseError(TwoArcsError):
    """Malformed scalar, polynomial or role input."""

    exit_code = EXIT_PARSE


class ModeMismatchError(TwoArcsError, TypeError):
    """Exact and approximate values met where promotion is not allowed."""


class ExactnessError(ModeMismatchError):
    """An exact pipeline needed a value that is not a Gaussian rational."""

    exit_code = EXIT_NO_SOLUTION


class DegenerateSystemError(TwoArcsError):
    """The Cramer system is singular (det F = 0): u and v sets are not disjoint."""

    exit_code = EXIT_NO_SOLUTION

    def __init__(self, message: str, det_magnitude: float = 0.0):
        self.det_magnitude = det_magnitude
        super().__init__(message)


class NoSolutionError(TwoArcsError):
    """No solution in the requested region."""

    exit_code = EXIT_NO_SOLUTION


class ConvergenceError(TwoArcsError):
    """An iteration did not converge within its budget."""

    exit_code = EXIT_NO_SOLUTION


class ValidationError(TwoArcsError):
    """A computed object failed its defining identity (Pell, equioscillation, ...)."""

    exit_code = EXIT_VALIDATION


def handle_cli_error(show_traceback: bool = False) -> Callable:
    """
    Decorator for unified CLI error handling.

    Args:
        show_traceback: Whether to show full traceback on unexpected errors

    Usage:
        @handle_cli_error()
        def my_command():
            ...
    """

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            try:
                return func(*args, **kwargs)

            except KeyboardInterrupt:
                click.echo("\nInterrupted by user", err=True)
                logger.info("Command interrupted by user")
                sys.exit(130)

            except TwoArcsError as e:
                click.echo(f"Error: {e.message}", err=True)
                logger.error(f"{type(e).__name__}: {e.message}")
                sys.exit(e.exit_code)

            except (click.exceptions.Exit, click.ClickException):
                raise

            except Exception as e:
                click.echo(f"Unexpected error: {e}", err=True)
                logger.error(f"Unexpected error: {e}")
                ctx = click.get_current_context(silent=True)
                debug = bool(ctx and ctx.obj and ctx.obj.get("debug"))
                if show_traceback or debug:
                    click.echo("\nTraceback:", err=True)
                    traceback.print_exc()
                else:
                    click.echo("Run with --debug to see full traceback", err=True)
                sys.exit(EXIT_FAILURE)

        return wrapper

    return decorator
