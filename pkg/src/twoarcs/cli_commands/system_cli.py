"""
System commands - version information.
"""

import click


@click.command(name="version")
def version() -> None:
    """Show version information"""
    import platform

    import numpy
    import scipy

    from twoarcs import __version__

    click.echo(f"twoarcs version {__version__}")
    click.echo(
        f"Python {platform.python_version()}, numpy {numpy.__version__}, scipy {scipy.__version__}"
    )
