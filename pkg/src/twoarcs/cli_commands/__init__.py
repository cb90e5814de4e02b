"""CLI command modules."""

from twoarcs.cli_commands.config_cli import config_cli
from twoarcs.cli_commands.preimage_cli import preimage
from twoarcs.cli_commands.system_cli import version
from twoarcs.cli_commands.tuple_cli import build, endpoint, extremal, oracle
from twoarcs.cli_commands.zolotarev_cli import zolotarev

__all__ = [
    "build",
    "config_cli",
    "endpoint",
    "extremal",
    "oracle",
    "preimage",
    "version",
    "zolotarev",
]
