"""Configuration management for twoarcs."""

from twoarcs.config.manager import ConfigManager
from twoarcs.config.models import (
    PreimageConfig,
    RootfindConfig,
    RunConfig,
    TupleConfig,
    ZolotarevConfig,
)

__all__ = [
    "ConfigManager",
    "PreimageConfig",
    "RootfindConfig",
    "RunConfig",
    "TupleConfig",
    "ZolotarevConfig",
]
