"""
Configuration manager for twoarcs.

Precedence, lowest first: the packaged defaults template, an optional user
YAML file, command-line overrides.
"""

from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml
from pydantic import ValidationError as PydanticValidationError

from twoarcs.config.models import RunConfig
from twoarcs.utils.error_handler import ConfigurationError
from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)

TEMPLATE_DIR = Path(__file__).parent / "templates"
DEFAULTS_PATH = TEMPLATE_DIR / "defaults.yaml"


def _merge(base: Dict[str, Any], override: Mapping[str, Any]) -> Dict[str, Any]:
    """Recursive dict merge; ``None`` overrides are ignored."""
    merged = dict(base)
    for key, value in override.items():
        if value is None:
            continue
        if isinstance(value, Mapping) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """Loads and layers RunConfig sources."""

    def __init__(self, config_path: Optional[Path] = None):
        """
        Initialize configuration manager.

        Args:
            config_path: User YAML file merged over the defaults
        """
        self.config_path = config_path

    def load_defaults(self) -> Dict[str, Any]:
        return self._load_yaml(DEFAULTS_PATH)

    def load_user(self) -> Dict[str, Any]:
        if self.config_path is None:
            return {}
        if not self.config_path.exists():
            raise ConfigurationError(f"config file not found: {self.config_path}")
        data = self._load_yaml(self.config_path)
        logger.debug(f"loaded user config {self.config_path}")
        return data

    def resolve(self, overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
        """
        Merge defaults, the user file and ``overrides`` into a validated RunConfig.

        Raises:
            ConfigurationError: Unreadable file or invalid values
        """
        data = _merge(self.load_defaults(), self.load_user())
        data = _merge(data, overrides or {})
        try:
            return RunConfig(**data)
        except PydanticValidationError as e:
            raise ConfigurationError(f"invalid configuration: {e}") from e

    def dump(self, config: RunConfig, path: Path) -> None:
        """Write ``config`` as YAML."""
        with open(path, "w", encoding="utf-8") as f:
            yaml.dump(config.model_dump(), f, default_flow_style=False, sort_keys=False)
        logger.info(f"saved config to {path}")

    def _load_yaml(self, path: Path) -> Dict[str, Any]:
        """Load YAML file."""
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigurationError(f"cannot read config {path}: {e}") from e
        if not isinstance(data, dict):
            raise ConfigurationError(f"config {path} must be a mapping")
        return data
