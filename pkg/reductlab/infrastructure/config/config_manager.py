"""Configuration Manager Implementation

Loads ``base.yaml``, deep-merges ``environments/<env>.yaml`` on top and
replaces ``${VAR}`` references with environment values. Loaded once per
process; there is no reload.
"""

import json
import logging
import os
import re
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_DIR = Path(__file__).parent

_ENV_PATTERN = re.compile(r"\$\{([^}]+)\}")


class ConfigManager:
    """
    Hierarchical configuration management.

    Features:
    - Two-level hierarchy: base → environment
    - Environment variable interpolation
    - Dot-notation lookup
    """

    def __init__(
        self,
        config_dir: Union[str, Path] = DEFAULT_CONFIG_DIR,
        environment: Optional[str] = None,
    ):
        self.config_dir = Path(config_dir)
        self.environment = environment or os.getenv("REDUCTLAB_ENV", "development")
        self.config: Dict[str, Any] = {}

    def load(self) -> "ConfigManager":
        """Load all configuration files"""
        new_config: Dict[str, Any] = {}

        base_config = self._load_file(self.config_dir / "base.yaml")
        if base_config:
            new_config.update(self._interpolate_env_vars(base_config))

        env_config = self._load_file(
            self.config_dir / "environments" / f"{self.environment}.yaml"
        )
        if env_config:
            # Unset variables leave the base value in place
            env_config = self._drop_unresolved(self._interpolate_env_vars(env_config))
            new_config = self._deep_merge(new_config, env_config)

        self.config = new_config
        logger.debug(f"Configuration loaded for environment: {self.environment}")
        return self

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value by dot-notation key.

        Args:
            key: Configuration key (e.g., "engine.budget")
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        value: Any = self.config

        for part in key.split("."):
            if isinstance(value, dict) and part in value:
                value = value[part]
            else:
                return default

        return value

    def merged(self, overrides: Dict[str, Any]) -> Dict[str, Any]:
        """Return the configuration with ``overrides`` deep-merged on top"""
        return self._deep_merge(self.config, overrides)

    def _load_file(self, path: Path) -> Optional[Dict[str, Any]]:
        """Load configuration from file"""
        if not path.exists():
            return None

        try:
            with open(path, "r", encoding="utf-8") as f:
                if path.suffix in (".yaml", ".yml"):
                    return yaml.safe_load(f) or {}
                if path.suffix == ".json":
                    return json.load(f)
        except (OSError, yaml.YAMLError, json.JSONDecodeError) as e:
            logger.error(f"Failed to load config file {path}: {e}")
        return None

    def _deep_merge(
        self, base: Dict[str, Any], override: Dict[str, Any]
    ) -> Dict[str, Any]:
        """Deep merge two dictionaries"""
        result = base.copy()

        for key, value in override.items():
            if (
                key in result
                and isinstance(result[key], dict)
                and isinstance(value, dict)
            ):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = value

        return result

    def _interpolate_env_vars(self, config: Any) -> Any:
        """Replace ${ENV_VAR} with environment variable values"""
        if isinstance(config, str):
            return _ENV_PATTERN.sub(
                lambda match: os.getenv(match.group(1), match.group(0)), config
            )
        if isinstance(config, dict):
            return {k: self._interpolate_env_vars(v) for k, v in config.items()}
        if isinstance(config, list):
            return [self._interpolate_env_vars(item) for item in config]
        return config

    def _drop_unresolved(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Remove leaves still holding ${VAR} so the base value wins"""
        result: Dict[str, Any] = {}
        for key, value in config.items():
            if isinstance(value, dict):
                result[key] = self._drop_unresolved(value)
            elif isinstance(value, str) and _ENV_PATTERN.search(value):
                continue
            else:
                result[key] = value
        return result


def load_config(
    overrides: Optional[Dict[str, Any]] = None,
    config_dir: Union[str, Path] = DEFAULT_CONFIG_DIR,
    environment: Optional[str] = None,
) -> ConfigManager:
    """Load configuration and merge explicit overrides on top"""
    manager = ConfigManager(config_dir, environment).load()
    manager.config = manager.merged(overrides or {})
    return manager
