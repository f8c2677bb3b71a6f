"""Configuration Module

Hierarchical YAML configuration: base, then environment overrides, then
environment variable interpolation.
"""

from .config_manager import DEFAULT_CONFIG_DIR, ConfigManager, load_config

__all__ = ["ConfigManager", "load_config", "DEFAULT_CONFIG_DIR"]
