"""Logging Module

Structured logging with per-run correlation ids.
"""

from .correlation import CorrelationContext
from .logger import JsonFormatter, configure_logging, get_logger

__all__ = ["get_logger", "configure_logging", "CorrelationContext", "JsonFormatter"]
