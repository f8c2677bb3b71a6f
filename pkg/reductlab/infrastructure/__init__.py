"""reductlab Infrastructure Package

Configuration, structured logging, work metrics and versioned documents.
"""

from .config import ConfigManager, load_config
from .logging import CorrelationContext, configure_logging, get_logger
from .monitoring import MetricsCollector, metrics, profiler
from .serialization import DocumentKind, dumps_document, envelope

__all__ = [
    "ConfigManager",
    "CorrelationContext",
    "DocumentKind",
    "MetricsCollector",
    "configure_logging",
    "dumps_document",
    "envelope",
    "get_logger",
    "load_config",
    "metrics",
    "profiler",
]
