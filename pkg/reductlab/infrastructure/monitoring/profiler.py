"""Profiler Module

Timing decorator for engine entry points.
"""

import logging
import time
from functools import wraps
from typing import Any, Callable, Optional, TypeVar, cast

from .metrics import MetricsCollector, metrics

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


class Profiler:
    """Records wall-clock durations into a metrics collector"""

    def __init__(self, metrics_collector: Optional[MetricsCollector] = None):
        self.metrics_collector = metrics_collector

    def profile(self, name: str) -> Callable[[F], F]:
        """Decorator to profile function execution time"""

        def decorator(func: F) -> F:
            @wraps(func)
            def wrapper(*args: Any, **kwargs: Any) -> Any:
                start = time.perf_counter()
                try:
                    return func(*args, **kwargs)
                finally:
                    self._record_timing(name, time.perf_counter() - start)

            return cast(F, wrapper)

        return decorator

    def _record_timing(self, name: str, duration: float) -> None:
        """Record timing metric"""
        if self.metrics_collector is not None:
            self.metrics_collector.record_histogram(
                f"duration.{name}", duration * 1000  # ms
            )
        logger.debug(f"{name} took {duration * 1000:.2f}ms")


profiler = Profiler(metrics)
