"""Monitoring Module

Work counters and timings for enumeration and reduct decisions.
"""

from .metrics import MetricsCollector, metrics
from .profiler import Profiler, profiler

__all__ = ["MetricsCollector", "metrics", "Profiler", "profiler"]
