"""Metrics Collector Module

In-process counters, gauges and timing histograms. The engine increments
counters as it examines candidates; the CLI logs a snapshot per run.
"""

import logging
import time
from collections import defaultdict
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


class MetricsCollector:
    """Collects metrics for one process"""

    def __init__(self) -> None:
        self.counters: Dict[str, int] = defaultdict(int)
        self.gauges: Dict[str, float] = {}
        self.histograms: Dict[str, List[float]] = defaultdict(list)
        self.started = time.time()

    def increment_counter(
        self, name: str, value: int = 1, labels: Optional[Dict[str, str]] = None
    ) -> None:
        """Increment a counter metric"""
        key = self._make_key(name, labels)
        self.counters[key] += value

    def set_gauge(
        self, name: str, value: float, labels: Optional[Dict[str, str]] = None
    ) -> None:
        """Set a gauge metric"""
        key = self._make_key(name, labels)
        self.gauges[key] = value

    def record_histogram(
        self, name: str, value: float, labels: Optional[Dict[str, str]] = None
    ) -> None:
        """Record a histogram value"""
        key = self._make_key(name, labels)
        self.histograms[key].append(value)

    def snapshot(self) -> Dict[str, Any]:
        """Return a plain copy of all metrics; histograms summarised"""
        return {
            "counters": dict(sorted(self.counters.items())),
            "gauges": dict(sorted(self.gauges.items())),
            "histograms": {
                key: {"count": len(values), "total_ms": round(sum(values), 3)}
                for key, values in sorted(self.histograms.items())
            },
        }

    def reset(self) -> None:
        """Drop all recorded metrics"""
        self.counters.clear()
        self.gauges.clear()
        self.histograms.clear()
        self.started = time.time()
        logger.debug("metrics reset")

    def _make_key(self, name: str, labels: Optional[Dict[str, str]] = None) -> str:
        """Create metric key with labels"""
        if not labels:
            return name
        label_str = ",".join(f"{k}={v}" for k, v in sorted(labels.items()))
        return f"{name}{{{label_str}}}"


metrics = MetricsCollector()
