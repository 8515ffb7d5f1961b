"""Metrics collection for Borel Jump."""

import threading
from typing import Dict, Any

from ..config import config
from .prometheus import PrometheusMetrics


class MetricsCollector:
    """Collects and exposes metrics for monitoring."""

    def __init__(self, enabled: bool = True):
        """Initialize metrics collector."""
        self.enabled = enabled
        self.prometheus = PrometheusMetrics()
        self._counters: Dict[str, int] = {}
        self._lock = threading.Lock()

    def increment_counter(self, name: str, labels: Dict[str, str] = None):
        """Increment a counter metric."""
        if not self.enabled:
            return
        key = f"{name}:{sorted((labels or {}).items())}"
        with self._lock:
            self._counters[key] = self._counters.get(key, 0) + 1
        self.prometheus.increment_counter(name, labels)

    def observe_histogram(self, name: str, value: float, labels: Dict[str, str] = None):
        """Observe a histogram value."""
        if not self.enabled:
            return
        self.prometheus.observe_histogram(name, value, labels)

    def get_metrics(self) -> Dict[str, Any]:
        """Get all metrics as dictionary."""
        with self._lock:
            counters = dict(self._counters)
        return {
            "counters": counters,
            "prometheus": self.prometheus.get_metrics(),
        }

    def write_textfile(self, path: str):
        """Write the Prometheus exposition to ``path``."""
        self.prometheus.write(path)


# Global metrics instance
metrics = MetricsCollector(enabled=config.METRICS_ENABLED)
