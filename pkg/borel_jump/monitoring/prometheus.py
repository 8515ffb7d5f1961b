"""Prometheus metrics integration."""

from typing import Dict, Optional

from prometheus_client import CollectorRegistry, Counter, Histogram, generate_latest, write_to_textfile

SOLVE_BUCKETS = (0.001, 0.005, 0.01, 0.05, 0.1, 0.5, 1.0, 5.0, 30.0)


class PrometheusMetrics:
    """Prometheus metrics kept in a private registry."""

    def __init__(self):
        self.registry = CollectorRegistry()
        self._counters: Dict[str, Counter] = {
            "borel_classifications_total": Counter(
                "borel_classifications_total",
                "Automata classified, by exact Borel label",
                ["label"],
                registry=self.registry,
            ),
            "borel_normal_forms_total": Counter(
                "borel_normal_forms_total",
                "Muller normal forms computed, by source acceptance",
                ["acceptance"],
                registry=self.registry,
            ),
            "borel_guard_trips_total": Counter(
                "borel_guard_trips_total",
                "Size guards that stopped a construction",
                ["what"],
                registry=self.registry,
            ),
            "borel_games_solved_total": Counter(
                "borel_games_solved_total",
                "Games solved, by objective kind",
                ["objective"],
                registry=self.registry,
            ),
            "borel_strategy_checks_total": Counter(
                "borel_strategy_checks_total",
                "Strategy verifications, by outcome",
                ["outcome"],
                registry=self.registry,
            ),
        }
        self._histograms: Dict[str, Histogram] = {
            "borel_solve_seconds": Histogram(
                "borel_solve_seconds",
                "Wall time spent in solve()",
                ["objective"],
                buckets=SOLVE_BUCKETS,
                registry=self.registry,
            ),
        }

    def increment_counter(self, name: str, labels: Optional[Dict[str, str]] = None):
        """Increment a counter."""
        counter = self._counters[name]
        (counter.labels(**labels) if labels else counter).inc()

    def observe_histogram(self, name: str, value: float, labels: Optional[Dict[str, str]] = None):
        """Observe a histogram value."""
        histogram = self._histograms[name]
        (histogram.labels(**labels) if labels else histogram).observe(value)

    def get_metrics(self) -> str:
        """Get metrics in Prometheus text format."""
        return generate_latest(self.registry).decode("utf-8")

    def write(self, path: str):
        """Write the text exposition to a file (node-exporter textfile style)."""
        write_to_textfile(path, self.registry)
