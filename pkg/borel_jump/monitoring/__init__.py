"""Monitoring for Borel Jump."""

from .metrics import metrics, MetricsCollector

__all__ = ["metrics", "MetricsCollector"]
