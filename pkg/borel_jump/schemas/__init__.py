"""Report documents for machine-readable CLI output."""

from .reports import (
    ClassificationDocument,
    JumpDocument,
    MembershipDocument,
    PredictionDocument,
    SelftestDocument,
    SolveDocument,
    SuiteDocument,
    TableDocument,
    to_json,
)

__all__ = [
    "ClassificationDocument",
    "JumpDocument",
    "MembershipDocument",
    "PredictionDocument",
    "SelftestDocument",
    "SolveDocument",
    "SuiteDocument",
    "TableDocument",
    "to_json",
]
