"""Two-player games on finite graphs."""

from .arena import GameGraph, MemoryStrategy, Objective, ObjectiveKind, PositionalStrategy, SolveResult
from .attractor import attractor
from .lar import LARGame, lar_reduction
from .lift import LiftConvention, lift_objective
from .solver import solve
from .verify import verify_strategy

__all__ = [
    "GameGraph",
    "MemoryStrategy",
    "Objective",
    "ObjectiveKind",
    "PositionalStrategy",
    "SolveResult",
    "attractor",
    "LARGame",
    "lar_reduction",
    "LiftConvention",
    "lift_objective",
    "solve",
    "verify_strategy",
]
