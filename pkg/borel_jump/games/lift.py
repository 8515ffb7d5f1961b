"""Lifting a reachability objective to the Muller objective of an expanded arena."""

from enum import Enum
from itertools import combinations
from typing import Iterable, Union

from ..errors import GameValidationError
from ..logging_config import get_logger
from .arena import GameGraph, Objective

logger = get_logger(__name__)


class LiftConvention(str, Enum):
    """How the reach set of the base arena becomes a Muller family.

    PAPER_EXACT takes the single member V(base); MEETS_R takes every base
    vertex set that meets the reach set.
    """
    PAPER_EXACT = "paper"
    MEETS_R = "meets-r"


def lift_objective(
    g: GameGraph,
    g_expanded: GameGraph,
    r: Iterable[Union[int, str]],
    convention: Union[LiftConvention, str] = LiftConvention.PAPER_EXACT,
) -> Objective:
    """Muller objective over ``g_expanded`` induced by reaching ``r`` in ``g``.

    Vertices are matched by name. ``r`` may list names or indices of ``g``.

    Raises:
        GameValidationError: If a vertex of ``g`` is missing from ``g_expanded`` or ``r`` leaves ``g``
    """
    convention = LiftConvention(convention)
    missing = [name for name in g.names if name not in g_expanded.names]
    if missing:
        raise GameValidationError(f"expanded arena lacks base vertices {', '.join(missing)}")
    reach = {g.vertex_ref(v) for v in r}
    base = [g_expanded.index_of(name) for name in g.names]
    reach_expanded = {g_expanded.index_of(g.names[v]) for v in reach}

    if convention == LiftConvention.PAPER_EXACT:
        family = [frozenset(base)]
    else:
        family = [
            frozenset(subset)
            for size in range(1, len(base) + 1)
            for subset in combinations(sorted(base), size)
            if reach_expanded & set(subset)
        ]
    logger.debug(f"Lifted reach {sorted(reach)} with convention {convention.value}: {len(family)} family members")
    return Objective.muller(family).validate(g_expanded)
