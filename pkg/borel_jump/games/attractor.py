"""Attractors and traps."""

from collections import deque
from typing import AbstractSet, Dict, FrozenSet, Iterable, Optional, Tuple

from .arena import GameGraph


def attractor(
    g: GameGraph,
    player: int,
    target: Iterable[int],
    within: Optional[AbstractSet[int]] = None,
) -> Tuple[FrozenSet[int], Dict[int, int]]:
    """Vertices from which ``player`` forces a visit to ``target`` inside ``within``.

    Backward breadth-first fixpoint with successor counters for the opponent.
    The strategy sends each owned attractor vertex outside ``target`` to a
    successor added strictly earlier, so following it reaches the target.
    """
    arena = g.vertices if within is None else frozenset(within)
    region = {v for v in target if v in arena}
    strategy: Dict[int, int] = {}
    remaining = {v: sum(1 for w in g.edges[v] if w in arena) for v in arena}
    queue = deque(sorted(region))
    while queue:
        w = queue.popleft()
        for v in g.predecessors[w]:
            if v not in arena or v in region:
                continue
            if g.owner[v] == player:
                region.add(v)
                strategy[v] = w
                queue.append(v)
            else:
                remaining[v] -= 1
                if remaining[v] == 0:
                    region.add(v)
                    queue.append(v)
    return frozenset(region), strategy


def trap_moves(g: GameGraph, player: int, region: AbstractSet[int]) -> Dict[int, int]:
    """For ``player``'s vertices in ``region``, the first successor staying in it."""
    moves = {}
    for v in sorted(region):
        if g.owner[v] != player:
            continue
        for w in g.edges[v]:
            if w in region:
                moves[v] = w
                break
    return moves
