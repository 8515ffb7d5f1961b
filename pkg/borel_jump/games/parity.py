"""Recursive parity solver (min-even) and the Buchi recurrence construction.

Both work on a sub-arena ``within`` that is a trap for nobody in particular
but in which every vertex keeps a successor; the recursion only ever passes
complements of attractors, which have that property.
"""

from typing import AbstractSet, Dict, FrozenSet, Sequence, Tuple

from .arena import GameGraph
from .attractor import attractor, trap_moves

Regions = Tuple[FrozenSet[int], FrozenSet[int], Dict[int, int], Dict[int, int]]


def _pack(player: int, mine: FrozenSet[int], theirs: FrozenSet[int], my_moves: Dict[int, int], their_moves: Dict[int, int]) -> Regions:
    if player == 0:
        return mine, theirs, my_moves, their_moves
    return theirs, mine, their_moves, my_moves


def zielonka(g: GameGraph, priority: Sequence[int], within: AbstractSet[int]) -> Regions:
    """Winning regions and positional strategies (win0, win1, moves0, moves1) on ``within``."""
    within = frozenset(within)
    if not within:
        return frozenset(), frozenset(), {}, {}

    p = min(priority[v] for v in within)
    player = p % 2
    opponent = 1 - player
    top = {v for v in within if priority[v] == p}
    attracted, attract_moves = attractor(g, player, top, within)

    sub = zielonka(g, priority, within - attracted)
    sub_mine = sub[player]
    sub_theirs = sub[opponent]
    sub_my_moves = sub[2 + player]
    sub_their_moves = sub[2 + opponent]

    if not sub_theirs:
        moves = dict(sub_my_moves)
        moves.update(attract_moves)
        for v, w in trap_moves(g, player, within).items():
            if v in top:
                moves[v] = w
        return _pack(player, within, frozenset(), moves, {})

    lost, lost_moves = attractor(g, opponent, sub_theirs, within)
    rest = zielonka(g, priority, within - lost)
    their_moves = dict(rest[2 + opponent])
    their_moves.update(sub_their_moves)
    their_moves.update(lost_moves)
    return _pack(player, rest[player], rest[opponent] | lost, dict(rest[2 + player]), their_moves)


def buchi(g: GameGraph, player: int, accepting: AbstractSet[int], within: AbstractSet[int]) -> Regions:
    """``player`` wants to visit ``accepting`` infinitely often.

    Repeatedly removes the opponent's attractor of the region from which
    ``player`` cannot even reach ``accepting`` once.
    """
    opponent = 1 - player
    arena = frozenset(within)
    theirs = set()
    their_moves: Dict[int, int] = {}
    while True:
        reach, reach_moves = attractor(g, player, accepting & arena, arena)
        escape = arena - reach
        if not escape:
            break
        lost, lost_moves = attractor(g, opponent, escape, arena)
        their_moves.update(trap_moves(g, opponent, escape))
        their_moves.update(lost_moves)
        theirs |= lost
        arena = arena - lost

    my_moves = dict(reach_moves) if arena else {}
    for v, w in trap_moves(g, player, arena).items():
        if v in accepting:
            my_moves[v] = w
    return _pack(player, arena, frozenset(theirs), my_moves, their_moves)
