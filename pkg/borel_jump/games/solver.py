"""Solving games for every objective kind."""

import time
from typing import Dict, FrozenSet, Optional

from ..logging_config import get_logger
from ..monitoring.metrics import metrics
from .arena import GameGraph, MemoryStrategy, Objective, ObjectiveKind, PositionalStrategy, SolveResult
from .attractor import attractor, trap_moves
from .lar import advance, lar_reduction
from .parity import buchi, zielonka

logger = get_logger(__name__)


def _complete(g: GameGraph, player: int, region: FrozenSet[int], moves: Dict[int, int]) -> PositionalStrategy:
    """Fill owned vertices of ``region`` that the construction left free (targets already reached)."""
    moves = {v: w for v, w in moves.items() if v in region and g.owner[v] == player}
    for v in sorted(region):
        if g.owner[v] == player and v not in moves:
            moves[v] = next((w for w in g.edges[v] if w in region), g.edges[v][0])
    return PositionalStrategy(player, dict(sorted(moves.items())))


def _positional(g: GameGraph, win0, win1, moves0, moves1) -> SolveResult:
    win0, win1 = frozenset(win0), frozenset(win1)
    return SolveResult(win0, win1, _complete(g, 0, win0, moves0), _complete(g, 1, win1, moves1))


def _reach(g: GameGraph, player: int, target: FrozenSet[int]) -> SolveResult:
    region, moves = attractor(g, player, target)
    rest = g.vertices - region
    stay = trap_moves(g, 1 - player, rest)
    if player == 0:
        return _positional(g, region, rest, moves, stay)
    return _positional(g, rest, region, stay, moves)


def _muller(g: GameGraph, o: Objective, max_vertices: Optional[int]) -> SolveResult:
    lar = lar_reduction(g, o, max_vertices)
    win0, win1, moves0, moves1 = zielonka(lar.graph, lar.priority, lar.graph.vertices)
    region0 = frozenset(v for v in g.vertices if lar.initial_node[v] in win0)
    region1 = g.vertices - region0

    # Memory updates follow the LAR successor relation
    index = {record: node for node, record in enumerate(lar.records)}
    update_table = {
        (node, w): index[advance(record, w)]
        for node, record in enumerate(lar.records)
        for w in g.edges[record[0][0]]
    }

    def strategy(player: int, region_nodes, moves) -> MemoryStrategy:
        chosen = {
            node: lar.projection[moves[node]]
            for node in region_nodes
            if lar.graph.owner[node] == player and node in moves
        }
        for node in region_nodes:
            if lar.graph.owner[node] == player and node not in chosen:
                chosen[node] = g.edges[lar.projection[node]][0]
        return MemoryStrategy(
            player=player,
            records=lar.records,
            initial=dict(lar.initial_node),
            update_table=update_table,
            moves=dict(sorted(chosen.items())),
        )

    return SolveResult(region0, region1, strategy(0, win0, moves0), strategy(1, win1, moves1))


def solve(g: GameGraph, o: Objective, max_vertices: Optional[int] = None) -> SolveResult:
    """Winning regions of both players with strategies on them.

    Positional strategies for every kind except MULLER, which gets a
    finite-memory strategy over latest appearance records.

    Raises:
        GameValidationError: If the objective does not fit the arena
        StateGuardExceeded: If a Muller arena exceeds the LAR guard
    """
    o.validate(g)
    started = time.perf_counter()
    everything = g.vertices
    if o.kind == ObjectiveKind.REACH:
        result = _reach(g, 0, o.vertices)
    elif o.kind == ObjectiveKind.SAFETY:
        result = _reach(g, 1, everything - o.vertices)
    elif o.kind == ObjectiveKind.BUCHI:
        result = _positional(g, *buchi(g, 0, o.vertices, everything))
    elif o.kind == ObjectiveKind.COBUCHI:
        # Player 1 wants to leave F infinitely often
        result = _positional(g, *buchi(g, 1, everything - o.vertices, everything))
    elif o.kind == ObjectiveKind.PARITY:
        result = _positional(g, *zielonka(g, o.priority, everything))
    else:
        result = _muller(g, o, max_vertices)

    elapsed = time.perf_counter() - started
    metrics.increment_counter("borel_games_solved_total", {"objective": o.kind.value})
    metrics.observe_histogram("borel_solve_seconds", elapsed, {"objective": o.kind.value})
    logger.debug(
        f"Solved {o.kind.value} game: |win0|={len(result.win0)}, |win1|={len(result.win1)} in {elapsed:.4f}s",
        extra={"objective": o.kind.value, "vertices": g.num_vertices},
    )
    return result
