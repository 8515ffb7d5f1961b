"""Independent check that solver strategies win on their regions.

For each player the arena is restricted by that player's strategy (times its
memory, for finite-memory strategies) starting from every vertex of the
player's region. The check fails if a play can leave the region or if some
loop of the restricted graph is won by the opponent. A losing loop with
vertex set S exists iff some non-trivial SCC of the graph restricted to S
covers all of S, so no explicit lasso enumeration is needed.

Reach and safety plays are decided at the first visit to the target or
unsafe set. Those vertices are absorbing and the strategy is never
consulted past them.
"""

from collections import deque
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Set, Tuple

from .. import graphs
from ..logging_config import get_logger
from ..monitoring.metrics import metrics
from .arena import GameGraph, MemoryStrategy, Objective, ObjectiveKind, SolveResult

logger = get_logger(__name__)


class _Restricted:
    """Strategy-restricted play graph: integer nodes projecting to vertices."""

    def __init__(self, g: GameGraph, player: int, strategy, region: FrozenSet[int],
                 settled: FrozenSet[int] = frozenset()):
        self.projection: Dict[int, int] = {}
        self.successors: Dict[int, List[int]] = {}
        self.escaped = False
        self.illegal = False

        keys: Dict[Tuple[int, int], int] = {}

        def node(vertex: int, memory: int) -> int:
            key = (vertex, memory)
            if key not in keys:
                keys[key] = len(keys)
                self.projection[keys[key]] = vertex
                queue.append(key)
            return keys[key]

        with_memory = isinstance(strategy, MemoryStrategy)
        queue = deque()
        for v in sorted(region):
            node(v, strategy.initial_memory(v) if with_memory else 0)

        while queue:
            vertex, memory = queue.popleft()
            current = keys[(vertex, memory)]
            if vertex in settled:
                self.successors[current] = []
                continue
            if vertex not in region:
                self.escaped = True
                self.successors[current] = []
                continue
            if g.owner[vertex] == player:
                choice = strategy.move(vertex, memory)
                if choice not in g.edges[vertex]:
                    self.illegal = True
                    choice = g.edges[vertex][0]
                targets = [choice]
            else:
                targets = list(g.edges[vertex])
            self.successors[current] = [
                node(w, strategy.update(memory, w) if with_memory else 0) for w in targets
            ]

    def nodes_where(self, keep: Callable[[int], bool]) -> Set[int]:
        return {n for n, v in self.projection.items() if keep(v)}

    def has_loop_covering(self, vertices: FrozenSet[int]) -> bool:
        inside = self.nodes_where(lambda v: v in vertices)
        for component in graphs.strongly_connected_components(self.successors, inside):
            if graphs.is_loop(self.successors, component) and {self.projection[n] for n in component} == vertices:
                return True
        return False

    def has_cycle_within(self, vertices: FrozenSet[int]) -> bool:
        inside = self.nodes_where(lambda v: v in vertices)
        return any(
            graphs.is_loop(self.successors, component)
            for component in graphs.strongly_connected_components(self.successors, inside)
        )


def _settling_vertices(g: GameGraph, o: Objective) -> FrozenSet[int]:
    """Vertices whose first visit decides a reach or safety play."""
    if o.kind == ObjectiveKind.REACH:
        return o.vertices
    if o.kind == ObjectiveKind.SAFETY:
        return g.vertices - o.vertices
    return frozenset()


def _priorities(g: GameGraph, o: Objective) -> Tuple[int, ...]:
    if o.kind == ObjectiveKind.BUCHI:
        return tuple(0 if v in o.vertices else 1 for v in range(g.num_vertices))
    if o.kind == ObjectiveKind.COBUCHI:
        return tuple(2 if v in o.vertices else 1 for v in range(g.num_vertices))
    return o.priority


def _player_wins(g: GameGraph, o: Objective, player: int, restricted: _Restricted) -> bool:
    everything = g.vertices
    if o.kind in (ObjectiveKind.REACH, ObjectiveKind.SAFETY):
        good = _settling_vertices(g, o)
        # Player 0 on REACH and player 1 on SAFETY must hit ``good``; the other side must avoid it
        if (o.kind == ObjectiveKind.REACH) == (player == 0):
            return not restricted.has_cycle_within(everything - good)
        return not restricted.nodes_where(lambda v: v in good)

    if o.kind == ObjectiveKind.MULLER:
        if player == 1:
            return not any(restricted.has_loop_covering(member) for member in o.family)
        seen = sorted(set(restricted.projection.values()))
        for size in range(1, len(seen) + 1):
            for subset in combinations(seen, size):
                candidate = frozenset(subset)
                if candidate not in o.family and restricted.has_loop_covering(candidate):
                    return False
        return True

    priority = _priorities(g, o)
    losing_parity = 1 - player
    for d in sorted({priority[v] for v in set(restricted.projection.values())}):
        if d % 2 != losing_parity:
            continue
        at_least = frozenset(v for v in everything if priority[v] >= d)
        inside = restricted.nodes_where(lambda v: v in at_least)
        for component in graphs.strongly_connected_components(restricted.successors, inside):
            if graphs.is_loop(restricted.successors, component) and any(
                priority[restricted.projection[n]] == d for n in component
            ):
                return False
    return True


def verify_strategy(g: GameGraph, o: Objective, result: SolveResult) -> bool:
    """True iff the regions partition V and both strategies win on their regions.

    Raises:
        StrategyError: If a strategy is undefined on an owned winning vertex
    """
    o.validate(g)
    ok = not (result.win0 & result.win1) and (result.win0 | result.win1) == g.vertices
    if ok:
        for player in (0, 1):
            region = result.region(player)
            if not region:
                continue
            restricted = _Restricted(g, player, result.strategy(player), region, _settling_vertices(g, o))
            if restricted.escaped or restricted.illegal or not _player_wins(g, o, player, restricted):
                logger.warning(
                    f"Strategy of player {player} does not win its region for {o.describe(g)}",
                    extra={"objective": o.kind.value, "vertices": g.num_vertices},
                )
                ok = False
                break
    else:
        logger.warning("Winning regions do not partition the arena")
    metrics.increment_counter("borel_strategy_checks_total", {"outcome": "pass" if ok else "fail"})
    return ok
