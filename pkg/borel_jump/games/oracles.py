"""Brute-force game oracles, independent of the production solvers.

* positional enumeration: all positional strategy pairs, each play evaluated on its lasso
* LAR enumeration: player-0 positional strategies on the LAR expansion, each checked
  against all opponent behaviour by a cycle search
* McNaughton's recursive algorithm for Muller games, with a naive fixpoint attractor
"""

from itertools import product
from typing import Dict, FrozenSet, List, Set, Tuple

import networkx as nx

from ..errors import GameValidationError, StateGuardExceeded
from .arena import GameGraph, Objective, ObjectiveKind
from .lar import lar_reduction

DEFAULT_STRATEGY_CAP = 1 << 14


def _choices(g: GameGraph, player: int) -> List[List[Tuple[int, int]]]:
    return [[(v, w) for w in g.edges[v]] for v in range(g.num_vertices) if g.owner[v] == player]


def _count(choices: List[List[Tuple[int, int]]]) -> int:
    total = 1
    for options in choices:
        total *= len(options)
    return total


def play_outcome(g: GameGraph, o: Objective, start: int, moves: Dict[int, int]) -> bool:
    """Does player 0 win the unique play from ``start`` under a full positional profile."""
    order: Dict[int, int] = {}
    path: List[int] = []
    v = start
    while v not in order:
        order[v] = len(path)
        path.append(v)
        v = moves[v]
    return o.wins(frozenset(path), frozenset(path[order[v]:]))


def positional_oracle(g: GameGraph, o: Objective, cap: int = DEFAULT_STRATEGY_CAP) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Winning regions by enumerating every positional strategy pair.

    Exact for objectives with positional determinacy (reach, safety, Buchi,
    co-Buchi, parity).

    Raises:
        StateGuardExceeded: If the number of strategy pairs exceeds ``cap``
    """
    mine, theirs = _choices(g, 0), _choices(g, 1)
    pairs = _count(mine) * _count(theirs)
    if pairs > cap:
        raise StateGuardExceeded("positional strategy pairs", pairs, cap)
    win0: Set[int] = set()
    for sigma in product(*mine):
        moves0 = dict(sigma)
        unbeaten = set(g.vertices)
        for tau in product(*theirs):
            moves = dict(moves0)
            moves.update(tau)
            unbeaten = {v for v in unbeaten if play_outcome(g, o, v, moves)}
            if not unbeaten:
                break
        win0 |= unbeaten
    return frozenset(win0), g.vertices - frozenset(win0)


def _opponent_can_win(graph: nx.DiGraph, priority) -> Set[int]:
    """Nodes from which some path reaches a cycle whose least priority is odd."""
    bad: Set[int] = set()
    for d in sorted({priority[n] for n in graph.nodes}):
        if d % 2 == 0:
            continue
        high = graph.subgraph([n for n in graph.nodes if priority[n] >= d])
        for component in nx.strongly_connected_components(high):
            cyclic = len(component) > 1 or high.has_edge(next(iter(component)), next(iter(component)))
            if cyclic and any(priority[n] == d for n in component):
                bad |= set(component)
    reverse = graph.reverse(copy=False)
    reaching = set()
    for n in bad:
        reaching |= nx.descendants(reverse, n) | {n}
    return reaching


def lar_oracle(g: GameGraph, o: Objective, cap: int = DEFAULT_STRATEGY_CAP) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Muller regions via positional player-0 strategies on the LAR expansion.

    Raises:
        StateGuardExceeded: If player 0 has more than ``cap`` positional strategies
    """
    lar = lar_reduction(g, o)
    arena = lar.graph
    mine = [options for options in _choices(arena, 0) if len(options) > 1]
    count = _count(mine)
    if count > cap:
        raise StateGuardExceeded("positional LAR strategies", count, cap)

    fixed = {v: arena.edges[v][0] for v in range(arena.num_vertices) if arena.owner[v] == 0}
    winning: Set[int] = set()
    for sigma in product(*mine):
        moves = dict(fixed)
        moves.update(sigma)
        graph = nx.DiGraph()
        graph.add_nodes_from(range(arena.num_vertices))
        for v in range(arena.num_vertices):
            targets = [moves[v]] if arena.owner[v] == 0 else arena.edges[v]
            graph.add_edges_from((v, w) for w in targets)
        losing = _opponent_can_win(graph, lar.priority)
        winning |= {v for v in g.vertices if lar.initial_node[v] not in losing}
    return frozenset(winning), g.vertices - frozenset(winning)


def _attract(g: GameGraph, player: int, target: Set[int], arena: Set[int]) -> Set[int]:
    region = set(target) & arena
    while True:
        grown = set(region)
        for v in arena - region:
            inside = [w for w in g.edges[v] if w in arena]
            if g.owner[v] == player and any(w in region for w in inside):
                grown.add(v)
            elif g.owner[v] != player and inside and all(w in region for w in inside):
                grown.add(v)
        if grown == region:
            return region
        region = grown


def _mcnaughton(g: GameGraph, family, arena: Set[int]) -> Tuple[Set[int], Set[int]]:
    """(win0, win1) on ``arena``; the top player wins if every vertex of the arena recurs."""
    if not arena:
        return set(), set()
    top = 0 if frozenset(arena) in family else 1
    other = 1 - top
    for vertex in sorted(arena):
        attracted = _attract(g, top, {vertex}, arena)
        sub = _mcnaughton(g, family, arena - attracted)
        if sub[other]:
            lost = _attract(g, other, sub[other], arena)
            rest = _mcnaughton(g, family, arena - lost)
            regions = {top: rest[top], other: rest[other] | lost}
            return regions[0], regions[1]
    regions = {top: set(arena), other: set()}
    return regions[0], regions[1]


def mcnaughton_oracle(g: GameGraph, o: Objective) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Muller regions by McNaughton's recursion over vertex sets."""
    if o.kind != ObjectiveKind.MULLER:
        raise GameValidationError("McNaughton's algorithm needs a Muller objective")
    win0, win1 = _mcnaughton(g, o.family, set(g.vertices))
    return frozenset(win0), frozenset(win1)
