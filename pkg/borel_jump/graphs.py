"""Graph helpers shared by automata and games: reachability, SCCs and loops.

A *loop* is a non-empty node set whose induced subgraph is strongly connected
and in which every node has an induced outgoing edge. Loops are exactly the
sets of nodes an infinite path can visit infinitely often.
"""

from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set

import networkx as nx

from .errors import StateGuardExceeded
from .logging_config import get_logger
from .monitoring.metrics import metrics

logger = get_logger(__name__)

Successors = Mapping[int, Sequence[int]]


def to_digraph(successors: Successors, nodes: Optional[Iterable[int]] = None) -> nx.DiGraph:
    """Build a DiGraph restricted to ``nodes`` (all nodes when None)."""
    graph = nx.DiGraph()
    keep = set(successors) if nodes is None else set(nodes)
    graph.add_nodes_from(sorted(keep))
    for node in keep:
        for target in successors[node]:
            if target in keep:
                graph.add_edge(node, target)
    return graph


def reachable(successors: Successors, sources: Iterable[int], within: Optional[Set[int]] = None) -> Set[int]:
    """Nodes reachable from ``sources`` (inclusive), optionally staying in ``within``."""
    seen: Set[int] = set()
    queue = deque()
    for source in sources:
        if (within is None or source in within) and source not in seen:
            seen.add(source)
            queue.append(source)
    while queue:
        node = queue.popleft()
        for target in successors[node]:
            if target not in seen and (within is None or target in within):
                seen.add(target)
                queue.append(target)
    return seen


def shortest_path(successors: Successors, source: int, targets: Set[int], within: Optional[Set[int]] = None) -> Optional[List[int]]:
    """Breadth-first node path from ``source`` to the nearest node in ``targets``.

    Successors are explored in their listed order, so the result is deterministic.
    """
    if source in targets:
        return [source]
    parent: Dict[int, int] = {source: source}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for target in successors[node]:
            if target in parent or (within is not None and target not in within):
                continue
            parent[target] = node
            if target in targets:
                path = [target]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                return list(reversed(path))
            queue.append(target)
    return None


def strongly_connected_components(successors: Successors, nodes: Optional[Iterable[int]] = None) -> List[FrozenSet[int]]:
    """SCCs of the subgraph induced on ``nodes``, sorted by smallest member."""
    graph = to_digraph(successors, nodes)
    components = [frozenset(c) for c in nx.strongly_connected_components(graph)]
    return sorted(components, key=min)


def is_loop(successors: Successors, nodes: FrozenSet[int]) -> bool:
    """True iff ``nodes`` is non-empty, strongly connected and every node has an induced edge."""
    if not nodes:
        return False
    graph = to_digraph(successors, nodes)
    if any(graph.out_degree(node) == 0 for node in nodes):
        return False
    return nx.is_strongly_connected(graph)


def loop_sort_key(nodes: FrozenSet[int]):
    return (len(nodes), tuple(sorted(nodes)))


def enumerate_loops(
    successors: Successors,
    sources: Iterable[int],
    max_states: int,
    what: str = "graph",
) -> List[FrozenSet[int]]:
    """All loops reachable from ``sources``.

    SCC decomposition first; inside each SCC the loops are the SCC itself (when
    it has an internal edge) plus, recursively, the loops of the SCCs left after
    removing one node. Results are memoized per node set.

    Raises:
        StateGuardExceeded: If a reachable SCC is larger than ``max_states``
    """
    live = reachable(successors, sources)
    components = strongly_connected_components(successors, live)
    largest = max((len(c) for c in components), default=0)
    if largest > max_states:
        metrics.increment_counter("borel_guard_trips_total", {"what": "loops"})
        logger.warning(f"Loop enumeration refused: SCC of {largest} states in {what}, guard {max_states}")
        raise StateGuardExceeded(f"largest strongly connected component of {what}", largest, max_states)

    found: Set[FrozenSet[int]] = set()
    visited: Set[FrozenSet[int]] = set()

    def explore(component: FrozenSet[int]):
        if component in visited:
            return
        visited.add(component)
        if is_loop(successors, component):
            found.add(component)
        if len(component) == 1:
            return
        for node in sorted(component):
            for sub in strongly_connected_components(successors, component - {node}):
                explore(sub)

    for component in components:
        explore(component)

    loops = sorted(found, key=loop_sort_key)
    logger.debug(f"Enumerated {len(loops)} loops in {what}", extra={"loops": len(loops), "states": len(live)})
    return loops
