"""Latest appearance records: Muller games reduced to min-even parity games."""

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..config import config
from ..errors import GameValidationError, StateGuardExceeded
from ..logging_config import get_logger
from ..monitoring.metrics import metrics
from .arena import GameGraph, Objective, ObjectiveKind

logger = get_logger(__name__)

# (permutation of all vertices, most recent first; hit position)
Record = Tuple[Tuple[int, ...], int]


@dataclass(frozen=True)
class LARGame:
    """Parity game over (vertex, record) nodes.

    ``projection[node]`` is the original vertex, ``records[node]`` its record
    and ``initial_node[v]`` the node a play from ``v`` starts in.
    """
    graph: GameGraph
    priority: Tuple[int, ...]
    projection: Tuple[int, ...]
    records: Tuple[Record, ...]
    initial_node: Dict[int, int]

    @property
    def objective(self) -> Objective:
        return Objective.parity(self.priority)


def initial_record(g: GameGraph, vertex: int) -> Record:
    return (vertex,) + tuple(v for v in range(g.num_vertices) if v != vertex), 0


def advance(record: Record, vertex: int) -> Record:
    """Move ``vertex`` to the front; the hit is its old position."""
    perm = record[0]
    hit = perm.index(vertex)
    return (vertex,) + perm[:hit] + perm[hit + 1:], hit


def record_priority(record: Record, n: int, family) -> int:
    """2(n-1-h), plus one when the hit set {perm[0..h]} is not in the family."""
    perm, hit = record
    hit_set = frozenset(perm[:hit + 1])
    return 2 * (n - 1 - hit) + (0 if hit_set in family else 1)


def lar_reduction(g: GameGraph, m: Objective, max_vertices: Optional[int] = None) -> LARGame:
    """Reachable part of the arena times latest appearance records.

    The least priority seen infinitely often comes from the largest hit
    position seen infinitely often, whose hit set is exactly the inf-set.

    Raises:
        GameValidationError: If ``m`` is not a Muller objective
        StateGuardExceeded: If the arena has more vertices than the guard
    """
    if m.kind != ObjectiveKind.MULLER:
        raise GameValidationError(f"LAR reduction needs a Muller objective, got {m.kind.value}")
    m.validate(g)
    cap = config.LAR_MAX_VERTICES if max_vertices is None else max_vertices
    n = g.num_vertices
    if n > cap:
        metrics.increment_counter("borel_guard_trips_total", {"what": "lar"})
        logger.warning(f"LAR reduction refused: {n} vertices, guard {cap}")
        raise StateGuardExceeded("Muller arena for the LAR reduction", n, cap)

    index: Dict[Record, int] = {}
    records: List[Record] = []
    queue = deque()
    initial_node = {}
    for v in range(n):
        record = initial_record(g, v)
        if record not in index:
            index[record] = len(records)
            records.append(record)
            queue.append(record)
        initial_node[v] = index[record]

    edges: List[List[int]] = []
    while queue:
        record = queue.popleft()
        row = []
        for w in g.edges[record[0][0]]:
            following = advance(record, w)
            if following not in index:
                index[following] = len(records)
                records.append(following)
                queue.append(following)
            row.append(index[following])
        edges.append(row)

    projection = tuple(r[0][0] for r in records)
    graph = GameGraph.build(
        owner=[g.owner[v] for v in projection],
        edges=edges,
        names=[f"{g.names[r[0][0]]}[{','.join(str(v) for v in r[0])}/{r[1]}]" for r in records],
    )
    priority = tuple(record_priority(r, n, m.family) for r in records)
    logger.debug(f"LAR reduction: {n} vertices -> {len(records)} nodes", extra={"vertices": n, "states": len(records)})
    return LARGame(graph, priority, projection, tuple(records), initial_node)
