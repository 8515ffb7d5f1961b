"""Game arenas, objectives, strategies and solve results."""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import GameValidationError, StrategyError


@dataclass(frozen=True)
class GameGraph:
    """Vertex-step arena: vertices 0..n-1, each owned by player 0 or 1.

    Every vertex needs a successor, so all plays are infinite.
    """
    owner: Tuple[int, ...]
    edges: Tuple[Tuple[int, ...], ...]
    names: Tuple[str, ...]
    initial: Optional[int] = None

    @classmethod
    def build(
        cls,
        owner: Sequence[int],
        edges: Sequence[Sequence[int]],
        names: Optional[Sequence[str]] = None,
        initial: Optional[int] = None,
    ) -> "GameGraph":
        if names is None:
            names = [f"v{i}" for i in range(len(owner))]
        graph = cls(
            tuple(owner),
            tuple(tuple(dict.fromkeys(succ)) for succ in edges),
            tuple(str(n) for n in names),
            initial,
        )
        return graph.validate()

    def validate(self) -> "GameGraph":
        """Raises GameValidationError on dead ends, bad references or duplicate names."""
        n = len(self.owner)
        if n == 0:
            raise GameValidationError("game needs at least one vertex")
        if len(self.edges) != n or len(self.names) != n:
            raise GameValidationError(f"game lists {n} owners, {len(self.edges)} successor lists, {len(self.names)} names")
        for v, player in enumerate(self.owner):
            if player not in (0, 1):
                raise GameValidationError(f"vertex {self.names[v]} has owner {player}; owners are 0 and 1")
        for v, succ in enumerate(self.edges):
            if not succ:
                raise GameValidationError(f"vertex {self.names[v]} has no successor")
            for w in succ:
                if not 0 <= w < n:
                    raise GameValidationError(f"edge {self.names[v]} -> {w} leaves the vertex range 0..{n - 1}")
        if len(set(self.names)) != n:
            raise GameValidationError("vertex names must be unique")
        if self.initial is not None and not 0 <= self.initial < n:
            raise GameValidationError(f"initial vertex {self.initial} is not in 0..{n - 1}")
        return self

    @property
    def num_vertices(self) -> int:
        return len(self.owner)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(range(self.num_vertices))

    @cached_property
    def successors(self) -> Dict[int, Tuple[int, ...]]:
        return {v: succ for v, succ in enumerate(self.edges)}

    @cached_property
    def predecessors(self) -> Dict[int, Tuple[int, ...]]:
        preds: Dict[int, List[int]] = {v: [] for v in range(self.num_vertices)}
        for v, succ in enumerate(self.edges):
            for w in succ:
                preds[w].append(v)
        return {v: tuple(p) for v, p in preds.items()}

    @cached_property
    def _by_name(self) -> Dict[str, int]:
        return {name: v for v, name in enumerate(self.names)}

    def index_of(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise GameValidationError(f"unknown vertex {name!r}")

    def vertex_ref(self, token: Union[int, str]) -> int:
        """Resolve a vertex by name, or by index when no vertex carries that name."""
        if isinstance(token, int):
            if not 0 <= token < self.num_vertices:
                raise GameValidationError(f"vertex {token} is not in 0..{self.num_vertices - 1}")
            return token
        if token in self._by_name:
            return self._by_name[token]
        if token.isdigit():
            return self.vertex_ref(int(token))
        raise GameValidationError(f"unknown vertex {token!r}")

    def render_set(self, vertices: Iterable[int]) -> List[str]:
        return [self.names[v] for v in sorted(vertices)]


class ObjectiveKind(str, Enum):
    REACH = "reach"
    SAFETY = "safety"
    BUCHI = "buchi"
    COBUCHI = "cobuchi"
    PARITY = "parity"
    MULLER = "muller"


@dataclass(frozen=True)
class Objective:
    """Winning condition for player 0; player 1 wins exactly the other plays.

    PARITY is min-even over vertex priorities.
    """
    kind: ObjectiveKind
    vertices: FrozenSet[int] = frozenset()
    priority: Tuple[int, ...] = ()
    family: FrozenSet[FrozenSet[int]] = frozenset()

    @classmethod
    def reach(cls, vertices: Iterable[int]) -> "Objective":
        return cls(ObjectiveKind.REACH, vertices=frozenset(vertices))

    @classmethod
    def safety(cls, vertices: Iterable[int]) -> "Objective":
        return cls(ObjectiveKind.SAFETY, vertices=frozenset(vertices))

    @classmethod
    def buchi(cls, vertices: Iterable[int]) -> "Objective":
        return cls(ObjectiveKind.BUCHI, vertices=frozenset(vertices))

    @classmethod
    def cobuchi(cls, vertices: Iterable[int]) -> "Objective":
        return cls(ObjectiveKind.COBUCHI, vertices=frozenset(vertices))

    @classmethod
    def parity(cls, priority: Iterable[int]) -> "Objective":
        return cls(ObjectiveKind.PARITY, priority=tuple(priority))

    @classmethod
    def muller(cls, family: Iterable[Iterable[int]]) -> "Objective":
        return cls(ObjectiveKind.MULLER, family=frozenset(frozenset(s) for s in family))

    def validate(self, g: GameGraph) -> "Objective":
        n = g.num_vertices
        if self.kind == ObjectiveKind.PARITY:
            if len(self.priority) != n:
                raise GameValidationError(f"parity objective gives {len(self.priority)} priorities for {n} vertices")
            if any(p < 0 for p in self.priority):
                raise GameValidationError("priorities must be natural numbers")
        referenced = set(self.vertices)
        for member in self.family:
            if not member:
                raise GameValidationError("Muller family members must be non-empty")
            referenced |= member
        unknown = sorted(v for v in referenced if not 0 <= v < n)
        if unknown:
            raise GameValidationError(f"{self.kind.value} objective refers to unknown vertex {unknown[0]}")
        return self

    @property
    def inf_determined(self) -> bool:
        return self.kind not in (ObjectiveKind.REACH, ObjectiveKind.SAFETY)

    def wins(self, visited: FrozenSet[int], inf: FrozenSet[int]) -> bool:
        """Does player 0 win a play with these visited and infinitely visited vertices."""
        if self.kind == ObjectiveKind.REACH:
            return bool(visited & self.vertices)
        if self.kind == ObjectiveKind.SAFETY:
            return visited <= self.vertices
        if self.kind == ObjectiveKind.BUCHI:
            return bool(inf & self.vertices)
        if self.kind == ObjectiveKind.COBUCHI:
            return inf <= self.vertices
        if self.kind == ObjectiveKind.PARITY:
            return min(self.priority[v] for v in inf) % 2 == 0
        return frozenset(inf) in self.family

    def describe(self, g: Optional[GameGraph] = None) -> str:
        def names(vs):
            return " ".join(g.names[v] for v in sorted(vs)) if g else " ".join(str(v) for v in sorted(vs))

        if self.kind == ObjectiveKind.PARITY:
            return "parity " + " ".join(f"{v}:{p}" for v, p in enumerate(self.priority))
        if self.kind == ObjectiveKind.MULLER:
            members = sorted(self.family, key=lambda s: (len(s), sorted(s)))
            return "muller " + " ".join("{" + names(m) + "}" for m in members)
        return f"{self.kind.value} {names(self.vertices)}".rstrip()


@dataclass(frozen=True)
class PositionalStrategy:
    """Vertex -> chosen successor on the owner's vertices."""
    player: int
    moves: Mapping[int, int] = field(default_factory=dict)

    def move(self, vertex: int, memory=None) -> int:
        try:
            return self.moves[vertex]
        except KeyError:
            raise StrategyError(f"player {self.player} strategy is undefined at vertex {vertex}")

    @property
    def memory_states(self) -> int:
        return 1


@dataclass(frozen=True)
class MemoryStrategy:
    """Finite-memory strategy whose memory states are latest appearance records.

    ``records[m]`` is the record of memory state ``m``; its first entry is the
    current vertex. ``initial[v]`` is the memory when a play starts at ``v``,
    ``update[(m, w)]`` the memory after moving to ``w``, and ``moves[m]`` the
    successor chosen at memory ``m`` on the owner's vertices.
    """
    player: int
    records: Tuple[Tuple[Tuple[int, ...], int], ...]
    initial: Mapping[int, int]
    update_table: Mapping[Tuple[int, int], int]
    moves: Mapping[int, int]

    def initial_memory(self, vertex: int) -> int:
        return self.initial[vertex]

    def update(self, memory: int, vertex: int) -> int:
        return self.update_table[(memory, vertex)]

    def move(self, vertex: int, memory: int) -> int:
        try:
            return self.moves[memory]
        except KeyError:
            raise StrategyError(
                f"player {self.player} strategy is undefined at vertex {vertex} with memory {self.records[memory]}"
            )

    @property
    def memory_states(self) -> int:
        return len(self.records)


Strategy = Union[PositionalStrategy, MemoryStrategy]


@dataclass(frozen=True)
class SolveResult:
    win0: FrozenSet[int]
    win1: FrozenSet[int]
    strategy0: Strategy
    strategy1: Strategy

    def winner(self, vertex: int) -> int:
        return 0 if vertex in self.win0 else 1

    def region(self, player: int) -> FrozenSet[int]:
        return self.win0 if player == 0 else self.win1

    def strategy(self, player: int) -> Strategy:
        return self.strategy0 if player == 0 else self.strategy1
