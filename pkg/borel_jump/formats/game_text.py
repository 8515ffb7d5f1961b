"""Line-oriented text format for games.

    vertex 0 name v0 owner 0 succ 1,2
    vertex 1 name v1 owner 1 succ 3
    ...
    objective reach 3
    initial 0

Objective lines take the same shapes as automaton acceptance lines:
``reach 3``, ``safety 0 1``, ``buchi 2``, ``cobuchi 0``, ``parity 0:1 1:2``
or ``muller {0 1 2 3} {0 2 3}``. Vertices in objectives may be given by id
or by name.
"""

import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..errors import GameValidationError, ParseError
from ..games.arena import GameGraph, Objective, ObjectiveKind

_SET = re.compile(r"\{([^{}]*)\}")


def _int(token: str, what: str, line: int, path: Optional[str]) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line, path)


def _parse_vertex(tokens: List[str], line: int, path: Optional[str]) -> Tuple[int, Optional[str], int, List[int]]:
    ident = _int(tokens[0], "vertex id", line, path) if tokens else None
    if ident is None:
        raise ParseError("vertex line needs an id", line, path)
    name = None
    owner = None
    succ = None
    rest = tokens[1:]
    while rest:
        if len(rest) < 2:
            raise ParseError(f"dangling {rest[0]!r} on vertex line", line, path)
        key, value, rest = rest[0], rest[1], rest[2:]
        if key == "name":
            name = value
        elif key == "owner":
            owner = _int(value, "owner", line, path)
        elif key == "succ":
            # successors may be spread over several tokens: "succ 1, 2" or "succ 1 2"
            parts = [value] + rest
            rest = []
            succ = [_int(t, "successor", line, path) for t in ",".join(parts).replace(" ", ",").split(",") if t]
        else:
            raise ParseError(f"unknown vertex attribute {key!r}", line, path)
    if owner is None:
        raise ParseError(f"vertex {ident} has no owner", line, path)
    if succ is None:
        raise ParseError(f"vertex {ident} has no succ list", line, path)
    return ident, name, owner, succ


def _parse_objective(text: str, g: GameGraph, line: int, path: Optional[str]) -> Objective:
    parts = text.split(None, 1)
    if not parts:
        raise ParseError("empty objective", line, path)
    try:
        kind = ObjectiveKind(parts[0].lower())
    except ValueError:
        raise ParseError(f"unknown objective {parts[0]!r}", line, path)
    rest = parts[1] if len(parts) > 1 else ""

    def ref(token: str) -> int:
        try:
            return g.vertex_ref(token)
        except GameValidationError as e:
            raise ParseError(str(e), line, path)

    if kind == ObjectiveKind.MULLER:
        leftover = _SET.sub(" ", rest).strip()
        if leftover:
            raise ParseError(f"muller family members must be written as {{...}}, found {leftover!r}", line, path)
        return Objective.muller([ref(t) for t in member.split()] for member in _SET.findall(rest))
    if kind == ObjectiveKind.PARITY:
        priorities: Dict[int, int] = {}
        for token in rest.split():
            vertex, sep, value = token.rpartition(":")
            if not sep:
                raise ParseError(f"parity entries are vertex:priority, got {token!r}", line, path)
            v = ref(vertex)
            if v in priorities:
                raise ParseError(f"vertex {vertex} has two priorities", line, path)
            priorities[v] = _int(value, "priority", line, path)
        missing = sorted(g.vertices - set(priorities))
        if missing:
            raise ParseError(f"vertex {g.names[missing[0]]} has no priority", line, path)
        return Objective.parity(priorities[v] for v in range(g.num_vertices))
    return Objective(kind, vertices=frozenset(ref(t) for t in rest.split()))


def parse_game(text: str, path: Optional[str] = None) -> Tuple[GameGraph, Objective]:
    """Parse a game file.

    Raises:
        ParseError: With the 1-based line number of the offending line
    """
    vertices: Dict[int, Tuple[Optional[str], int, List[int], int]] = {}
    objective_line: Optional[Tuple[str, int]] = None
    initial: Optional[Tuple[str, int]] = None

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        keyword, _, rest = content.partition(" ")
        keyword = keyword.lower()
        if keyword == "vertex":
            ident, name, owner, succ = _parse_vertex(rest.split(), number, path)
            if ident in vertices:
                raise ParseError(f"vertex {ident} is declared twice", number, path)
            vertices[ident] = (name, owner, succ, number)
        elif keyword == "objective":
            if objective_line is not None:
                raise ParseError("a game has exactly one objective line", number, path)
            objective_line = (rest.strip(), number)
        elif keyword == "initial":
            if initial is not None:
                raise ParseError("duplicate initial line", number, path)
            initial = (rest.strip(), number)
        else:
            raise ParseError(f"expected vertex, objective or initial, got {content!r}", number, path)

    if not vertices:
        raise ParseError("game declares no vertices", None, path)
    if sorted(vertices) != list(range(len(vertices))):
        raise ParseError(f"vertex ids must be 0..{len(vertices) - 1}", None, path)
    if objective_line is None:
        raise ParseError("missing objective line", None, path)

    n = len(vertices)
    for ident, (_, _, succ, number) in vertices.items():
        for w in succ:
            if not 0 <= w < n:
                raise ParseError(f"vertex {ident} has successor {w} outside 0..{n - 1}", number, path)
    try:
        g = GameGraph.build(
            owner=[vertices[v][1] for v in range(n)],
            edges=[vertices[v][2] for v in range(n)],
            names=[vertices[v][0] if vertices[v][0] is not None else f"v{v}" for v in range(n)],
        )
    except GameValidationError as e:
        raise ParseError(str(e), None, path)

    if initial is not None:
        token, number = initial
        try:
            g = GameGraph(g.owner, g.edges, g.names, g.vertex_ref(token))
        except GameValidationError as e:
            raise ParseError(str(e), number, path)

    text_objective, number = objective_line
    objective = _parse_objective(text_objective, g, number, path)
    try:
        objective.validate(g)
    except GameValidationError as e:
        raise ParseError(str(e), number, path)
    return g, objective


def read_game(path: Union[str, Path]) -> Tuple[GameGraph, Objective]:
    path = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read game: {e.strerror}", None, path)
    return parse_game(text, path)


def dump_game(g: GameGraph, o: Objective) -> str:
    """Text form of ``(g, o)``; vertices in objectives are written by id."""
    lines = [
        f"vertex {v} name {g.names[v]} owner {g.owner[v]} succ {','.join(str(w) for w in g.edges[v])}"
        for v in range(g.num_vertices)
    ]
    lines.append(f"objective {o.describe()}")
    if g.initial is not None:
        lines.append(f"initial {g.initial}")
    return "\n".join(lines) + "\n"
