"""Reader and writer for the PGSolver line format, read as min-even parity.

    parity 3;
    0 1 0 1,2 "v0";
    1 2 1 0;
    ...
"""

import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..errors import GameValidationError, ParseError
from ..games.arena import GameGraph, Objective, ObjectiveKind

_NODE = re.compile(r'^(\d+)\s+(\d+)\s+([01])\s+([\d,\s]+?)(?:\s+"([^"]*)")?$')


def parse_pgsolver(text: str, path: Optional[str] = None) -> Tuple[GameGraph, Objective]:
    """Parse node lines ``<id> <priority> <owner> <succ,...> ["name"];``.

    An optional ``parity <n>;`` header gives the largest id, and an optional
    ``start <id>;`` line marks the initial vertex. Ids must cover 0..n-1.

    Raises:
        ParseError: With the 1-based line number of the offending line
    """
    nodes: Dict[int, Tuple[int, int, List[int], Optional[str], int]] = {}
    declared: Optional[int] = None
    start: Optional[int] = None

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.strip()
        if not content or content.startswith("#"):
            continue
        if not content.endswith(";"):
            raise ParseError("line must end with ';'", number, path)
        content = content[:-1].strip()
        if content.startswith("parity "):
            if declared is not None or nodes:
                raise ParseError("parity header must come first and only once", number, path)
            try:
                declared = int(content.split()[1])
            except (IndexError, ValueError):
                raise ParseError(f"malformed header {content!r}", number, path)
            continue
        if content.startswith("start "):
            try:
                start = int(content.split()[1])
            except (IndexError, ValueError):
                raise ParseError(f"malformed start line {content!r}", number, path)
            continue
        match = _NODE.match(content)
        if not match:
            raise ParseError(f"expected '<id> <priority> <owner> <succ,...> [\"name\"]', got {content!r}", number, path)
        ident, priority, owner = int(match.group(1)), int(match.group(2)), int(match.group(3))
        succ = [int(t) for t in re.split(r"[,\s]+", match.group(4).strip()) if t]
        if ident in nodes:
            raise ParseError(f"node {ident} is declared twice", number, path)
        nodes[ident] = (priority, owner, succ, match.group(5), number)

    if not nodes:
        raise ParseError("game declares no nodes", None, path)
    n = len(nodes)
    if sorted(nodes) != list(range(n)):
        raise ParseError(f"node ids must be 0..{n - 1}", None, path)
    if declared is not None and declared != n - 1:
        raise ParseError(f"header announces ids up to {declared} but nodes go up to {n - 1}", None, path)
    for ident, (_, _, succ, _, number) in nodes.items():
        for w in succ:
            if not 0 <= w < n:
                raise ParseError(f"node {ident} has successor {w} outside 0..{n - 1}", number, path)

    names = [nodes[v][3] or f"v{v}" for v in range(n)]
    try:
        g = GameGraph.build(
            owner=[nodes[v][1] for v in range(n)],
            edges=[nodes[v][2] for v in range(n)],
            names=names,
            initial=start,
        )
    except GameValidationError as e:
        raise ParseError(str(e), None, path)
    return g, Objective.parity(nodes[v][0] for v in range(n)).validate(g)


def read_pgsolver(path: Union[str, Path]) -> Tuple[GameGraph, Objective]:
    path = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read game: {e.strerror}", None, path)
    return parse_pgsolver(text, path)


def dump_pgsolver(g: GameGraph, o: Objective) -> str:
    if o.kind != ObjectiveKind.PARITY:
        raise GameValidationError("the PGSolver format only holds parity games")
    lines = [f"parity {g.num_vertices - 1};"]
    if g.initial is not None:
        lines.append(f"start {g.initial};")
    for v in range(g.num_vertices):
        succ = ",".join(str(w) for w in g.edges[v])
        lines.append(f'{v} {o.priority[v]} {g.owner[v]} {succ} "{g.names[v]}";')
    return "\n".join(lines) + "\n"
