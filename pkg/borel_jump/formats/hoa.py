"""Reader for a deterministic, state-based subset of HOA v1.

Supported headers: ``HOA``, ``States``, ``Start`` (one state), ``AP`` (at
least one proposition), ``acc-name`` (``Buchi``, ``co-Buchi``,
``parity min even k``, ``all``, ``none``) or, without ``acc-name``, the
matching ``Acceptance`` lines ``1 Inf(0)``, ``1 Fin(0)``, ``0 t`` and
``0 f``. Other headers (``name``, ``tool``, ``properties``, ...) are ignored.

Edges carry explicit labels built from ``t``, ``f``, AP indices, ``!``,
``&``, ``|`` and parentheses. The alphabet is the set of AP valuations as
bit strings, AP 0 first: with ``AP: 2 "p" "q"`` the symbol ``10`` means p
holds and q does not.
"""

import re
from itertools import product
from pathlib import Path
from typing import Dict, List, Optional, Set, Tuple, Union

from ..automata import Acceptance, DetOmegaAutomaton
from ..errors import AlphabetError, AutomatonValidationError, ParseError
from ..words import Alphabet

_TOKEN = re.compile(r"\s*(\d+|[tf!&|()])")
_MARKS = re.compile(r"\{([\d\s]*)\}")
_PARITY = re.compile(r"^parity\s+min\s+even\s+(\d+)$")


class _Label:
    """Recursive-descent evaluator for one label expression."""

    def __init__(self, text: str, num_aps: int, line: int, path: Optional[str]):
        self.line = line
        self.path = path
        self.tokens: List[str] = []
        position = 0
        text = text.strip()
        while position < len(text):
            match = _TOKEN.match(text, position)
            if not match:
                raise ParseError(f"bad label {text!r}", line, path)
            self.tokens.append(match.group(1))
            position = match.end()
            while position < len(text) and text[position].isspace():
                position += 1
        if not self.tokens:
            raise ParseError("empty label", line, path)
        for token in self.tokens:
            if token.isdigit() and int(token) >= num_aps:
                raise ParseError(f"label refers to AP {token} but only {num_aps} are declared", line, path)

    def holds(self, valuation: Tuple[bool, ...]) -> bool:
        self.position = 0
        self.valuation = valuation
        value = self._disjunction()
        if self.position != len(self.tokens):
            raise ParseError(f"unexpected {self.tokens[self.position]!r} in label", self.line, self.path)
        return value

    def _peek(self) -> Optional[str]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _take(self) -> str:
        token = self._peek()
        if token is None:
            raise ParseError("label ends early", self.line, self.path)
        self.position += 1
        return token

    def _disjunction(self) -> bool:
        value = self._conjunction()
        while self._peek() == "|":
            self._take()
            value = self._conjunction() or value
        return value

    def _conjunction(self) -> bool:
        value = self._atom()
        while self._peek() == "&":
            self._take()
            value = self._atom() and value
        return value

    def _atom(self) -> bool:
        token = self._take()
        if token == "!":
            return not self._atom()
        if token == "(":
            value = self._disjunction()
            if self._take() != ")":
                raise ParseError("unbalanced parentheses in label", self.line, self.path)
            return value
        if token == "t":
            return True
        if token == "f":
            return False
        if token.isdigit():
            return self.valuation[int(token)]
        raise ParseError(f"unexpected {token!r} in label", self.line, self.path)


def _acceptance(
    acc_name: Optional[Tuple[str, int]],
    acceptance_line: Optional[Tuple[str, int]],
    marks: Dict[int, Set[int]],
    num_states: int,
    path: Optional[str],
) -> Acceptance:
    if acc_name is not None:
        text, line = acc_name
        text = " ".join(text.split())
    elif acceptance_line is not None:
        text, line = acceptance_line
        spec = " ".join(acceptance_line[0].split())
        known = {"1 Inf(0)": "Buchi", "1 Fin(0)": "co-Buchi", "0 t": "all", "0 f": "none"}
        if spec not in known:
            raise ParseError(f"unsupported Acceptance {spec!r} without acc-name", line, path)
        text = known[spec]
    else:
        raise ParseError("missing acc-name or Acceptance header", None, path)

    marked = frozenset(q for q in range(num_states) if 0 in marks.get(q, ()))
    if text == "Buchi":
        return Acceptance.buchi(marked)
    if text == "co-Buchi":
        return Acceptance.cobuchi(frozenset(range(num_states)) - marked)
    if text == "all":
        return Acceptance.buchi(range(num_states))
    if text == "none":
        return Acceptance.buchi(())
    match = _PARITY.match(text)
    if match:
        colours = int(match.group(1))
        # unmarked states behave like the colour one past the last declared set
        return Acceptance.parity(
            min((m for m in marks.get(q, ()) if m < colours), default=colours) for q in range(num_states)
        )
    raise ParseError(f"unsupported acc-name {text!r}", line, path)


def parse_hoa(text: str, path: Optional[str] = None) -> DetOmegaAutomaton:
    """Parse a deterministic complete HOA automaton with state-based acceptance.

    Raises:
        ParseError: On unsupported features, non-determinism or missing transitions
    """
    headers: Dict[str, Tuple[str, int]] = {}
    starts: List[Tuple[str, int]] = []
    body: List[Tuple[str, int]] = []
    in_body = False
    ended = False

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("/*"):
            continue
        if ended:
            raise ParseError("only one automaton per file is supported", number, path)
        if line == "--BODY--":
            in_body = True
            continue
        if line == "--END--":
            ended = True
            continue
        if in_body:
            body.append((line, number))
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ParseError(f"expected a header, got {line!r}", number, path)
        if key == "Start":
            starts.append((value.strip(), number))
        else:
            headers[key] = (value.strip(), number)

    if "HOA" not in headers:
        raise ParseError("missing HOA: v1 header", None, path)
    if not in_body:
        raise ParseError("missing --BODY--", None, path)
    if len(starts) != 1:
        raise ParseError("exactly one Start state is supported", starts[1][1] if len(starts) > 1 else None, path)
    start_text, start_line = starts[0]
    if not start_text.isdigit():
        raise ParseError(f"Start must be a single state, got {start_text!r}", start_line, path)

    if "AP" not in headers:
        raise ParseError("missing AP header", None, path)
    ap_text, ap_line = headers["AP"]
    try:
        num_aps = int(ap_text.split()[0])
    except (IndexError, ValueError):
        raise ParseError(f"malformed AP header {ap_text!r}", ap_line, path)
    if num_aps < 1:
        raise ParseError("at least one atomic proposition is needed", ap_line, path)
    valuations = list(product((False, True), repeat=num_aps))
    symbols = ["".join("1" if bit else "0" for bit in valuation) for valuation in valuations]

    edges: Dict[int, List[Tuple[_Label, int, int]]] = {}
    marks: Dict[int, Set[int]] = {}
    current: Optional[int] = None
    for line, number in body:
        if line.startswith("State:"):
            rest = line[len("State:"):].strip()
            if rest.startswith("["):
                raise ParseError("state labels are not supported", number, path)
            ident = rest.split()[0] if rest.split() else ""
            if not ident.isdigit():
                raise ParseError(f"state needs a numeric id, got {rest!r}", number, path)
            current = int(ident)
            if current in edges:
                raise ParseError(f"state {current} is declared twice", number, path)
            edges[current] = []
            found = _MARKS.search(rest)
            if found:
                marks[current] = {int(m) for m in found.group(1).split()}
            continue
        if current is None:
            raise ParseError("edge before the first State:", number, path)
        if not line.startswith("["):
            raise ParseError("implicit labels are not supported; write [label] target", number, path)
        label_text, _, target_text = line[1:].partition("]")
        target_text = target_text.strip()
        if "{" in target_text:
            raise ParseError("transition-based acceptance marks are not supported", number, path)
        if not target_text.isdigit():
            raise ParseError(f"edge target must be a single state, got {target_text!r}", number, path)
        edges[current].append((_Label(label_text, num_aps, number, path), int(target_text), number))

    if "States" in headers:
        value, line = headers["States"]
        if not value.isdigit():
            raise ParseError(f"malformed States header {value!r}", line, path)
        num_states = int(value)
    else:
        num_states = max(list(edges) + [t for out in edges.values() for _, t, _ in out]) + 1 if edges else 0
    for q in edges:
        if q >= num_states:
            raise ParseError(f"state {q} is outside 0..{num_states - 1}", None, path)

    transitions: Dict[Tuple[int, str], int] = {}
    for q in range(num_states):
        for symbol, valuation in zip(symbols, valuations):
            enabled = [(t, number) for label, t, number in edges.get(q, []) if label.holds(valuation)]
            if not enabled:
                raise ParseError(f"state {q} has no edge for valuation {symbol}", None, path)
            if len({t for t, _ in enabled}) > 1:
                raise ParseError(f"state {q} is nondeterministic on valuation {symbol}", enabled[1][1], path)
            transitions[(q, symbol)] = enabled[0][0]

    acceptance = _acceptance(headers.get("acc-name"), headers.get("Acceptance"), marks, num_states, path)
    name = headers["name"][0].strip('"') if "name" in headers else ""
    try:
        return DetOmegaAutomaton.build(Alphabet(tuple(symbols)), num_states, int(start_text), transitions, acceptance, name)
    except (AlphabetError, AutomatonValidationError) as e:
        raise ParseError(str(e), None, path)


def read_hoa(path: Union[str, Path]) -> DetOmegaAutomaton:
    path = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read automaton: {e.strerror}", None, path)
    automaton = parse_hoa(text, path)
    if not automaton.name:
        automaton = automaton.with_acceptance(automaton.acceptance, name=Path(path).stem)
    return automaton
