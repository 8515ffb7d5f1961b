"""Line-oriented text format for deterministic omega-automata.

    alphabet: a b c
    states: 4
    initial: 0
    acceptance: muller {2} {1 2}
    trans: 0 a 1
    ...

``#`` starts a comment. Every (state, symbol) pair appears exactly once.
An optional ``name:`` line labels the automaton.
"""

import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..automata import Acceptance, AcceptanceKind, DetOmegaAutomaton
from ..errors import AlphabetError, AutomatonValidationError, ParseError
from ..words import Alphabet

_KEYS = ("name", "alphabet", "states", "initial", "acceptance", "trans")
_SET = re.compile(r"\{([^{}]*)\}")


def _int(token: str, what: str, line: int, path: Optional[str]) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {token!r}", line, path)


def parse_acceptance(text: str, line: int = None, path: Optional[str] = None) -> Acceptance:
    """``buchi 1 3`` | ``cobuchi 0`` | ``reach 2`` | ``safety 0 1`` | ``parity 0:1 1:2`` | ``muller {2} {1 2}``."""
    parts = text.split(None, 1)
    if not parts:
        raise ParseError("empty acceptance", line, path)
    try:
        kind = AcceptanceKind(parts[0].lower())
    except ValueError:
        raise ParseError(f"unknown acceptance {parts[0]!r}", line, path)
    rest = parts[1] if len(parts) > 1 else ""

    if kind == AcceptanceKind.MULLER:
        leftover = _SET.sub(" ", rest).strip()
        if leftover:
            raise ParseError(f"muller family members must be written as {{...}}, found {leftover!r}", line, path)
        family = [[_int(t, "state", line, path) for t in member.split()] for member in _SET.findall(rest)]
        return Acceptance.muller(family)
    if kind == AcceptanceKind.PARITY:
        pairs: Dict[int, int] = {}
        for token in rest.split():
            state, sep, value = token.partition(":")
            if not sep:
                raise ParseError(f"parity entries are state:priority, got {token!r}", line, path)
            q = _int(state, "state", line, path)
            if q in pairs:
                raise ParseError(f"state {q} has two priorities", line, path)
            pairs[q] = _int(value, "priority", line, path)
        if sorted(pairs) != list(range(len(pairs))):
            raise ParseError("parity acceptance must give a priority to every state 0..n-1", line, path)
        return Acceptance.parity(pairs[q] for q in range(len(pairs)))
    states = [_int(t, "state", line, path) for t in rest.split()]
    return Acceptance(kind, states=frozenset(states))


def parse_automaton(text: str, path: Optional[str] = None) -> DetOmegaAutomaton:
    """Parse the text format.

    Raises:
        ParseError: With the 1-based line number of the offending line
    """
    fields: Dict[str, Tuple[str, int]] = {}
    transitions: Dict[Tuple[int, str], int] = {}
    trans_lines: List[Tuple[int, str, int, int]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        key, sep, value = content.partition(":")
        key = key.strip().lower()
        if not sep or key not in _KEYS:
            raise ParseError(f"expected one of {', '.join(k + ':' for k in _KEYS)}, got {content!r}", number, path)
        value = value.strip()
        if key == "trans":
            tokens = value.split()
            if len(tokens) != 3:
                raise ParseError(f"trans needs 'state symbol target', got {value!r}", number, path)
            q = _int(tokens[0], "state", number, path)
            t = _int(tokens[2], "target", number, path)
            trans_lines.append((q, tokens[1], t, number))
            continue
        if key in fields:
            raise ParseError(f"duplicate {key}: line", number, path)
        fields[key] = (value, number)

    for required in ("alphabet", "states", "initial", "acceptance"):
        if required not in fields:
            raise ParseError(f"missing {required}: line", None, path)

    value, number = fields["alphabet"]
    try:
        alphabet = Alphabet(tuple(value.split()))
    except AlphabetError as e:
        raise ParseError(str(e), number, path)
    num_states = _int(fields["states"][0], "states", fields["states"][1], path)
    initial = _int(fields["initial"][0], "initial", fields["initial"][1], path)
    acceptance = parse_acceptance(*fields["acceptance"], path=path)

    for q, symbol, t, number in trans_lines:
        if symbol not in alphabet:
            raise ParseError(f"symbol {symbol!r} is not in the alphabet", number, path)
        if not 0 <= q < num_states or not 0 <= t < num_states:
            raise ParseError(f"transition {q} {symbol} {t} refers to a state outside 0..{num_states - 1}", number, path)
        if (q, symbol) in transitions:
            raise ParseError(f"duplicate transition for ({q}, {symbol})", number, path)
        transitions[(q, symbol)] = t

    for q in range(num_states):
        for symbol in alphabet:
            if (q, symbol) not in transitions:
                raise ParseError(f"missing transition for ({q}, {symbol})", None, path)

    name = fields["name"][0] if "name" in fields else (Path(path).stem if path else "")
    try:
        return DetOmegaAutomaton.build(alphabet, num_states, initial, transitions, acceptance, name)
    except AutomatonValidationError as e:
        raise ParseError(str(e), None, path)


def read_automaton(path: Union[str, Path]) -> DetOmegaAutomaton:
    path = str(path)
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read automaton: {e.strerror}", None, path)
    return parse_automaton(text, path)


def dump_acceptance(acceptance: Acceptance) -> str:
    return acceptance.describe().strip()


def dump_automaton(a: DetOmegaAutomaton) -> str:
    """Text form of ``a``; ``parse_automaton(dump_automaton(a)) == a``."""
    lines = []
    if a.name:
        lines.append(f"name: {a.name}")
    lines.append(f"alphabet: {' '.join(a.alphabet)}")
    lines.append(f"states: {a.num_states}")
    lines.append(f"initial: {a.initial}")
    lines.append(f"acceptance: {dump_acceptance(a.acceptance)}")
    for q, symbol, t in a.transitions():
        lines.append(f"trans: {q} {symbol} {t}")
    return "\n".join(lines) + "\n"
