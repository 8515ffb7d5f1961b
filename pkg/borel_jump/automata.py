"""Deterministic complete omega-automata.

Six acceptance variants are supported. Everything loop-based (classification,
emptiness, products) goes through the Muller normal form, whose acceptance is
an explicit family of loops.
"""

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from . import graphs
from .config import config
from .errors import AlphabetError, AutomatonValidationError, InternalCheckError
from .logging_config import get_logger
from .monitoring.metrics import metrics
from .words import Alphabet, UPWord, make_up_word

logger = get_logger(__name__)


class AcceptanceKind(str, Enum):
    """Acceptance variant."""
    REACH = "reach"
    SAFETY = "safety"
    BUCHI = "buchi"
    COBUCHI = "cobuchi"
    PARITY = "parity"
    MULLER = "muller"


class ProductMode(str, Enum):
    """Boolean combination computed by ``product``."""
    AND = "and"
    OR = "or"
    XOR = "xor"


@dataclass(frozen=True)
class Acceptance:
    """Acceptance condition; which fields matter depends on ``kind``.

    PARITY uses the min-even convention: a run is accepted iff the least
    priority seen infinitely often is even.
    """
    kind: AcceptanceKind
    states: FrozenSet[int] = frozenset()
    priority: Tuple[int, ...] = ()
    family: FrozenSet[FrozenSet[int]] = frozenset()

    @classmethod
    def reach(cls, states: Iterable[int]) -> "Acceptance":
        return cls(AcceptanceKind.REACH, states=frozenset(states))

    @classmethod
    def safety(cls, states: Iterable[int]) -> "Acceptance":
        return cls(AcceptanceKind.SAFETY, states=frozenset(states))

    @classmethod
    def buchi(cls, states: Iterable[int]) -> "Acceptance":
        return cls(AcceptanceKind.BUCHI, states=frozenset(states))

    @classmethod
    def cobuchi(cls, states: Iterable[int]) -> "Acceptance":
        return cls(AcceptanceKind.COBUCHI, states=frozenset(states))

    @classmethod
    def parity(cls, priority: Iterable[int]) -> "Acceptance":
        return cls(AcceptanceKind.PARITY, priority=tuple(priority))

    @classmethod
    def muller(cls, family: Iterable[Iterable[int]]) -> "Acceptance":
        return cls(AcceptanceKind.MULLER, family=frozenset(frozenset(member) for member in family))

    @property
    def inf_determined(self) -> bool:
        """REACH and SAFETY also depend on the finite prefix of a run."""
        return self.kind not in (AcceptanceKind.REACH, AcceptanceKind.SAFETY)

    def accepts_run(self, visited: FrozenSet[int], inf: FrozenSet[int]) -> bool:
        """Evaluate on the set of visited states and the inf-set of a run."""
        if self.kind == AcceptanceKind.REACH:
            return bool(visited & self.states)
        if self.kind == AcceptanceKind.SAFETY:
            return visited <= self.states
        return self.accepts_loop(inf)

    def accepts_loop(self, inf: FrozenSet[int]) -> bool:
        if self.kind == AcceptanceKind.BUCHI:
            return bool(inf & self.states)
        if self.kind == AcceptanceKind.COBUCHI:
            return inf <= self.states
        if self.kind == AcceptanceKind.PARITY:
            return min(self.priority[q] for q in inf) % 2 == 0
        if self.kind == AcceptanceKind.MULLER:
            return frozenset(inf) in self.family
        raise ValueError(f"{self.kind.value} acceptance is not determined by the inf-set alone")

    def referenced_states(self) -> FrozenSet[int]:
        if self.kind == AcceptanceKind.MULLER:
            return frozenset().union(*self.family) if self.family else frozenset()
        return self.states

    def describe(self) -> str:
        if self.kind == AcceptanceKind.PARITY:
            return "parity " + " ".join(f"{q}:{p}" for q, p in enumerate(self.priority))
        if self.kind == AcceptanceKind.MULLER:
            members = sorted(self.family, key=graphs.loop_sort_key)
            return "muller " + " ".join("{" + " ".join(str(q) for q in sorted(m)) + "}" for m in members)
        return f"{self.kind.value} " + " ".join(str(q) for q in sorted(self.states))


@dataclass(frozen=True)
class DetOmegaAutomaton:
    """Deterministic complete omega-automaton over a finite alphabet.

    ``delta[q][i]`` is the successor of state ``q`` on the ``i``-th symbol of the
    alphabet. A ``None`` entry marks a missing transition and fails ``validate``.
    """
    alphabet: Alphabet
    num_states: int
    initial: int
    delta: Tuple[Tuple[Optional[int], ...], ...]
    acceptance: Acceptance
    name: str = field(default="", compare=False)

    @classmethod
    def build(
        cls,
        alphabet: Alphabet,
        num_states: int,
        initial: int,
        transitions: Union[Mapping[Tuple[int, str], int], Iterable[Tuple[int, str, int]]],
        acceptance: Acceptance,
        name: str = "",
    ) -> "DetOmegaAutomaton":
        """Build from ``(state, symbol) -> target`` transitions and validate.

        Raises:
            AutomatonValidationError: If a transition is missing or refers to unknown states/symbols
        """
        items = transitions.items() if isinstance(transitions, Mapping) else (((q, s), t) for q, s, t in transitions)
        rows: List[List[Optional[int]]] = [[None] * len(alphabet) for _ in range(max(num_states, 0))]
        for (state, symbol), target in items:
            if not 0 <= state < num_states:
                raise AutomatonValidationError(f"transition from unknown state {state}", state=state, symbol=symbol)
            if symbol not in alphabet:
                raise AutomatonValidationError(f"transition on unknown symbol {symbol!r}", state=state, symbol=symbol)
            rows[state][alphabet.index(symbol)] = target
        automaton = cls(alphabet, num_states, initial, tuple(tuple(row) for row in rows), acceptance, name)
        return validate(automaton)

    @classmethod
    def from_function(
        cls,
        alphabet: Alphabet,
        num_states: int,
        initial: int,
        step: Callable[[int, str], int],
        acceptance: Acceptance,
        name: str = "",
    ) -> "DetOmegaAutomaton":
        transitions = {(q, symbol): step(q, symbol) for q in range(num_states) for symbol in alphabet}
        return cls.build(alphabet, num_states, initial, transitions, acceptance, name)

    @cached_property
    def _symbol_index(self) -> Dict[str, int]:
        return {symbol: i for i, symbol in enumerate(self.alphabet.symbols)}

    def step(self, state: int, symbol: str) -> int:
        return self.delta[state][self._symbol_index[symbol]]

    @cached_property
    def successors(self) -> Dict[int, Tuple[int, ...]]:
        """State graph: distinct successors of each state, in symbol order."""
        return {q: tuple(dict.fromkeys(row)) for q, row in enumerate(self.delta)}

    @cached_property
    def reachable_states(self) -> FrozenSet[int]:
        return frozenset(graphs.reachable(self.successors, [self.initial]))

    def transitions(self) -> Iterator[Tuple[int, str, int]]:
        for q, row in enumerate(self.delta):
            for symbol, target in zip(self.alphabet.symbols, row):
                yield q, symbol, target

    def with_acceptance(self, acceptance: Acceptance, name: Optional[str] = None) -> "DetOmegaAutomaton":
        return DetOmegaAutomaton(self.alphabet, self.num_states, self.initial, self.delta, acceptance,
                                 self.name if name is None else name)

    def __str__(self) -> str:
        label = self.name or "automaton"
        return f"{label} ({self.num_states} states over {{{', '.join(self.alphabet)}}}, {self.acceptance.kind.value})"


@dataclass(frozen=True)
class Loop:
    """A possible inf-set: strongly connected, internally traversable, reachable."""
    states: FrozenSet[int]

    def sort_key(self):
        return graphs.loop_sort_key(self.states)

    def __le__(self, other: "Loop") -> bool:
        return self.states <= other.states

    def to_list(self) -> List[int]:
        return sorted(self.states)


@dataclass(frozen=True)
class LoopEntry:
    loop: Loop
    accepting: bool


@dataclass(frozen=True)
class MullerNormalForm:
    """Language-equivalent MULLER automaton plus its full loop table.

    ``latched`` is set when a visited-bit latch was added (REACH/SAFETY input);
    ``origin`` then maps each state to its ``(source state, flag)`` pair.
    """
    automaton: DetOmegaAutomaton
    loop_table: Tuple[LoopEntry, ...]
    latched: bool = False
    origin: Tuple[Tuple[int, int], ...] = ()

    @property
    def loops(self) -> List[Loop]:
        return [entry.loop for entry in self.loop_table]

    @property
    def accepting_loops(self) -> List[Loop]:
        return [entry.loop for entry in self.loop_table if entry.accepting]

    @property
    def rejecting_loops(self) -> List[Loop]:
        return [entry.loop for entry in self.loop_table if not entry.accepting]

    @property
    def latch_note(self) -> str:
        return "visited-bit latch applied" if self.latched else "no latch"


@dataclass(frozen=True)
class EmptinessResult:
    """Outcome of ``is_empty``; truthy iff the language is empty."""
    empty: bool
    witness: Optional[UPWord] = None

    def __bool__(self) -> bool:
        return self.empty

    def __iter__(self):
        return iter((self.empty, self.witness))


@dataclass(frozen=True)
class EquivalenceResult:
    """Outcome of ``equivalent``; truthy iff the languages coincide."""
    equivalent: bool
    counterexample: Optional[UPWord] = None

    def __bool__(self) -> bool:
        return self.equivalent

    def __iter__(self):
        return iter((self.equivalent, self.counterexample))


def _cap(max_states: Optional[int]) -> int:
    return config.MAX_STATES if max_states is None else max_states


# =========================
# Validation
# =========================

def validate(a: DetOmegaAutomaton) -> DetOmegaAutomaton:
    """Return ``a`` unchanged if every structural invariant holds.

    Raises:
        AutomatonValidationError: Naming the offending state/symbol
    """
    n = a.num_states
    if n < 1:
        raise AutomatonValidationError("automaton needs at least one state")
    if not 0 <= a.initial < n:
        raise AutomatonValidationError(f"initial state {a.initial} is not in 0..{n - 1}", state=a.initial)
    if len(a.delta) != n:
        raise AutomatonValidationError(f"transition table has {len(a.delta)} rows for {n} states")
    for q, row in enumerate(a.delta):
        if len(row) != len(a.alphabet):
            raise AutomatonValidationError(f"state {q} has {len(row)} transitions for {len(a.alphabet)} symbols", state=q)
        for symbol, target in zip(a.alphabet.symbols, row):
            if target is None:
                raise AutomatonValidationError(f"missing transition delta({q}, {symbol})", state=q, symbol=symbol)
            if not 0 <= target < n:
                raise AutomatonValidationError(
                    f"transition delta({q}, {symbol}) = {target} targets an unknown state", state=q, symbol=symbol
                )

    acceptance = a.acceptance
    if acceptance.kind == AcceptanceKind.PARITY:
        if len(acceptance.priority) != n:
            raise AutomatonValidationError(f"parity acceptance defines {len(acceptance.priority)} priorities for {n} states")
        if any(p < 0 for p in acceptance.priority):
            raise AutomatonValidationError("parity priorities must be natural numbers")
    unknown = sorted(q for q in acceptance.referenced_states() if not 0 <= q < n)
    if unknown:
        raise AutomatonValidationError(
            f"{acceptance.kind.value} acceptance refers to unknown state {unknown[0]}", state=unknown[0]
        )
    return a


# =========================
# Loops and normal form
# =========================

def enumerate_loops(a: DetOmegaAutomaton, max_states: Optional[int] = None) -> List[Loop]:
    """Every loop reachable from the initial state, sorted by (size, members).

    Raises:
        StateGuardExceeded: If a reachable SCC exceeds the guard
    """
    found = graphs.enumerate_loops(a.successors, [a.initial], _cap(max_states), what=a.name or "automaton")
    return [Loop(states) for states in found]


def _latch(a: DetOmegaAutomaton) -> Tuple[DetOmegaAutomaton, Tuple[Tuple[int, int], ...]]:
    """Product with a one-bit flag: "F visited" for REACH, "left F" for SAFETY."""
    target = a.acceptance.states
    if a.acceptance.kind == AcceptanceKind.REACH:
        raise_flag = lambda q: q in target
    else:
        raise_flag = lambda q: q not in target

    start = (a.initial, int(raise_flag(a.initial)))
    index: Dict[Tuple[int, int], int] = {start: 0}
    order = [start]
    rows: List[Tuple[int, ...]] = []
    queue = deque([start])
    while queue:
        q, flag = queue.popleft()
        row = []
        for target_state in a.delta[q]:
            pair = (target_state, int(flag or raise_flag(target_state)))
            if pair not in index:
                index[pair] = len(order)
                order.append(pair)
                queue.append(pair)
            row.append(index[pair])
        rows.append(tuple(row))

    # Placeholder acceptance; the caller installs the Muller family
    latched = DetOmegaAutomaton(a.alphabet, len(order), 0, tuple(rows), Acceptance.muller([]), a.name)
    return latched, tuple(order)


@lru_cache(maxsize=2048)
def _normal_form(a: DetOmegaAutomaton, cap: int) -> MullerNormalForm:
    validate(a)
    metrics.increment_counter("borel_normal_forms_total", {"acceptance": a.acceptance.kind.value})

    if a.acceptance.inf_determined:
        base, origin = a, ()
        loops = enumerate_loops(base, cap)
        accepting = [a.acceptance.accepts_loop(loop.states) for loop in loops]
    else:
        base, origin = _latch(a)
        loops = enumerate_loops(base, cap)
        # The flag is constant on a loop; REACH wants it set, SAFETY wants it clear
        want = 1 if a.acceptance.kind == AcceptanceKind.REACH else 0
        accepting = [origin[min(loop.states)][1] == want for loop in loops]

    family = [loop.states for loop, ok in zip(loops, accepting) if ok]
    automaton = base.with_acceptance(Acceptance.muller(family), name=a.name)
    table = tuple(LoopEntry(loop, ok) for loop, ok in zip(loops, accepting))
    logger.debug(
        f"Normal form of {a}: {automaton.num_states} states, {len(loops)} loops, {len(family)} accepting",
        extra={"automaton": a.name, "states": automaton.num_states, "loops": len(loops)},
    )
    return MullerNormalForm(automaton, table, latched=bool(origin), origin=origin)


def to_muller_normal_form(a: DetOmegaAutomaton, max_states: Optional[int] = None) -> MullerNormalForm:
    """Language-preserving conversion to MULLER acceptance over loops.

    BUCHI/COBUCHI/PARITY/MULLER keep the state space; REACH/SAFETY get a
    visited-bit latch first since they are not determined by the inf-set.
    """
    return _normal_form(a, _cap(max_states))


# =========================
# Membership
# =========================

def _require_letters(a: DetOmegaAutomaton, w: UPWord):
    if w.alphabet != a.alphabet and not w.uses_only(a.alphabet):
        raise AlphabetError(
            f"word {w} uses letters outside the automaton alphabet {{{', '.join(a.alphabet)}}}"
        )


def run_lasso(a: DetOmegaAutomaton, w: UPWord) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """Simulate ``a`` on ``w``; return (visited states, inf-set)."""
    _require_letters(a, w)
    q = a.initial
    visited = {q}
    for letter in w.prefix.letters:
        q = a.step(q, letter)
        visited.add(q)

    # Iterate the period until a block-start state repeats
    block_of: Dict[int, int] = {}
    blocks: List[set] = []
    while q not in block_of:
        block_of[q] = len(blocks)
        block = {q}
        for letter in w.period.letters:
            q = a.step(q, letter)
            block.add(q)
        blocks.append(block)
        visited |= block
    inf = set().union(*blocks[block_of[q]:])
    return frozenset(visited), frozenset(inf)


def accepts(a: DetOmegaAutomaton, w: UPWord) -> bool:
    """Membership of the UP word ``w`` in L(a).

    Letters are matched by name, so ``w`` may be recorded over a sub- or
    superset of a's alphabet as long as every letter it uses is in a's
    alphabet.

    Raises:
        AlphabetError: If ``w`` uses a letter outside a's alphabet
    """
    visited, inf = run_lasso(a, w)
    return a.acceptance.accepts_run(visited, inf)


# =========================
# Boolean operations
# =========================

def complement(a: DetOmegaAutomaton, max_states: Optional[int] = None) -> DetOmegaAutomaton:
    """Automaton for the complement language, on the same or normalized structure.

    BUCHI and COBUCHI are complemented through the Muller normal form instead of
    swapping variants.
    """
    validate(a)
    kind = a.acceptance.kind
    name = f"not({a.name})" if a.name else ""
    everything = frozenset(range(a.num_states))
    if kind == AcceptanceKind.REACH:
        return a.with_acceptance(Acceptance.safety(everything - a.acceptance.states), name)
    if kind == AcceptanceKind.SAFETY:
        return a.with_acceptance(Acceptance.reach(everything - a.acceptance.states), name)
    if kind == AcceptanceKind.PARITY:
        return a.with_acceptance(Acceptance.parity(p + 1 for p in a.acceptance.priority), name)

    # Inf-sets are always loops, so complementing within the loops is exact
    normal = to_muller_normal_form(a, max_states)
    rejecting = [loop.states for loop in normal.rejecting_loops]
    return normal.automaton.with_acceptance(Acceptance.muller(rejecting), name)


_COMBINE = {
    ProductMode.AND: lambda x, y: x and y,
    ProductMode.OR: lambda x, y: x or y,
    ProductMode.XOR: lambda x, y: x != y,
}


def product(
    a1: DetOmegaAutomaton,
    a2: DetOmegaAutomaton,
    mode: Union[ProductMode, str],
    max_states: Optional[int] = None,
) -> DetOmegaAutomaton:
    """Synchronized product on reachable pairs with MULLER acceptance.

    A product loop is accepting iff ``mode`` combines the acceptance of its two
    projections, which are loops of the components.

    Raises:
        AlphabetError: If the alphabets differ
        StateGuardExceeded: If loop enumeration exceeds the guard
    """
    mode = ProductMode(mode)
    if a1.alphabet != a2.alphabet:
        raise AlphabetError(
            f"product needs equal alphabets: {{{', '.join(a1.alphabet)}}} vs {{{', '.join(a2.alphabet)}}}"
        )
    n1 = to_muller_normal_form(a1, max_states)
    n2 = to_muller_normal_form(a2, max_states)
    m1, m2 = n1.automaton, n2.automaton

    start = (m1.initial, m2.initial)
    index: Dict[Tuple[int, int], int] = {start: 0}
    pairs = [start]
    rows: List[Tuple[int, ...]] = []
    queue = deque([start])
    while queue:
        q1, q2 = queue.popleft()
        row = []
        for t1, t2 in zip(m1.delta[q1], m2.delta[q2]):
            pair = (t1, t2)
            if pair not in index:
                index[pair] = len(pairs)
                pairs.append(pair)
                queue.append(pair)
            row.append(index[pair])
        rows.append(tuple(row))

    name = f"({a1.name or 'A1'} {mode.value} {a2.name or 'A2'})"
    skeleton = DetOmegaAutomaton(a1.alphabet, len(pairs), 0, tuple(rows), Acceptance.muller([]), name)
    combine = _COMBINE[mode]
    family = []
    for loop in enumerate_loops(skeleton, max_states):
        left = frozenset(pairs[s][0] for s in loop.states)
        right = frozenset(pairs[s][1] for s in loop.states)
        if combine(left in m1.acceptance.family, right in m2.acceptance.family):
            family.append(loop.states)
    logger.debug(f"Product {name}: {len(pairs)} states, {len(family)} accepting loops")
    return skeleton.with_acceptance(Acceptance.muller(family))


# =========================
# Emptiness and equivalence
# =========================

def _letters_to(a: DetOmegaAutomaton, source: int, targets: FrozenSet[int], within: Optional[FrozenSet[int]] = None) -> Optional[List[str]]:
    """Shortest letter sequence from ``source`` into ``targets``; symbols tried in alphabet order."""
    if source in targets:
        return []
    parent: Dict[int, Tuple[int, str]] = {}
    seen = {source}
    queue = deque([source])
    while queue:
        q = queue.popleft()
        for symbol, t in zip(a.alphabet.symbols, a.delta[q]):
            if t in seen or (within is not None and t not in within):
                continue
            seen.add(t)
            parent[t] = (q, symbol)
            if t in targets:
                letters = []
                node = t
                while node != source:
                    node, symbol_in = parent[node]
                    letters.append(symbol_in)
                return list(reversed(letters))
            queue.append(t)
    return None


def _cycle_through(a: DetOmegaAutomaton, loop: FrozenSet[int], entry: int) -> List[str]:
    """Letters of a cycle from ``entry`` inside ``loop`` visiting every state of it."""
    letters: List[str] = []
    current = entry
    for target in sorted(loop - {entry}):
        step = _letters_to(a, current, frozenset({target}), within=loop)
        letters.extend(step)
        current = target
    if letters:
        letters.extend(_letters_to(a, current, frozenset({entry}), within=loop))
        return letters
    # Single-state loop: take the first self-loop symbol
    for symbol, t in zip(a.alphabet.symbols, a.delta[entry]):
        if t == entry:
            return [symbol]
    raise InternalCheckError(f"state {entry} has no self-loop although {{{entry}}} is a loop")


def lasso_witness(a: DetOmegaAutomaton, loop: FrozenSet[int]) -> UPWord:
    """Canonical UP word whose run on ``a`` has inf-set exactly ``loop``."""
    access = _letters_to(a, a.initial, loop)
    if access is None:
        raise InternalCheckError(f"loop {sorted(loop)} is not reachable")
    q = a.initial
    for letter in access:
        q = a.step(q, letter)
    return make_up_word(access, _cycle_through(a, loop, q), a.alphabet)


def is_empty(a: DetOmegaAutomaton, max_states: Optional[int] = None) -> EmptinessResult:
    """Emptiness with a re-verified witness when non-empty."""
    normal = to_muller_normal_form(a, max_states)
    accepting = normal.accepting_loops
    if not accepting:
        return EmptinessResult(True, None)
    witness = lasso_witness(normal.automaton, accepting[0].states)
    if not accepts(a, witness):
        raise InternalCheckError(f"emptiness witness {witness} is rejected by {a}")
    return EmptinessResult(False, witness)


def equivalent(a1: DetOmegaAutomaton, a2: DetOmegaAutomaton, max_states: Optional[int] = None) -> EquivalenceResult:
    """Language equivalence; on failure a UP word accepted by exactly one side."""
    result = is_empty(product(a1, a2, ProductMode.XOR, max_states), max_states)
    if result.empty:
        return EquivalenceResult(True, None)
    word = result.witness
    if accepts(a1, word) == accepts(a2, word):
        raise InternalCheckError(f"counterexample {word} does not separate the two automata")
    return EquivalenceResult(False, word)
