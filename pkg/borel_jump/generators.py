"""Seeded random instances and exhaustive enumerators for the test suites.

Every random generator takes a ``random.Random`` so that a seed fixes the
whole stream of instances.
"""

import random
from itertools import combinations, product
from typing import Iterator, List, Optional, Sequence, Tuple

from .automata import Acceptance, AcceptanceKind, DetOmegaAutomaton, enumerate_loops
from .games.arena import GameGraph, Objective, ObjectiveKind
from .words import Alphabet, FiniteWord, UPWord, canonicalize

Table = Tuple[Tuple[int, ...], ...]


# =========================
# Automata
# =========================

def random_table(rng: random.Random, num_states: int, alphabet: Alphabet) -> Table:
    return tuple(tuple(rng.randrange(num_states) for _ in alphabet) for _ in range(num_states))


def _from_table(alphabet: Alphabet, table: Table, acceptance: Acceptance, name: str) -> DetOmegaAutomaton:
    transitions = {(q, symbol): table[q][i] for q in range(len(table)) for i, symbol in enumerate(alphabet)}
    return DetOmegaAutomaton.build(alphabet, len(table), 0, transitions, acceptance, name)


def random_acceptance(
    rng: random.Random,
    kind: AcceptanceKind,
    structure: DetOmegaAutomaton,
    max_priority: int = 3,
) -> Acceptance:
    """Random acceptance of ``kind`` for the states of ``structure``.

    Muller families are drawn over the loops of ``structure``, each loop
    kept with probability one half.
    """
    n = structure.num_states
    if kind == AcceptanceKind.PARITY:
        return Acceptance.parity(rng.randint(0, max_priority) for _ in range(n))
    if kind == AcceptanceKind.MULLER:
        loops = enumerate_loops(structure)
        return Acceptance.muller(loop.states for loop in loops if rng.random() < 0.5)
    return Acceptance(kind, states=frozenset(q for q in range(n) if rng.random() < 0.5))


def random_automaton(
    rng: random.Random,
    alphabet: Alphabet,
    num_states: int,
    kind: Optional[AcceptanceKind] = None,
) -> DetOmegaAutomaton:
    """Random complete deterministic automaton with initial state 0."""
    kind = AcceptanceKind(kind) if kind is not None else rng.choice(list(AcceptanceKind))
    table = random_table(rng, num_states, alphabet)
    structure = _from_table(alphabet, table, Acceptance.buchi(()), "")
    acceptance = random_acceptance(rng, kind, structure)
    return structure.with_acceptance(acceptance, name=f"random-{kind.value}-{num_states}")


def is_canonical_table(table: Table) -> bool:
    """True iff every state is reachable from 0 and numbered in BFS discovery order."""
    order = [0]
    seen = {0}
    head = 0
    while head < len(order):
        for target in table[order[head]]:
            if target not in seen:
                seen.add(target)
                order.append(target)
        head += 1
    return order == list(range(len(table)))


def canonical_tables(num_states: int, alphabet: Alphabet) -> Iterator[Table]:
    """All transition tables on ``num_states`` states up to renaming, in a fixed order."""
    cells = num_states * len(alphabet)
    width = len(alphabet)
    for flat in product(range(num_states), repeat=cells):
        table = tuple(flat[q * width:(q + 1) * width] for q in range(num_states))
        if is_canonical_table(table):
            yield table


def all_muller_automata(max_states: int, alphabet: Alphabet) -> Iterator[DetOmegaAutomaton]:
    """Every canonical table with 1..max_states states times every family of its loops."""
    for num_states in range(1, max_states + 1):
        for index, table in enumerate(canonical_tables(num_states, alphabet)):
            structure = _from_table(alphabet, table, Acceptance.buchi(()), "")
            loops = [loop.states for loop in enumerate_loops(structure)]
            for size in range(len(loops) + 1):
                for family in combinations(loops, size):
                    yield structure.with_acceptance(
                        Acceptance.muller(family), name=f"muller-{num_states}-{index}"
                    )


# =========================
# Words
# =========================

def random_up_word(
    rng: random.Random,
    alphabet: Alphabet,
    max_prefix: int = 4,
    max_period: int = 3,
    canonical: bool = True,
) -> UPWord:
    prefix = FiniteWord(tuple(rng.choice(alphabet.symbols) for _ in range(rng.randint(0, max_prefix))), alphabet)
    period = FiniteWord(tuple(rng.choice(alphabet.symbols) for _ in range(rng.randint(1, max_period))), alphabet)
    return canonicalize(prefix, period) if canonical else UPWord(prefix, period)


# =========================
# Games
# =========================

def random_arena(rng: random.Random, num_vertices: int, max_successors: int = 2) -> GameGraph:
    owner = [rng.randrange(2) for _ in range(num_vertices)]
    edges = [
        rng.sample(range(num_vertices), rng.randint(1, min(max_successors, num_vertices)))
        for _ in range(num_vertices)
    ]
    return GameGraph.build(owner, edges)


def random_objective(
    rng: random.Random,
    g: GameGraph,
    kind: ObjectiveKind,
    max_priority: int = 2,
) -> Objective:
    n = g.num_vertices
    if kind == ObjectiveKind.PARITY:
        return Objective.parity(rng.randint(0, max_priority) for _ in range(n))
    if kind == ObjectiveKind.MULLER:
        subsets = [frozenset(s) for size in range(1, n + 1) for s in combinations(range(n), size)]
        return Objective.muller(s for s in subsets if rng.random() < 0.5)
    return Objective(kind, vertices=frozenset(v for v in range(n) if rng.random() < 0.5))


def random_game(
    rng: random.Random,
    num_vertices: int,
    kind: ObjectiveKind,
    max_successors: int = 2,
    max_priority: int = 2,
) -> Tuple[GameGraph, Objective]:
    g = random_arena(rng, num_vertices, max_successors)
    return g, random_objective(rng, g, ObjectiveKind(kind), max_priority)


def _successor_choices(num_vertices: int, max_successors: int) -> List[Tuple[int, ...]]:
    return [
        choice
        for size in range(1, min(max_successors, num_vertices) + 1)
        for choice in combinations(range(num_vertices), size)
    ]


def all_parity_games(
    num_vertices: int,
    priorities: Sequence[int] = (0, 1, 2),
    max_successors: int = 2,
) -> Iterator[Tuple[GameGraph, Objective]]:
    """Every arena on ``num_vertices`` vertices with every priority assignment."""
    choices = _successor_choices(num_vertices, max_successors)
    for owner in product((0, 1), repeat=num_vertices):
        for edges in product(choices, repeat=num_vertices):
            g = GameGraph.build(owner, edges)
            for priority in product(priorities, repeat=num_vertices):
                yield g, Objective.parity(priority)
