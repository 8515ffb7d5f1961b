"""Concrete sets and arenas used as reference points.

Every automaton fixture is also shipped as a text file under ``fixtures/``;
``FIXTURE_FILES`` maps the file stem to the builder.
"""

from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .automata import Acceptance, DetOmegaAutomaton, equivalent
from .games.arena import GameGraph, Objective
from .words import Alphabet, FiniteWord

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))

OPEN_SET_CLAIM = 'stated outcome for O = XA^omega after expansion: "complete for $\\Sigma_2^0$ in $B^\\omega$"'


def prefix_automaton(words: Iterable, alphabet: Alphabet, name: str = "") -> DetOmegaAutomaton:
    """REACH automaton of X A^omega for a finite set X of finite words.

    States are the trie nodes below X in breadth-first order, then an
    accepting and a rejecting sink.
    """
    prefixes = [tuple(w.letters) if isinstance(w, FiniteWord) else tuple(w) for w in words]
    basis = set(prefixes)
    if () in basis:
        return DetOmegaAutomaton.build(
            alphabet, 1, 0, {(0, s): 0 for s in alphabet}, Acceptance.reach([0]), name or "prefixes(eps)"
        )

    def covered(word: Tuple[str, ...]) -> bool:
        return any(word[:i] in basis for i in range(1, len(word) + 1))

    inner = {p[:i] for p in prefixes for i in range(len(p))}
    nodes: List[Tuple[str, ...]] = [()]
    index = {(): 0}
    frontier = [()]
    while frontier:
        following = []
        for node in frontier:
            for symbol in alphabet:
                child = node + (symbol,)
                if child in inner and not covered(child) and child not in index:
                    index[child] = len(nodes)
                    nodes.append(child)
                    following.append(child)
        frontier = following

    accept, reject = len(nodes), len(nodes) + 1
    transitions = {}
    for node, q in index.items():
        for symbol in alphabet:
            child = node + (symbol,)
            if covered(child):
                transitions[(q, symbol)] = accept
            else:
                transitions[(q, symbol)] = index.get(child, reject)
    for symbol in alphabet:
        transitions[(accept, symbol)] = accept
        transitions[(reject, symbol)] = reject
    return DetOmegaAutomaton.build(alphabet, len(nodes) + 2, 0, transitions, Acceptance.reach([accept]), name)


def _chain(word: Sequence[str], alphabet: Alphabet, name: str) -> DetOmegaAutomaton:
    """Buchi automaton of word.A^omega: a chain, an accepting sink, a rejecting sink."""
    accept, reject = len(word), len(word) + 1
    transitions = {}
    for q, letter in enumerate(word):
        for symbol in alphabet:
            transitions[(q, symbol)] = q + 1 if symbol == letter else reject
    for symbol in alphabet:
        transitions[(accept, symbol)] = accept
        transitions[(reject, symbol)] = reject
    return DetOmegaAutomaton.build(alphabet, len(word) + 2, 0, transitions, Acceptance.buchi([accept]), name)


def abc_open() -> DetOmegaAutomaton:
    """abc A^omega over {a, b, c}."""
    return _chain("abc", ABC, "abc_open")


def abc_closed() -> DetOmegaAutomaton:
    """Complement of abc A^omega."""
    base = _chain("abc", ABC, "abc_closed")
    return base.with_acceptance(Acceptance.cobuchi([0, 1, 2, 4]))


def ab_or_ba() -> DetOmegaAutomaton:
    """ab A^omega union ba A^omega over {a, b}."""
    transitions = {
        (0, "a"): 1, (0, "b"): 2,
        (1, "a"): 4, (1, "b"): 3,
        (2, "a"): 3, (2, "b"): 4,
    }
    for symbol in AB:
        transitions[(3, symbol)] = 3
        transitions[(4, symbol)] = 4
    return DetOmegaAutomaton.build(AB, 5, 0, transitions, Acceptance.buchi([3]), "ab_or_ba")


def repeated_ab_open() -> DetOmegaAutomaton:
    """O = X A^omega for X = {ab, abab, ababab, ...}; every member extends ab, so O = ab A^omega."""
    return _chain("ab", AB, "repeated_ab_open")


def repeated_ab_closed() -> DetOmegaAutomaton:
    return _chain("ab", AB, "repeated_ab_closed").with_acceptance(Acceptance.cobuchi([0, 1, 3]))


def _last_letter(marked: str) -> Callable[[int, str], int]:
    # state 1 iff the last letter read was ``marked``
    return lambda q, symbol: 1 if symbol == marked else 0


def infinitely_many(symbol: str, alphabet: Alphabet = AB) -> DetOmegaAutomaton:
    return DetOmegaAutomaton.from_function(alphabet, 2, 0, _last_letter(symbol), Acceptance.buchi([1]), f"inf_many_{symbol}")


def finitely_many(symbol: str, alphabet: Alphabet = AB) -> DetOmegaAutomaton:
    return DetOmegaAutomaton.from_function(alphabet, 2, 0, _last_letter(symbol), Acceptance.cobuchi([0]), f"fin_many_{symbol}")


def inf_many_a() -> DetOmegaAutomaton:
    return infinitely_many("a")


def fin_many_a() -> DetOmegaAutomaton:
    return finitely_many("a")


def _seen_b(q: int, symbol: str) -> int:
    return 1 if q == 1 or symbol == "b" else 0


def some_b() -> DetOmegaAutomaton:
    return DetOmegaAutomaton.from_function(AB, 2, 0, _seen_b, Acceptance.reach([1]), "some_b")


def never_b() -> DetOmegaAutomaton:
    return DetOmegaAutomaton.from_function(AB, 2, 0, _seen_b, Acceptance.safety([0]), "never_b")


def delta2_example() -> DetOmegaAutomaton:
    """a a* b A^omega union b^omega: neither open nor closed, but in both second-level classes."""
    transitions = {
        (0, "a"): 1, (0, "b"): 3,
        (1, "a"): 1, (1, "b"): 2,
        (2, "a"): 2, (2, "b"): 2,
        (3, "a"): 4, (3, "b"): 3,
        (4, "a"): 4, (4, "b"): 4,
    }
    return DetOmegaAutomaton.build(AB, 5, 0, transitions, Acceptance.muller([[2], [3]]), "delta2_example")


def delta3_example() -> DetOmegaAutomaton:
    """Over {a, b, c}: eventually only a, or eventually only a and c with both infinitely often."""
    step = lambda q, symbol: ABC.index(symbol)
    return DetOmegaAutomaton.from_function(ABC, 3, 0, step, Acceptance.muller([[0], [0, 2]]), "delta3_example")


def whole_space(alphabet: Alphabet = AB) -> DetOmegaAutomaton:
    return DetOmegaAutomaton.from_function(alphabet, 1, 0, lambda q, s: 0, Acceptance.buchi([0]), "whole_space")


def empty_language(alphabet: Alphabet = AB) -> DetOmegaAutomaton:
    return DetOmegaAutomaton.from_function(alphabet, 1, 0, lambda q, s: 0, Acceptance.buchi([]), "empty_language")


FIXTURE_FILES: Dict[str, Callable[[], DetOmegaAutomaton]] = {
    "abc_open": abc_open,
    "abc_closed": abc_closed,
    "ab_or_ba": ab_or_ba,
    "repeated_ab_open": repeated_ab_open,
    "repeated_ab_closed": repeated_ab_closed,
    "inf_many_a": inf_many_a,
    "fin_many_a": fin_many_a,
    "some_b": some_b,
    "never_b": never_b,
    "delta2_example": delta2_example,
    "delta3_example": delta3_example,
    "whole_space": whole_space,
    "empty_language": empty_language,
}


def is_repeated_ab_fixture(a: DetOmegaAutomaton) -> bool:
    """Alphabet exactly {a, b} and the language of ``repeated_ab_open``."""
    if a.alphabet != AB:
        return False
    return equivalent(a, repeated_ab_open()).equivalent


# =========================
# Arenas
# =========================

def reach_arena() -> Tuple[GameGraph, Objective]:
    """G(M): Player 0 picks v1 or v2 at v0; both lead to v3 and back."""
    graph = GameGraph.build(
        owner=[0, 1, 1, 1],
        edges=[[1, 2], [3], [3], [0]],
        names=["v0", "v1", "v2", "v3"],
        initial=0,
    )
    return graph, Objective.reach([3])


def expanded_arena() -> Tuple[GameGraph, Objective]:
    """G(M'): v1 may detour through the new vertex v4 back to v0."""
    graph = GameGraph.build(
        owner=[0, 1, 1, 1, 1],
        edges=[[1, 2], [3, 4], [3], [0], [0]],
        names=["v0", "v1", "v2", "v3", "v4"],
        initial=0,
    )
    return graph, Objective.muller([[0, 1, 2, 3]])
