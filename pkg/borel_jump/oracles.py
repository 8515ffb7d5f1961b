"""Brute-force classifier oracle.

Shares nothing with the production path beyond the automaton type: loops come
from subset filtering, closure from a double loop, and openness from a direct
search for an accepting loop that avoids the universal residuals.
"""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Set, Tuple

from .automata import AcceptanceKind, DetOmegaAutomaton
from .classifier import BorelLabel


@dataclass(frozen=True)
class OracleVerdict:
    open: bool
    closed: bool
    sigma2: bool
    pi2: bool

    @property
    def label(self) -> BorelLabel:
        table = {
            (True, True): BorelLabel.CLOPEN,
            (True, False): BorelLabel.OPEN_PROPER,
            (False, True): BorelLabel.CLOSED_PROPER,
        }
        if (self.open, self.closed) in table:
            return table[(self.open, self.closed)]
        return {
            (True, True): BorelLabel.DELTA2_PROPER,
            (True, False): BorelLabel.SIGMA2_PROPER,
            (False, True): BorelLabel.PI2_PROPER,
            (False, False): BorelLabel.DELTA3_PROPER,
        }[(self.sigma2, self.pi2)]


class _Expanded:
    """Reachable (state, flag) graph with a loop acceptance predicate."""

    def __init__(self, a: DetOmegaAutomaton):
        kind = a.acceptance.kind
        target = a.acceptance.states
        if kind == AcceptanceKind.REACH:
            flag_of = lambda q, f: f or q in target
        elif kind == AcceptanceKind.SAFETY:
            flag_of = lambda q, f: f or q not in target
        else:
            flag_of = lambda q, f: False

        start = (a.initial, flag_of(a.initial, False))
        self.initial = start
        self.succ: Dict[Tuple[int, bool], List[Tuple[int, bool]]] = {}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            if node in self.succ:
                continue
            q, f = node
            self.succ[node] = [(t, flag_of(t, f)) for t in a.delta[q]]
            queue.extend(self.succ[node])

        if kind == AcceptanceKind.REACH:
            self.accepting: Callable[[FrozenSet], bool] = lambda loop: next(iter(loop))[1]
        elif kind == AcceptanceKind.SAFETY:
            self.accepting = lambda loop: not next(iter(loop))[1]
        else:
            self.accepting = lambda loop: a.acceptance.accepts_loop(frozenset(q for q, _ in loop))

    def reach(self, source, avoid: Set = frozenset()) -> Set:
        seen = {source} if source not in avoid else set()
        stack = list(seen)
        while stack:
            node = stack.pop()
            for t in self.succ[node]:
                if t not in seen and t not in avoid:
                    seen.add(t)
                    stack.append(t)
        return seen

    def is_loop(self, subset: FrozenSet) -> bool:
        for node in subset:
            if not any(t in subset for t in self.succ[node]):
                return False
        first = next(iter(subset))
        outside = set(self.succ) - subset
        return subset <= self.reach(first, outside) and all(first in self.reach(n, outside) for n in subset)

    def loops(self) -> List[FrozenSet]:
        nodes = sorted(self.succ)
        found = []
        for size in range(1, len(nodes) + 1):
            for subset in combinations(nodes, size):
                candidate = frozenset(subset)
                if self.is_loop(candidate):
                    found.append(candidate)
        return found


def _open(expanded: _Expanded, loops: List[FrozenSet], accepting: Dict[FrozenSet, bool]) -> bool:
    universal = {
        node for node in expanded.succ
        if not any(not accepting[loop] and loop <= expanded.reach(node) for loop in loops)
    }
    # L minus the reach-universal language is non-empty iff an accepting loop is
    # reachable without touching a universal state
    avoiding = expanded.reach(expanded.initial, universal)
    return not any(accepting[loop] and loop <= avoiding for loop in loops)


def oracle_classify(a: DetOmegaAutomaton) -> OracleVerdict:
    """Memberships of L(a) computed by exhaustive subset search."""
    expanded = _Expanded(a)
    loops = expanded.loops()
    accepting = {loop: expanded.accepting(loop) for loop in loops}
    rejecting = {loop: not flag for loop, flag in accepting.items()}

    pi2 = not any(accepting[c] and not accepting[d] for c in loops for d in loops if c < d)
    sigma2 = not any(not accepting[c] and accepting[d] for c in loops for d in loops if c < d)
    return OracleVerdict(
        open=_open(expanded, loops, accepting),
        closed=_open(expanded, loops, rejecting),
        sigma2=sigma2,
        pi2=pi2,
    )


def brute_force_loops(a: DetOmegaAutomaton) -> List[FrozenSet[int]]:
    """Reachable loops of ``a`` itself by subset filtering (no latch)."""
    reachable = set()
    stack = [a.initial]
    while stack:
        q = stack.pop()
        if q in reachable:
            continue
        reachable.add(q)
        stack.extend(a.delta[q])

    def strongly_connected(subset: FrozenSet[int]) -> bool:
        for source in subset:
            seen = {source}
            frontier = [source]
            while frontier:
                q = frontier.pop()
                for t in a.delta[q]:
                    if t in subset and t not in seen:
                        seen.add(t)
                        frontier.append(t)
            if seen != subset:
                return False
        return True

    found = []
    nodes = sorted(reachable)
    for size in range(1, len(nodes) + 1):
        for subset in combinations(nodes, size):
            candidate = frozenset(subset)
            if all(any(t in candidate for t in a.delta[q]) for q in candidate) and strongly_connected(candidate):
                found.append(candidate)
    return found
