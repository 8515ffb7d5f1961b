"""Exact low-Borel classification of deterministic omega-automata languages.

Openness and closedness go through language equivalence with the
reach-a-universal-state automaton; the second-level memberships are the
loop-closure criteria on the Muller normal form.
"""

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from . import graphs
from .automata import (
    Acceptance,
    DetOmegaAutomaton,
    EquivalenceResult,
    Loop,
    MullerNormalForm,
    complement,
    equivalent,
    to_muller_normal_form,
)
from .errors import ClassificationError, InternalCheckError
from .logging_config import get_logger
from .monitoring.metrics import metrics
from .words import FiniteWord, UPWord

logger = get_logger(__name__)

COMPLETENESS_NOTE = (
    "completeness uses proper membership read symmetrically: Sigma_n-complete iff in Sigma_n and not in Pi_n, "
    "Pi_n-complete iff in Pi_n and not in Sigma_n; the printed Sigma case subtracts Pi_(n-1) instead"
)


class BorelLabel(str, Enum):
    """Exact class of an omega-regular language below the third level."""
    CLOPEN = "CLOPEN"
    OPEN_PROPER = "OPEN_PROPER"
    CLOSED_PROPER = "CLOSED_PROPER"
    DELTA2_PROPER = "DELTA2_PROPER"
    SIGMA2_PROPER = "SIGMA2_PROPER"
    PI2_PROPER = "PI2_PROPER"
    DELTA3_PROPER = "DELTA3_PROPER"

    @property
    def dual(self) -> "BorelLabel":
        return _DUAL.get(self, self)


_DUAL = {
    BorelLabel.OPEN_PROPER: BorelLabel.CLOSED_PROPER,
    BorelLabel.CLOSED_PROPER: BorelLabel.OPEN_PROPER,
    BorelLabel.SIGMA2_PROPER: BorelLabel.PI2_PROPER,
    BorelLabel.PI2_PROPER: BorelLabel.SIGMA2_PROPER,
}


class CompletenessKind(str, Enum):
    NOT_APPLICABLE = "NOT_APPLICABLE"
    SIGMA_COMPLETE = "SIGMA_COMPLETE"
    PI_COMPLETE = "PI_COMPLETE"


@dataclass(frozen=True)
class Memberships:
    open: bool
    closed: bool
    sigma2: bool
    pi2: bool

    def dual(self) -> "Memberships":
        return Memberships(open=self.closed, closed=self.open, sigma2=self.pi2, pi2=self.sigma2)

    def to_dict(self) -> Dict[str, bool]:
        return {"open": self.open, "closed": self.closed, "sigma2": self.sigma2, "pi2": self.pi2}


@dataclass(frozen=True)
class ClassEvidence:
    """Witnesses for every failed membership test.

    A closure violation is a pair of loops ``(C, C2)`` with ``C`` a proper subset
    of ``C2``. An openness counterexample is a word in the language none of whose
    prefixes has a universal residual; the closedness one is the dual.
    """
    pi2_violation: Optional[Tuple[Loop, Loop]] = None
    sigma2_violation: Optional[Tuple[Loop, Loop]] = None
    open_counterexample: Optional[UPWord] = None
    closed_counterexample: Optional[UPWord] = None

    def to_dict(self) -> Dict[str, Any]:
        def pair(value):
            return None if value is None else [value[0].to_list(), value[1].to_list()]

        def word(value):
            return None if value is None else value.render()

        return {
            "pi2_violation": pair(self.pi2_violation),
            "sigma2_violation": pair(self.sigma2_violation),
            "open_counterexample": word(self.open_counterexample),
            "closed_counterexample": word(self.closed_counterexample),
            "completeness_criterion": COMPLETENESS_NOTE,
        }


@dataclass(frozen=True)
class BorelClassLabel:
    label: BorelLabel
    memberships: Memberships
    evidence: ClassEvidence = field(default_factory=ClassEvidence)


@dataclass(frozen=True)
class CompletenessLabel:
    kind: CompletenessKind
    level: Optional[int] = None

    def render(self) -> str:
        if self.kind == CompletenessKind.SIGMA_COMPLETE:
            return f"Sigma{self.level}-complete"
        if self.kind == CompletenessKind.PI_COMPLETE:
            return f"Pi{self.level}-complete"
        return "not-applicable"

    def __str__(self) -> str:
        return self.render()


# =========================
# Residual analysis
# =========================

def universal_states(n: MullerNormalForm) -> FrozenSet[int]:
    """Reachable states from which every run is accepting."""
    return _residual_states(n, rejecting=True)


def co_universal_states(n: MullerNormalForm) -> FrozenSet[int]:
    """Reachable states from which every run is rejecting."""
    return _residual_states(n, rejecting=False)


def _residual_states(n: MullerNormalForm, rejecting: bool) -> FrozenSet[int]:
    a = n.automaton
    bad = n.rejecting_loops if rejecting else n.accepting_loops
    result = set()
    for q in a.reachable_states:
        ahead = graphs.reachable(a.successors, [q])
        if not any(min(loop.states) in ahead for loop in bad):
            result.add(q)
    return frozenset(result)


def _openness(n: MullerNormalForm, max_states: Optional[int]) -> EquivalenceResult:
    reach_universal = n.automaton.with_acceptance(Acceptance.reach(universal_states(n)))
    return equivalent(n.automaton, reach_universal, max_states)


def _complement_form(n: MullerNormalForm, max_states: Optional[int]) -> MullerNormalForm:
    return to_muller_normal_form(complement(n.automaton, max_states), max_states)


def is_open(n: MullerNormalForm, max_states: Optional[int] = None) -> bool:
    """L is open iff it equals the set of words with a prefix reaching a universal state."""
    return _openness(n, max_states).equivalent


def is_closed(n: MullerNormalForm, max_states: Optional[int] = None) -> bool:
    return is_open(_complement_form(n, max_states), max_states)


def pi2_violation(n: MullerNormalForm) -> Optional[Tuple[Loop, Loop]]:
    """First pair (C, C2), C a proper subloop of C2, with C accepting and C2 rejecting."""
    return _closure_violation(n, small_accepting=True)


def sigma2_violation(n: MullerNormalForm) -> Optional[Tuple[Loop, Loop]]:
    """First pair (C, C2), C a proper subloop of C2, with C rejecting and C2 accepting."""
    return _closure_violation(n, small_accepting=False)


def _closure_violation(n: MullerNormalForm, small_accepting: bool) -> Optional[Tuple[Loop, Loop]]:
    table = n.loop_table
    for small in table:
        if small.accepting != small_accepting:
            continue
        for big in table:
            if big.accepting == small_accepting or not small.loop.states < big.loop.states:
                continue
            return small.loop, big.loop
    return None


def is_pi2(n: MullerNormalForm) -> bool:
    """Accepting loops are closed under superloops."""
    return pi2_violation(n) is None


def is_sigma2(n: MullerNormalForm) -> bool:
    """Accepting loops are closed under subloops."""
    return sigma2_violation(n) is None


# =========================
# Classification
# =========================

def label_for(memberships: Memberships) -> BorelLabel:
    """The unique exact label consistent with the four memberships.

    Raises:
        ClassificationError: If open does not imply sigma2 or closed does not imply pi2
    """
    m = memberships
    if (m.open and not m.sigma2) or (m.closed and not m.pi2):
        raise ClassificationError(f"inconsistent memberships {m.to_dict()}")
    if m.open and m.closed:
        return BorelLabel.CLOPEN
    if m.open:
        return BorelLabel.OPEN_PROPER
    if m.closed:
        return BorelLabel.CLOSED_PROPER
    if m.sigma2 and m.pi2:
        return BorelLabel.DELTA2_PROPER
    if m.sigma2:
        return BorelLabel.SIGMA2_PROPER
    if m.pi2:
        return BorelLabel.PI2_PROPER
    return BorelLabel.DELTA3_PROPER


def classify(a: DetOmegaAutomaton, max_states: Optional[int] = None) -> BorelClassLabel:
    """Exact label of L(a) with evidence for every failed membership.

    Raises:
        StateGuardExceeded: If loop enumeration exceeds the guard
        ClassificationError: If the memberships violate the containment lattice
    """
    n = to_muller_normal_form(a, max_states)
    openness = _openness(n, max_states)
    closedness = _openness(_complement_form(n, max_states), max_states)
    up_violation = pi2_violation(n)
    down_violation = sigma2_violation(n)

    memberships = Memberships(
        open=openness.equivalent,
        closed=closedness.equivalent,
        sigma2=down_violation is None,
        pi2=up_violation is None,
    )
    evidence = ClassEvidence(
        pi2_violation=up_violation,
        sigma2_violation=down_violation,
        open_counterexample=openness.counterexample,
        closed_counterexample=closedness.counterexample,
    )
    label = label_for(memberships)
    metrics.increment_counter("borel_classifications_total", {"label": label.value})
    logger.debug(
        f"Classified {a} as {label.value}",
        extra={"automaton": a.name, "label": label.value, "loops": len(n.loop_table)},
    )
    return BorelClassLabel(label, memberships, evidence)


def completeness_label(c: BorelClassLabel) -> CompletenessLabel:
    """Completeness by proper membership; labels below a side's own class are not complete."""
    return _COMPLETENESS.get(c.label, CompletenessLabel(CompletenessKind.NOT_APPLICABLE))


_COMPLETENESS = {
    BorelLabel.OPEN_PROPER: CompletenessLabel(CompletenessKind.SIGMA_COMPLETE, 1),
    BorelLabel.CLOSED_PROPER: CompletenessLabel(CompletenessKind.PI_COMPLETE, 1),
    BorelLabel.SIGMA2_PROPER: CompletenessLabel(CompletenessKind.SIGMA_COMPLETE, 2),
    BorelLabel.PI2_PROPER: CompletenessLabel(CompletenessKind.PI_COMPLETE, 2),
}


# =========================
# Finite bases of clopen sets
# =========================

def clopen_basis(a: DetOmegaAutomaton, max_states: Optional[int] = None) -> List[FiniteWord]:
    """Finite prefix antichain X with L(a) = X A^omega, in shortlex order.

    Breadth-first from the initial state in alphabet order: a word is emitted
    the first time it reaches a universal state and dropped once it reaches a
    state with no accepting continuation. ``[epsilon]`` when the initial state
    is already universal.

    Raises:
        ClassificationError: If L(a) is not clopen
        InternalCheckError: If the basis fails the equivalence re-check
    """
    from .fixtures import prefix_automaton

    verdict = classify(a, max_states)
    if verdict.label != BorelLabel.CLOPEN:
        raise ClassificationError(f"clopen_basis needs a clopen language, {a} is {verdict.label.value}")

    n = to_muller_normal_form(a, max_states)
    m = n.automaton
    accept = universal_states(n)
    reject = co_universal_states(n)
    # In a clopen language every path is decided within num_states letters
    depth_bound = m.num_states

    basis: List[FiniteWord] = []
    queue = deque([(m.initial, ())])
    while queue:
        q, letters = queue.popleft()
        if q in accept:
            basis.append(FiniteWord(letters, a.alphabet))
            continue
        if q in reject:
            continue
        if len(letters) >= depth_bound:
            raise InternalCheckError(f"undecided prefix {' '.join(letters)} in clopen {a}")
        for symbol, target in zip(m.alphabet.symbols, m.delta[q]):
            queue.append((target, letters + (symbol,)))

    check = equivalent(a, prefix_automaton(basis, a.alphabet), max_states)
    if not check.equivalent:
        raise InternalCheckError(f"basis of {a} differs from it on {check.counterexample}")
    logger.debug(f"Clopen basis of {a}: {len(basis)} words")
    return basis
