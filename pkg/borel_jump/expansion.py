"""Alphabet expansion: embedding A^omega languages into B^omega and jump reports."""

from dataclasses import dataclass
from typing import Optional, Tuple

from .automata import DetOmegaAutomaton, to_muller_normal_form
from .classifier import BorelClassLabel, BorelLabel, classify
from .errors import AlphabetError
from .fixtures import OPEN_SET_CLAIM, is_repeated_ab_fixture
from .hierarchy import ClassRef, class_leq, minimal_ref, predict_jump, sort_refs
from .logging_config import get_logger
from .words import Alphabet

logger = get_logger(__name__)


def embed(a: DetOmegaAutomaton, alphabet: Alphabet, max_states: Optional[int] = None) -> DetOmegaAutomaton:
    """The same word set viewed inside ``alphabet``^omega.

    Works on the Muller normal form and adds one absorbing sink, reached by
    every letter outside a's alphabet. The sink is in no family member, so any
    word using a new letter is rejected.

    Raises:
        AlphabetError: If a's alphabet is not contained in ``alphabet``
    """
    if not a.alphabet.issubset(alphabet):
        missing = [s for s in a.alphabet if s not in alphabet]
        raise AlphabetError(
            f"expanded alphabet {{{', '.join(alphabet)}}} lacks symbols {', '.join(missing)} of {a}"
        )
    m = to_muller_normal_form(a, max_states).automaton
    sink = m.num_states
    rows = []
    for q in range(m.num_states):
        rows.append(tuple(m.step(q, s) if s in m.alphabet else sink for s in alphabet))
    rows.append(tuple(sink for _ in alphabet))
    name = f"{a.name or 'automaton'}@{alphabet.to_csv()}"
    embedded = DetOmegaAutomaton(alphabet, sink + 1, m.initial, tuple(rows), m.acceptance, name)
    logger.debug(f"Embedded {a} into {{{', '.join(alphabet)}}}: {embedded.num_states} states")
    return embedded


@dataclass(frozen=True)
class JumpReport:
    """Exact classes before and after expansion against the predicted bounds.

    ``consistent`` holds iff the after-label lies in every predicted class.
    ``claim_note`` is set only for the registered open-set fixture, whose stated
    outcome is recorded next to the computed label; ``claim_disagrees`` is set
    when that label is not SIGMA2_PROPER.
    """
    name: str
    alphabet_before: Alphabet
    alphabet_after: Alphabet
    before: BorelClassLabel
    after: BorelClassLabel
    predicted: Tuple[ClassRef, ...]
    consistent: bool
    claim_note: Optional[str] = None
    claim_disagrees: bool = False


def jump_report(a: DetOmegaAutomaton, alphabet: Alphabet, max_states: Optional[int] = None) -> JumpReport:
    """Classify before and after embedding and check the predicted upper bounds."""
    before = classify(a, max_states)
    after = classify(embed(a, alphabet, max_states), max_states)
    predicted = tuple(sort_refs(predict_jump(minimal_ref(before))))
    consistent = all(class_leq(after, c) for c in predicted)

    claim_note = None
    claim_disagrees = False
    if is_repeated_ab_fixture(a):
        claim_disagrees = after.label != BorelLabel.SIGMA2_PROPER
        verdict = "differs from" if claim_disagrees else "matches"
        claim_note = f"{OPEN_SET_CLAIM}; computed after-label {after.label.value} {verdict} it"

    if not consistent:
        logger.warning(
            f"Jump of {a} to {{{', '.join(alphabet)}}} is outside the predicted bounds",
            extra={"automaton": a.name, "label": after.label.value},
        )
    return JumpReport(
        name=a.name,
        alphabet_before=a.alphabet,
        alphabet_after=alphabet,
        before=before,
        after=after,
        predicted=predicted,
        consistent=consistent,
        claim_note=claim_note,
        claim_disagrees=claim_disagrees,
    )
