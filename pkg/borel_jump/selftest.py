"""Small-instance oracle suites run by ``borel-jump selftest``.

Each suite compares a production routine with an independent brute-force
one and reports the first disagreement together with the serialized
instance, so a failure can be replayed from the report alone.
"""

import random
from dataclasses import dataclass
from typing import Callable, List, Optional

from .automata import accepts, equivalent
from .classifier import classify
from .config import config
from .errors import BorelJumpError
from .expansion import embed
from .formats.automaton_text import dump_automaton
from .formats.game_text import dump_game
from .generators import all_muller_automata, random_automaton, random_game, random_up_word
from .games.arena import ObjectiveKind
from .games.oracles import mcnaughton_oracle, positional_oracle
from .games.solver import solve
from .games.verify import verify_strategy
from .logging_config import get_logger
from .oracles import oracle_classify
from .words import Alphabet, FiniteWord, canonicalize

logger = get_logger(__name__)

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))
ABCD = Alphabet(("a", "b", "c", "d"))


@dataclass
class SuiteResult:
    suite: str
    instances: int = 0
    failures: int = 0
    first_failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, describe: Callable[[], str]):
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = describe()
                logger.warning(f"Self-test {self.suite} failed:\n{self.first_failure}")

    def record_error(self, error: BorelJumpError, describe: Callable[[], str]):
        self.record(False, lambda: f"{type(error).__name__}: {error}\n{describe()}")


def classifier_suite(rng: random.Random, samples: int, max_states: Optional[int] = None) -> SuiteResult:
    """Exhaustive 2-state Muller automata over {a,b}, then random 4-state ones."""
    result = SuiteResult("classifier")

    def check(a):
        try:
            verdict = oracle_classify(a)
            label = classify(a, max_states)
        except BorelJumpError as e:
            result.record_error(e, lambda: dump_automaton(a))
            return
        m = label.memberships
        ok = (m.open, m.closed, m.sigma2, m.pi2) == (verdict.open, verdict.closed, verdict.sigma2, verdict.pi2)
        result.record(ok, lambda: f"classify gave {label.label.value}, oracle {verdict.label.value}\n{dump_automaton(a)}")

    for a in all_muller_automata(2, AB):
        check(a)
    for _ in range(100 * samples):
        check(random_automaton(rng, AB, 4))
    return result


def solver_suite(rng: random.Random, samples: int, max_vertices: Optional[int] = None) -> SuiteResult:
    """Random parity games against positional enumeration, Muller games against McNaughton."""
    result = SuiteResult("solver")

    def check(g, o, oracle):
        try:
            solved = solve(g, o, max_vertices)
            expected = oracle(g, o)
            ok = (solved.win0, solved.win1) == expected and verify_strategy(g, o, solved)
        except BorelJumpError as e:
            result.record_error(e, lambda: dump_game(g, o))
            return
        result.record(ok, lambda: f"solver regions {sorted(solved.win0)} / {sorted(solved.win1)}, "
                                  f"oracle {sorted(expected[0])} / {sorted(expected[1])}\n{dump_game(g, o)}")

    for _ in range(100 * samples):
        kind = rng.choice([ObjectiveKind.REACH, ObjectiveKind.SAFETY, ObjectiveKind.BUCHI,
                           ObjectiveKind.COBUCHI, ObjectiveKind.PARITY])
        g, o = random_game(rng, 4, kind)
        check(g, o, positional_oracle)
    for _ in range(50 * samples):
        g, o = random_game(rng, rng.randint(1, 4), ObjectiveKind.MULLER)
        check(g, o, mcnaughton_oracle)
    return result


def embedding_suite(rng: random.Random, samples: int, max_states: Optional[int] = None) -> SuiteResult:
    """Membership is preserved on old words, new letters are rejected, embeddings compose."""
    result = SuiteResult("embedding")

    def check(i, a):
        b = embed(a, ABC, max_states)
        for _ in range(5):
            w = random_up_word(rng, ABC)
            expected = accepts(a, w) if w.uses_only(AB) else False
            result.record(accepts(b, w) == expected,
                          lambda: f"embedded membership of {w} differs\n{dump_automaton(a)}")
        old = random_up_word(rng, AB)
        lifted = canonicalize(FiniteWord(old.prefix.letters, ABC), FiniteWord(old.period.letters, ABC))
        result.record(accepts(b, lifted) == accepts(a, old),
                      lambda: f"membership of {old} changed by embedding\n{dump_automaton(a)}")
        if i % 10 == 0:
            composed = embed(embed(a, ABC, max_states), ABCD, max_states)
            direct = embed(a, ABCD, max_states)
            same = equivalent(composed, direct, max_states)
            result.record(same.equivalent,
                          lambda: f"embedding does not compose, counterexample {same.counterexample}\n{dump_automaton(a)}")

    for i in range(100 * samples):
        a = random_automaton(rng, AB, rng.randint(1, 4))
        try:
            check(i, a)
        except BorelJumpError as e:
            result.record_error(e, lambda: dump_automaton(a))
    return result


def run_selftest(seed: int, samples: Optional[int] = None, max_states: Optional[int] = None) -> List[SuiteResult]:
    """Run every suite with one seeded stream per suite.

    An instance that raises (a tripped size guard included) counts as a
    failure of its suite, with the serialized instance as the report.
    """
    samples = config.SELFTEST_SAMPLES if samples is None else samples
    suites = [
        classifier_suite(random.Random(seed), samples, max_states),
        solver_suite(random.Random(seed + 1), samples),
        embedding_suite(random.Random(seed + 2), samples, max_states),
    ]
    for suite in suites:
        logger.info(f"Self-test {suite.suite}: {suite.instances} instances, {suite.failures} failures")
    return suites
