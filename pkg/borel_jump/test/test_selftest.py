"""Generators and the oracle self-test suites."""

import random

from borel_jump import selftest
from borel_jump.automata import AcceptanceKind
from borel_jump.errors import StateGuardExceeded
from borel_jump.games import ObjectiveKind
from borel_jump.generators import (
    all_muller_automata,
    canonical_tables,
    is_canonical_table,
    random_automaton,
    random_game,
    random_up_word,
)
from borel_jump.selftest import SuiteResult, classifier_suite, embedding_suite, run_selftest, solver_suite
from borel_jump.words import Alphabet

AB = Alphabet(("a", "b"))


def test_random_automaton_is_reproducible():
    first = random_automaton(random.Random(9), AB, 3)
    second = random_automaton(random.Random(9), AB, 3)
    assert first == second


def test_random_automaton_kind():
    a = random_automaton(random.Random(1), AB, 4, AcceptanceKind.PARITY)
    assert a.acceptance.kind == AcceptanceKind.PARITY
    assert a.name == "random-parity-4"
    assert len(a.acceptance.priority) == 4


def test_canonical_tables():
    tables = list(canonical_tables(2, AB))
    assert len(tables) == 12
    assert all(is_canonical_table(t) for t in tables)
    assert not is_canonical_table(((0, 0), (1, 1)))
    assert not is_canonical_table(((0, 2), (1, 1), (0, 0)))


def test_all_muller_automata_one_state():
    automata = list(all_muller_automata(1, AB))
    assert len(automata) == 2
    assert {len(a.acceptance.family) for a in automata} == {0, 1}


def test_random_words_are_canonical():
    rng = random.Random(4)
    for _ in range(50):
        assert random_up_word(rng, AB).is_canonical


def test_random_games_are_valid():
    rng = random.Random(2)
    for kind in ObjectiveKind:
        g, o = random_game(rng, 4, kind)
        assert o.validate(g) is o
        assert all(g.edges[v] for v in g.vertices)


def test_suite_result_keeps_first_failure():
    result = SuiteResult("demo")
    result.record(True, lambda: "never built")
    result.record(False, lambda: "first")
    result.record(False, lambda: "second")
    assert result.instances == 3
    assert result.failures == 2
    assert result.first_failure == "first"
    assert not result.passed


def test_classifier_suite_passes():
    result = classifier_suite(random.Random(1), 1)
    assert result.passed, result.first_failure
    assert result.instances > 100


def test_solver_suite_passes():
    result = solver_suite(random.Random(2), 1)
    assert result.passed, result.first_failure
    assert result.instances == 150


def test_embedding_suite_passes():
    result = embedding_suite(random.Random(3), 1)
    assert result.passed, result.first_failure


def test_run_selftest_is_deterministic():
    first = run_selftest(17, samples=1)
    second = run_selftest(17, samples=1)
    assert [(s.suite, s.instances, s.failures) for s in first] == [(s.suite, s.instances, s.failures) for s in second]


def test_solver_errors_are_recorded_with_the_instance(monkeypatch):
    def tripped(g, o, max_vertices=None):
        raise StateGuardExceeded("arena", g.num_vertices, 0)

    monkeypatch.setattr(selftest, "solve", tripped)
    result = solver_suite(random.Random(2), 1)
    assert result.failures == result.instances == 150
    assert result.first_failure.startswith("StateGuardExceeded: arena has 4 states")
    assert "objective" in result.first_failure


def test_classifier_guard_trips_fail_the_suite():
    result = classifier_suite(random.Random(1), 1, max_states=1)
    assert not result.passed
    assert "StateGuardExceeded" in result.first_failure
