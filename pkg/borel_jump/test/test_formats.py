"""Tests for the automaton, game, PGSolver and HOA file formats."""

from pathlib import Path

import pytest

from borel_jump import fixtures
from borel_jump.automata import AcceptanceKind, accepts, equivalent
from borel_jump.errors import GameValidationError, ParseError
from borel_jump.formats import (
    dump_automaton,
    dump_game,
    dump_pgsolver,
    parse_acceptance,
    parse_automaton,
    parse_game,
    parse_hoa,
    parse_pgsolver,
    parse_up_word,
    read_automaton,
    read_game,
    read_hoa,
    read_pgsolver,
)
from borel_jump.games import Objective, ObjectiveKind
from borel_jump.words import Alphabet

FIXTURE_DIR = Path(__file__).resolve().parents[2] / "fixtures"
BITS = Alphabet(("0", "1"))

SMALL = """\
alphabet: a b
states: 2
initial: 0
acceptance: buchi 1
trans: 0 a 1
trans: 0 b 0
trans: 1 a 1
trans: 1 b 0
"""

HOA_HEADER = """\
HOA: v1
States: 2
Start: 0
AP: 1 "p"
"""


def hoa(acceptance: str, body: str) -> str:
    return HOA_HEADER + acceptance + "\n--BODY--\n" + body + "--END--\n"


# =========================
# Automaton text
# =========================

@pytest.mark.parametrize("stem", sorted(fixtures.FIXTURE_FILES))
def test_fixture_files_match_builders(stem):
    a = read_automaton(FIXTURE_DIR / f"{stem}.aut")
    assert a == fixtures.FIXTURE_FILES[stem]()
    assert a.name == stem


@pytest.mark.parametrize("stem", sorted(fixtures.FIXTURE_FILES))
def test_dump_parses_back(stem):
    a = fixtures.FIXTURE_FILES[stem]()
    again = parse_automaton(dump_automaton(a))
    assert again == a
    assert again.name == a.name


def test_parse_small_automaton():
    a = parse_automaton(SMALL, "small.aut")
    assert a.name == "small"
    assert a.alphabet == fixtures.AB
    assert a.acceptance.kind == AcceptanceKind.BUCHI
    assert equivalent(a, fixtures.inf_many_a()).equivalent


def test_comments_and_blank_lines_are_ignored():
    text = "# header\n\n" + SMALL.replace("states: 2", "states: 2   # two states")
    assert parse_automaton(text) == parse_automaton(SMALL)


def test_parse_error_carries_line_number():
    text = SMALL.replace("trans: 1 a 1", "trans: 1 a")
    with pytest.raises(ParseError) as exc:
        parse_automaton(text, "broken.aut")
    assert exc.value.line == 7
    assert str(exc.value).startswith("broken.aut:7: ")


def test_unknown_key_is_rejected():
    with pytest.raises(ParseError) as exc:
        parse_automaton("colour: blue\n" + SMALL)
    assert exc.value.line == 1


def test_missing_and_duplicate_transitions():
    with pytest.raises(ParseError) as exc:
        parse_automaton(SMALL.replace("trans: 1 b 0\n", ""))
    assert "missing transition for (1, b)" in str(exc.value)

    with pytest.raises(ParseError) as exc:
        parse_automaton(SMALL + "trans: 0 a 0\n")
    assert exc.value.line == 9


def test_transition_outside_alphabet_or_states():
    with pytest.raises(ParseError):
        parse_automaton(SMALL + "trans: 0 c 0\n")
    with pytest.raises(ParseError):
        parse_automaton(SMALL.replace("trans: 1 b 0", "trans: 1 b 5"))


def test_missing_header_line():
    with pytest.raises(ParseError) as exc:
        parse_automaton(SMALL.replace("initial: 0\n", ""))
    assert "missing initial" in str(exc.value)


def test_parse_acceptance_shapes():
    parity = parse_acceptance("parity 0:1 1:2")
    assert parity.priority == (1, 2)
    muller = parse_acceptance("muller {2} {1 2}")
    assert muller.family == {frozenset({2}), frozenset({1, 2})}
    assert parse_acceptance("safety 0 1").states == {0, 1}
    with pytest.raises(ParseError):
        parse_acceptance("muller {1} 2")
    with pytest.raises(ParseError):
        parse_acceptance("parity 1:0")
    with pytest.raises(ParseError):
        parse_acceptance("rabin 0")


# =========================
# Games
# =========================

def test_game_fixtures_match_example_arenas():
    assert read_game(FIXTURE_DIR / "gm.game") == fixtures.reach_arena()
    g, o = read_game(FIXTURE_DIR / "gm_prime.game")
    expected_g, expected_o = fixtures.expanded_arena()
    assert g == expected_g
    assert o == expected_o


def test_objective_vertices_by_name():
    text = (
        "vertex 0 name start owner 0 succ 1\n"
        "vertex 1 name goal owner 1 succ 0, 1\n"
        "objective parity start:1 goal:0\n"
    )
    g, o = parse_game(text)
    assert g.edges[1] == (0, 1)
    assert o.priority == (1, 0)
    _, o = parse_game(text.replace("parity start:1 goal:0", "buchi goal"))
    assert o == Objective.buchi([1])


def test_dump_game_parses_back():
    g, o = fixtures.expanded_arena()
    assert parse_game(dump_game(g, o)) == (g, o)


def test_game_errors_carry_line_numbers():
    with pytest.raises(ParseError) as exc:
        parse_game("vertex 0 owner 0 succ 0\nvertex 0 owner 1 succ 0\nobjective reach 0\n")
    assert exc.value.line == 2

    with pytest.raises(ParseError) as exc:
        parse_game("vertex 0 owner 0 succ 3\nobjective reach 0\n")
    assert exc.value.line == 1

    with pytest.raises(ParseError) as exc:
        parse_game("vertex 0 owner 0 succ 0\nobjective reach nowhere\n")
    assert exc.value.line == 2


def test_game_needs_an_objective_and_dense_ids():
    with pytest.raises(ParseError):
        parse_game("vertex 0 owner 0 succ 0\n")
    with pytest.raises(ParseError):
        parse_game("vertex 1 owner 0 succ 1\nobjective reach 1\n")


# =========================
# PGSolver
# =========================

def test_read_pgsolver_fixture():
    g, o = read_pgsolver(FIXTURE_DIR / "parity_small.pg")
    assert g.names == ("a", "b", "c", "d")
    assert g.owner == (0, 1, 1, 0)
    assert g.initial == 0
    assert o.kind == ObjectiveKind.PARITY
    assert o.priority == (1, 2, 0, 1)


def test_pgsolver_dump_parses_back():
    g, o = read_pgsolver(FIXTURE_DIR / "parity_small.pg")
    assert parse_pgsolver(dump_pgsolver(g, o)) == (g, o)


def test_pgsolver_errors():
    with pytest.raises(ParseError) as exc:
        parse_pgsolver("parity 1;\n0 0 0 1;\n1 1 1 0\n")
    assert exc.value.line == 3
    with pytest.raises(ParseError):
        parse_pgsolver("parity 5;\n0 0 0 0;\n")
    with pytest.raises(GameValidationError):
        dump_pgsolver(*fixtures.reach_arena())


# =========================
# HOA
# =========================

def test_read_hoa_fixture():
    a = read_hoa(FIXTURE_DIR / "inf_many_p.hoa")
    assert a.name == "GF p"
    assert a.alphabet == BITS
    assert equivalent(a, fixtures.infinitely_many("1", BITS)).equivalent
    assert accepts(a, parse_up_word("(01)^w", BITS))
    assert not accepts(a, parse_up_word("1(0)^w", BITS))


def test_hoa_parity_with_unmarked_state():
    body = "State: 0\n[!0] 0\n[0] 1\nState: 1 {0}\n[!0] 0\n[0] 1\n"
    a = parse_hoa(hoa("acc-name: parity min even 1", body))
    assert a.acceptance.priority == (1, 0)
    assert equivalent(a, fixtures.infinitely_many("1", BITS)).equivalent


def test_hoa_acceptance_line_without_name():
    body = "State: 0\n[!0] 0\n[0] 1\nState: 1 {0}\n[!0] 0\n[0] 1\n"
    a = parse_hoa(hoa("Acceptance: 1 Fin(0)", body))
    assert equivalent(a, fixtures.finitely_many("1", BITS)).equivalent


def test_hoa_two_propositions():
    text = (
        "HOA: v1\nStates: 1\nStart: 0\nAP: 2 \"p\" \"q\"\nacc-name: all\nAcceptance: 0 t\n"
        "--BODY--\nState: 0\n[0 & !1 | (1)] 0\n[!0 & !1] 0\n--END--\n"
    )
    a = parse_hoa(text)
    assert list(a.alphabet) == ["00", "01", "10", "11"]


@pytest.mark.parametrize(
    "body, fragment",
    [
        ("State: 0\n[t] 0\n[0] 1\nState: 1\n[t] 1\n", "nondeterministic"),
        ("State: 0\n[0] 1\nState: 1\n[t] 1\n", "no edge"),
        ("State: [0] 0\n[t] 0\nState: 1\n[t] 1\n", "state labels"),
        ("State: 0\n[t] 0 {0}\nState: 1\n[t] 1\n", "transition-based"),
        ("State: 0\n0\nState: 1\n[t] 1\n", "implicit labels"),
        ("State: 0\n[t & 3] 0\nState: 1\n[t] 1\n", "AP 3"),
    ],
)
def test_hoa_rejects_unsupported_input(body, fragment):
    with pytest.raises(ParseError) as exc:
        parse_hoa(hoa("acc-name: Buchi\nAcceptance: 1 Inf(0)", body))
    assert fragment in str(exc.value)


def test_hoa_needs_one_start_state():
    text = hoa("acc-name: Buchi", "State: 0\n[t] 0\nState: 1\n[t] 1\n").replace("Start: 0\n", "Start: 0\nStart: 1\n")
    with pytest.raises(ParseError):
        parse_hoa(text)
