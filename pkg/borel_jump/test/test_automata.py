"""Unit tests for deterministic omega-automata and their Boolean operations."""

import random

import pytest

from borel_jump import fixtures
from borel_jump.automata import (
    Acceptance,
    AcceptanceKind,
    DetOmegaAutomaton,
    ProductMode,
    accepts,
    complement,
    enumerate_loops,
    equivalent,
    is_empty,
    product,
    to_muller_normal_form,
    validate,
)
from borel_jump.errors import AlphabetError, AutomatonValidationError, StateGuardExceeded
from borel_jump.generators import all_muller_automata, random_automaton
from borel_jump.oracles import brute_force_loops
from borel_jump.words import Alphabet, all_up_words, make_up_word

AB = fixtures.AB
ABC = fixtures.ABC
WORDS_AB = list(all_up_words(AB, 4))
WORDS_ABC = list(all_up_words(ABC, 3))

AB_FIXTURES = [
    fixtures.ab_or_ba,
    fixtures.repeated_ab_open,
    fixtures.repeated_ab_closed,
    fixtures.inf_many_a,
    fixtures.fin_many_a,
    fixtures.some_b,
    fixtures.never_b,
    fixtures.delta2_example,
    fixtures.whole_space,
    fixtures.empty_language,
]


def w(prefix: str, period: str, alphabet: Alphabet = AB):
    return make_up_word(list(prefix), list(period), alphabet)


def test_validate_reports_missing_transition():
    broken = DetOmegaAutomaton(AB, 2, 0, ((1, None), (0, 0)), Acceptance.buchi([0]))
    with pytest.raises(AutomatonValidationError) as exc:
        validate(broken)
    assert exc.value.state == 0
    assert exc.value.symbol == "b"


def test_validate_rejects_bad_structure():
    with pytest.raises(AutomatonValidationError):
        DetOmegaAutomaton.build(AB, 1, 1, {(0, "a"): 0, (0, "b"): 0}, Acceptance.buchi([0]))
    with pytest.raises(AutomatonValidationError):
        DetOmegaAutomaton.build(AB, 1, 0, {(0, "a"): 0, (0, "b"): 3}, Acceptance.buchi([0]))
    with pytest.raises(AutomatonValidationError):
        DetOmegaAutomaton.build(AB, 1, 0, {(0, "a"): 0, (0, "c"): 0}, Acceptance.buchi([0]))
    with pytest.raises(AutomatonValidationError):
        DetOmegaAutomaton.build(AB, 1, 0, {(0, "a"): 0, (0, "b"): 0}, Acceptance.buchi([2]))
    with pytest.raises(AutomatonValidationError):
        DetOmegaAutomaton.build(AB, 1, 0, {(0, "a"): 0, (0, "b"): 0}, Acceptance.parity([0, 1]))


def test_loops_of_last_letter_automaton():
    loops = enumerate_loops(fixtures.inf_many_a())
    assert [loop.to_list() for loop in loops] == [[0], [1], [0, 1]]


def test_loops_skip_unreachable_states():
    a = DetOmegaAutomaton.build(
        AB, 3, 0,
        {(0, "a"): 0, (0, "b"): 0, (1, "a"): 2, (1, "b"): 2, (2, "a"): 1, (2, "b"): 1},
        Acceptance.buchi([0]),
    )
    assert [loop.to_list() for loop in enumerate_loops(a)] == [[0]]


def test_loop_guard_trips():
    with pytest.raises(StateGuardExceeded) as exc:
        enumerate_loops(fixtures.delta3_example(), max_states=2)
    assert exc.value.size == 3
    assert exc.value.cap == 2


def test_accepts_examples():
    assert accepts(fixtures.inf_many_a(), w("", "ab"))
    assert not accepts(fixtures.inf_many_a(), w("a", "b"))
    assert accepts(fixtures.fin_many_a(), w("aa", "b"))
    assert accepts(fixtures.some_b(), w("ab", "a"))
    assert not accepts(fixtures.some_b(), w("", "a"))
    assert accepts(fixtures.never_b(), w("", "a"))
    assert accepts(fixtures.abc_open(), w("abc", "b", ABC))
    assert accepts(fixtures.abc_open(), w("ab", "c", ABC))
    assert not accepts(fixtures.abc_open(), w("ac", "b", ABC))
    assert accepts(fixtures.delta2_example(), w("", "b"))
    assert not accepts(fixtures.delta2_example(), w("", "a"))


def test_accepts_rejects_foreign_letters():
    with pytest.raises(AlphabetError):
        accepts(fixtures.inf_many_a(), w("c", "a", ABC))


def test_accepts_word_over_smaller_alphabet():
    """A word written over {a} is read by an {a, b} automaton letter by letter."""
    only_a = Alphabet(("a",))
    assert accepts(fixtures.inf_many_a(), make_up_word([], ["a"], only_a))


def test_accepts_word_over_larger_alphabet_using_known_letters():
    assert accepts(fixtures.inf_many_a(), w("b", "ab", ABC))
    assert not accepts(fixtures.inf_many_a(), w("a", "b", ABC))


def test_parity_uses_min_even():
    a = DetOmegaAutomaton.from_function(
        AB, 2, 0, lambda q, s: 1 if s == "a" else 0, Acceptance.parity([1, 0])
    )
    for word in WORDS_AB:
        assert accepts(a, word) == accepts(fixtures.inf_many_a(), word)


@pytest.mark.parametrize("build", AB_FIXTURES)
def test_normal_form_preserves_language(build):
    a = build()
    normal = to_muller_normal_form(a)
    assert normal.automaton.acceptance.kind == AcceptanceKind.MULLER
    assert normal.latched == (not a.acceptance.inf_determined)
    for word in WORDS_AB:
        assert accepts(normal.automaton, word) == accepts(a, word)


def test_normal_form_of_reach_is_latched():
    normal = to_muller_normal_form(fixtures.some_b())
    assert normal.latched
    assert normal.latch_note == "visited-bit latch applied"
    assert {flag for _, flag in normal.origin} == {0, 1}


@pytest.mark.parametrize("build", AB_FIXTURES)
def test_complement_is_pointwise(build):
    a = build()
    b = complement(a)
    for word in WORDS_AB:
        assert accepts(b, word) != accepts(a, word)


def test_complement_of_abc_open():
    a = fixtures.abc_open()
    b = complement(a)
    for word in WORDS_ABC:
        assert accepts(b, word) != accepts(a, word)
    assert equivalent(b, fixtures.abc_closed()).equivalent


@pytest.mark.parametrize("mode", list(ProductMode))
def test_product_is_pointwise(mode):
    combine = {
        ProductMode.AND: lambda x, y: x and y,
        ProductMode.OR: lambda x, y: x or y,
        ProductMode.XOR: lambda x, y: x != y,
    }[mode]
    pairs = [
        (fixtures.inf_many_a(), fixtures.some_b()),
        (fixtures.fin_many_a(), fixtures.delta2_example()),
        (fixtures.ab_or_ba(), fixtures.never_b()),
    ]
    for left, right in pairs:
        both = product(left, right, mode)
        for word in WORDS_AB:
            assert accepts(both, word) == combine(accepts(left, word), accepts(right, word))


def test_product_accepts_mode_strings():
    both = product(fixtures.inf_many_a(), fixtures.fin_many_a(), "and")
    assert is_empty(both).empty


def test_product_rejects_different_alphabets():
    with pytest.raises(AlphabetError):
        product(fixtures.inf_many_a(), fixtures.abc_open(), ProductMode.AND)


def test_is_empty_gives_checked_witness():
    assert is_empty(fixtures.empty_language()).empty
    result = is_empty(fixtures.inf_many_a())
    assert not result.empty
    assert accepts(fixtures.inf_many_a(), result.witness)
    assert result.witness.is_canonical


def test_emptiness_of_reach_and_safety():
    never = DetOmegaAutomaton.from_function(AB, 1, 0, lambda q, s: 0, Acceptance.reach([]))
    assert is_empty(never).empty
    witness = is_empty(fixtures.never_b()).witness
    assert witness is not None and accepts(fixtures.never_b(), witness)


def test_equivalent_and_counterexample():
    assert equivalent(fixtures.inf_many_a(), complement(fixtures.fin_many_a())).equivalent
    assert equivalent(fixtures.some_b(), complement(fixtures.never_b())).equivalent

    same, word = equivalent(fixtures.inf_many_a(), fixtures.fin_many_a())
    assert not same
    assert accepts(fixtures.inf_many_a(), word) != accepts(fixtures.fin_many_a(), word)


def test_equivalence_ignores_names():
    renamed = fixtures.inf_many_a().with_acceptance(Acceptance.buchi([1]), name="other")
    assert renamed == fixtures.inf_many_a()
    assert equivalent(renamed, fixtures.inf_many_a())


def test_loops_match_subset_filtering():
    rng = random.Random(31)
    for _ in range(200):
        a = random_automaton(rng, rng.choice([AB, ABC]), rng.randint(1, 5))
        assert {loop.states for loop in enumerate_loops(a)} == set(brute_force_loops(a)), a


def test_normal_form_is_pointwise_on_random_automata():
    rng = random.Random(32)
    for _ in range(80):
        alphabet = rng.choice([AB, ABC])
        a = random_automaton(rng, alphabet, rng.randint(1, 5))
        normal = to_muller_normal_form(a).automaton
        for word in WORDS_AB if alphabet == AB else WORDS_ABC:
            assert accepts(normal, word) == accepts(a, word), (a, word)


def _accepts_some_short_word(a, words):
    return any(accepts(a, word) for word in words)


def test_emptiness_matches_short_words_on_two_states():
    words = list(all_up_words(AB, 2 * 3))
    for a in all_muller_automata(2, AB):
        assert is_empty(a).empty == (not _accepts_some_short_word(a, words)), a


def test_emptiness_matches_short_words_on_three_states():
    rng = random.Random(33)
    words = list(all_up_words(AB, 3 * 4))
    for _ in range(30):
        a = random_automaton(rng, AB, rng.randint(1, 3))
        assert is_empty(a).empty == (not _accepts_some_short_word(a, words)), a
