"""Unit tests for alphabet embedding and jump reports."""

import pytest

from borel_jump import fixtures
from borel_jump.automata import accepts, equivalent
from borel_jump.classifier import BorelLabel
from borel_jump.errors import AlphabetError
from borel_jump.expansion import embed, jump_report
from borel_jump.hierarchy import pi, sigma
from borel_jump.schemas import JumpDocument
from borel_jump.words import Alphabet, FiniteWord, all_up_words, canonicalize, make_up_word

AB = fixtures.AB
ABC = fixtures.ABC
ABCD = Alphabet(("a", "b", "c", "d"))


def lift(word, alphabet):
    return canonicalize(FiniteWord(word.prefix.letters, alphabet), FiniteWord(word.period.letters, alphabet))


@pytest.mark.parametrize("build", [fixtures.inf_many_a, fixtures.some_b, fixtures.never_b, fixtures.delta2_example])
def test_embedding_preserves_old_words(build):
    a = build()
    b = embed(a, ABC)
    assert b.alphabet == ABC
    for word in all_up_words(AB, 4):
        assert accepts(b, lift(word, ABC)) == accepts(a, word)


def test_embedding_rejects_words_with_new_letters():
    b = embed(fixtures.whole_space(), ABC)
    for word in all_up_words(ABC, 3):
        assert accepts(b, word) == word.uses_only(AB)


def test_embedding_into_same_alphabet_keeps_language():
    a = fixtures.fin_many_a()
    assert equivalent(embed(a, AB), a).equivalent


def test_embedding_composes():
    a = fixtures.delta2_example()
    assert equivalent(embed(embed(a, ABC), ABCD), embed(a, ABCD)).equivalent


def test_embedding_needs_a_superset():
    with pytest.raises(AlphabetError):
        embed(fixtures.abc_open(), AB)


def test_embedding_respects_declared_order():
    reordered = Alphabet(("c", "b", "a"))
    b = embed(fixtures.inf_many_a(), reordered)
    assert b.alphabet == reordered
    assert accepts(b, make_up_word([], ["a", "b"], reordered))
    assert not accepts(b, make_up_word([], ["a", "c"], reordered))


def test_whole_space_jumps_to_closed():
    report = jump_report(fixtures.whole_space(), ABC)
    assert report.before.label == BorelLabel.CLOPEN
    assert report.after.label == BorelLabel.CLOSED_PROPER
    assert set(report.predicted) == {sigma(2), pi(1)}
    assert report.consistent
    assert report.claim_note is None


def test_open_set_stays_below_sigma2():
    report = jump_report(fixtures.some_b(), ABCD)
    assert report.before.label == BorelLabel.OPEN_PROPER
    assert report.predicted == (sigma(2),)
    assert report.consistent


def test_second_level_jumps():
    buchi = jump_report(fixtures.inf_many_a(), ABC)
    assert buchi.before.label == BorelLabel.PI2_PROPER
    assert buchi.after.label == BorelLabel.PI2_PROPER
    assert buchi.predicted == (pi(3),)
    assert buchi.consistent

    cobuchi = jump_report(fixtures.fin_many_a(), ABC)
    assert cobuchi.after.label == BorelLabel.SIGMA2_PROPER
    assert cobuchi.predicted == (sigma(2),)
    assert cobuchi.consistent


def test_delta2_jump_is_consistent():
    report = jump_report(fixtures.delta2_example(), ABC)
    assert report.before.label == BorelLabel.DELTA2_PROPER
    assert report.consistent


def test_repeated_ab_fixture_records_the_claim():
    report = jump_report(fixtures.repeated_ab_open(), ABC)
    assert report.before.label == BorelLabel.CLOPEN
    assert report.after.label == BorelLabel.CLOSED_PROPER
    assert report.consistent
    assert report.claim_disagrees
    assert fixtures.OPEN_SET_CLAIM in report.claim_note
    assert "CLOSED_PROPER differs from it" in report.claim_note


def test_jump_document():
    document = JumpDocument.from_report(jump_report(fixtures.repeated_ab_open(), ABC))
    assert document.alphabet_before == ["a", "b"]
    assert document.alphabet_after == ["a", "b", "c"]
    assert document.before == "CLOPEN"
    assert document.predicted == ["Pi1", "Sigma2"]
    assert document.claim_disagrees
    assert document.paper_claim_note is not None


def test_open_set_fixture_is_recognised_by_language():
    assert fixtures.is_repeated_ab_fixture(fixtures.repeated_ab_open())
    assert fixtures.is_repeated_ab_fixture(fixtures.prefix_automaton([("a", "b")], AB))
    assert not fixtures.is_repeated_ab_fixture(fixtures.repeated_ab_closed())
    assert not fixtures.is_repeated_ab_fixture(embed(fixtures.repeated_ab_open(), ABC))
