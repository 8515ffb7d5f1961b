"""Unit tests for exact low-Borel classification."""

import pytest

from borel_jump import fixtures
from borel_jump.automata import accepts, complement, equivalent, to_muller_normal_form
from borel_jump.classifier import (
    BorelLabel,
    CompletenessKind,
    Memberships,
    classify,
    clopen_basis,
    completeness_label,
    is_closed,
    is_open,
    is_pi2,
    is_sigma2,
    label_for,
    universal_states,
)
from borel_jump.errors import ClassificationError
from borel_jump.oracles import oracle_classify
from borel_jump.words import FiniteWord

EXPECTED = {
    "abc_open": BorelLabel.CLOPEN,
    "abc_closed": BorelLabel.CLOPEN,
    "ab_or_ba": BorelLabel.CLOPEN,
    "repeated_ab_open": BorelLabel.CLOPEN,
    "repeated_ab_closed": BorelLabel.CLOPEN,
    "inf_many_a": BorelLabel.PI2_PROPER,
    "fin_many_a": BorelLabel.SIGMA2_PROPER,
    "some_b": BorelLabel.OPEN_PROPER,
    "never_b": BorelLabel.CLOSED_PROPER,
    "delta2_example": BorelLabel.DELTA2_PROPER,
    "delta3_example": BorelLabel.DELTA3_PROPER,
    "whole_space": BorelLabel.CLOPEN,
    "empty_language": BorelLabel.CLOPEN,
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_fixture_labels(name):
    a = fixtures.FIXTURE_FILES[name]()
    assert classify(a).label == EXPECTED[name]


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_fixture_labels_match_oracle(name):
    a = fixtures.FIXTURE_FILES[name]()
    verdict = oracle_classify(a)
    m = classify(a).memberships
    assert (m.open, m.closed, m.sigma2, m.pi2) == (verdict.open, verdict.closed, verdict.sigma2, verdict.pi2)
    assert verdict.label == EXPECTED[name]


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_complement_gets_dual_label(name):
    a = fixtures.FIXTURE_FILES[name]()
    label = classify(a)
    flipped = classify(complement(a))
    assert flipped.label == label.label.dual
    assert flipped.memberships == label.memberships.dual()


def test_membership_predicates_on_normal_form():
    normal = to_muller_normal_form(fixtures.inf_many_a())
    assert not is_open(normal)
    assert not is_closed(normal)
    assert is_pi2(normal)
    assert not is_sigma2(normal)

    normal = to_muller_normal_form(fixtures.some_b())
    assert is_open(normal)
    assert universal_states(normal)


def test_evidence_for_buchi_language():
    a = fixtures.inf_many_a()
    evidence = classify(a).evidence
    assert evidence.pi2_violation is None
    small, big = evidence.sigma2_violation
    assert small.to_list() == [0]
    assert big.to_list() == [0, 1]
    assert accepts(a, evidence.open_counterexample)
    assert not accepts(a, evidence.closed_counterexample)


def test_evidence_document_shape():
    document = classify(fixtures.fin_many_a()).evidence.to_dict()
    assert document["pi2_violation"] == [[0], [0, 1]]
    assert document["sigma2_violation"] is None
    assert "completeness_criterion" in document


def test_clopen_evidence_is_empty():
    evidence = classify(fixtures.ab_or_ba()).evidence
    assert evidence.open_counterexample is None
    assert evidence.closed_counterexample is None
    assert evidence.pi2_violation is None and evidence.sigma2_violation is None


def test_label_for_rejects_inconsistent_memberships():
    with pytest.raises(ClassificationError):
        label_for(Memberships(open=True, closed=False, sigma2=False, pi2=True))
    with pytest.raises(ClassificationError):
        label_for(Memberships(open=False, closed=True, sigma2=True, pi2=False))


def test_label_for_table():
    assert label_for(Memberships(True, True, True, True)) == BorelLabel.CLOPEN
    assert label_for(Memberships(False, False, True, True)) == BorelLabel.DELTA2_PROPER
    assert label_for(Memberships(False, False, False, False)) == BorelLabel.DELTA3_PROPER


def test_completeness_labels():
    def render(name):
        return completeness_label(classify(fixtures.FIXTURE_FILES[name]())).render()

    assert render("some_b") == "Sigma1-complete"
    assert render("abc_open") == "not-applicable"
    assert render("never_b") == "Pi1-complete"
    assert render("fin_many_a") == "Sigma2-complete"
    assert render("inf_many_a") == "Pi2-complete"
    assert render("ab_or_ba") == "not-applicable"
    assert completeness_label(classify(fixtures.delta2_example())).kind == CompletenessKind.NOT_APPLICABLE


def test_clopen_basis_of_two_prefixes():
    basis = clopen_basis(fixtures.ab_or_ba())
    assert [word.letters for word in basis] == [("a", "b"), ("b", "a")]


def test_clopen_basis_extremes():
    assert clopen_basis(fixtures.whole_space()) == [FiniteWord((), fixtures.AB)]
    assert clopen_basis(fixtures.empty_language()) == []
    assert [word.letters for word in clopen_basis(fixtures.repeated_ab_open())] == [("a", "b")]


def test_clopen_basis_of_a_single_prefix():
    assert [word.letters for word in clopen_basis(fixtures.abc_open())] == [("a", "b", "c")]
    complement_basis = ["".join(word.letters) for word in clopen_basis(fixtures.abc_closed())]
    assert complement_basis == ["b", "c", "aa", "ac", "aba", "abb"]


def test_clopen_basis_needs_clopen_language():
    with pytest.raises(ClassificationError):
        clopen_basis(fixtures.inf_many_a())
    with pytest.raises(ClassificationError):
        clopen_basis(fixtures.some_b())


@pytest.mark.parametrize("build", [fixtures.ab_or_ba, fixtures.whole_space, fixtures.empty_language, fixtures.repeated_ab_open])
def test_clopen_basis_rebuilds_the_language(build):
    a = build()
    rebuilt = fixtures.prefix_automaton(clopen_basis(a), a.alphabet)
    assert equivalent(rebuilt, a).equivalent
