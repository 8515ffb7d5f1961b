"""Unit tests for arenas, solvers, strategy verification and objective lifting."""

import random
from itertools import combinations

import pytest

from borel_jump.errors import GameValidationError, StateGuardExceeded, StrategyError
from borel_jump.fixtures import reach_arena, expanded_arena
from borel_jump.games import (
    GameGraph,
    LiftConvention,
    MemoryStrategy,
    Objective,
    ObjectiveKind,
    PositionalStrategy,
    SolveResult,
    attractor,
    lar_reduction,
    lift_objective,
    solve,
    verify_strategy,
)
from borel_jump.games.lar import advance, initial_record, record_priority
from borel_jump.games.oracles import lar_oracle, mcnaughton_oracle, play_outcome, positional_oracle
from borel_jump.generators import all_parity_games, random_game

POSITIONAL_KINDS = [
    ObjectiveKind.REACH,
    ObjectiveKind.SAFETY,
    ObjectiveKind.BUCHI,
    ObjectiveKind.COBUCHI,
    ObjectiveKind.PARITY,
]


def choice_game() -> GameGraph:
    """v0 (player 0) picks between two player-1 sinks v1 and v2."""
    return GameGraph.build(owner=[0, 1, 1], edges=[[1, 2], [1], [2]], names=["v0", "v1", "v2"])


def dual(g: GameGraph, o: Objective):
    """Same arena with owners swapped and the complementary objective."""
    swapped = GameGraph.build([1 - p for p in g.owner], g.edges, g.names)
    everything = g.vertices
    if o.kind == ObjectiveKind.REACH:
        return swapped, Objective.safety(everything - o.vertices)
    if o.kind == ObjectiveKind.SAFETY:
        return swapped, Objective.reach(everything - o.vertices)
    if o.kind == ObjectiveKind.BUCHI:
        return swapped, Objective.cobuchi(everything - o.vertices)
    if o.kind == ObjectiveKind.COBUCHI:
        return swapped, Objective.buchi(everything - o.vertices)
    if o.kind == ObjectiveKind.PARITY:
        return swapped, Objective.parity(p + 1 for p in o.priority)
    subsets = [frozenset(s) for size in range(1, g.num_vertices + 1) for s in combinations(sorted(everything), size)]
    return swapped, Objective.muller(s for s in subsets if s not in o.family)


def test_game_graph_validation():
    with pytest.raises(GameValidationError):
        GameGraph.build(owner=[0, 1], edges=[[1], []])
    with pytest.raises(GameValidationError):
        GameGraph.build(owner=[0, 2], edges=[[1], [0]])
    with pytest.raises(GameValidationError):
        GameGraph.build(owner=[0, 1], edges=[[1], [2]])
    with pytest.raises(GameValidationError):
        GameGraph.build(owner=[0, 1], edges=[[1], [0]], names=["x", "x"])
    with pytest.raises(GameValidationError):
        GameGraph.build(owner=[0], edges=[[0]], initial=1)


def test_objective_validation():
    g = choice_game()
    with pytest.raises(GameValidationError):
        solve(g, Objective.parity([0, 1]))
    with pytest.raises(GameValidationError):
        solve(g, Objective.reach([5]))
    with pytest.raises(GameValidationError):
        solve(g, Objective.muller([[]]))


def test_vertex_ref_prefers_names():
    g = GameGraph.build(owner=[0, 0], edges=[[1], [0]], names=["1", "0"])
    assert g.vertex_ref("1") == 0
    assert g.vertex_ref(1) == 1
    with pytest.raises(GameValidationError):
        g.vertex_ref("v9")


def test_attractor():
    g, _ = reach_arena()
    region, moves = attractor(g, 0, {3})
    assert region == {0, 1, 2, 3}
    assert moves[0] in (1, 2)

    region, _ = attractor(g, 1, {1})
    assert region == {1}


def test_reach_game_and_strategy():
    g = choice_game()
    result = solve(g, Objective.reach([1]))
    assert result.win0 == {0, 1}
    assert result.win1 == {2}
    assert result.strategy0.move(0) == 1
    assert result.winner(2) == 1
    assert verify_strategy(g, Objective.reach([1]), result)


def test_verify_catches_mutated_strategy():
    g = choice_game()
    o = Objective.reach([1])
    result = solve(g, o)
    mutated = SolveResult(result.win0, result.win1, PositionalStrategy(0, {0: 2}), result.strategy1)
    assert not verify_strategy(g, o, mutated)


def test_verify_catches_bad_regions():
    g = choice_game()
    o = Objective.reach([1])
    result = solve(g, o)
    overlapping = SolveResult(result.win0 | {2}, result.win1, result.strategy0, result.strategy1)
    assert not verify_strategy(g, o, overlapping)
    missing = SolveResult(result.win0, frozenset(), result.strategy0, result.strategy1)
    assert not verify_strategy(g, o, missing)


def test_verify_reports_undefined_strategy():
    g = choice_game()
    o = Objective.reach([1])
    result = solve(g, o)
    undefined = SolveResult(result.win0, result.win1, PositionalStrategy(0, {}), result.strategy1)
    with pytest.raises(StrategyError):
        verify_strategy(g, o, undefined)


def test_verify_stops_at_reached_target():
    # the target v1 leads out of player 0's region; the play is already won there
    g = GameGraph.build(owner=[0, 1, 0], edges=[[1], [2], [2]])
    o = Objective.reach([1])
    result = solve(g, o)
    assert result.win0 == {0, 1}
    assert result.win1 == {2}
    assert verify_strategy(g, o, result)


def test_verify_stops_at_first_unsafe_vertex():
    g = GameGraph.build(owner=[1, 0, 1], edges=[[1], [2], [2]])
    o = Objective.safety([0, 2])
    result = solve(g, o)
    assert result.win0 == {2}
    assert result.win1 == {0, 1}
    assert verify_strategy(g, o, result)


def test_verify_rejects_avoider_that_reaches_target():
    g = choice_game()
    o = Objective.reach([2])
    result = solve(g, o)
    assert result.win1 == {1}
    wrong = SolveResult(frozenset({2}), frozenset({0, 1}), PositionalStrategy(0, {}), PositionalStrategy(1, {1: 1}))
    assert not verify_strategy(g, o, wrong)


def test_parity_small_example():
    g = GameGraph.build(owner=[0, 1, 1, 0], edges=[[1, 2], [0, 3], [2], [3, 0]])
    o = Objective.parity([1, 2, 0, 1])
    result = solve(g, o)
    assert result.win0 == {0, 1, 2, 3}
    assert result.strategy0.move(0) == 2
    assert result.strategy0.move(3) == 0
    assert verify_strategy(g, o, result)


def test_odd_self_loop_is_lost():
    g = GameGraph.build(owner=[0, 0], edges=[[0, 1], [1]])
    o = Objective.parity([2, 1])
    result = solve(g, o)
    assert result.win0 == {0}
    assert result.win1 == {1}


def test_buchi_and_cobuchi():
    # v0 (player 1) may stay forever or move to v1, which returns to v0
    g = GameGraph.build(owner=[1, 0], edges=[[0, 1], [0]])
    assert solve(g, Objective.buchi([1])).win0 == frozenset()
    assert solve(g, Objective.cobuchi([0])).win0 == frozenset()
    assert solve(g, Objective.cobuchi([0, 1])).win0 == {0, 1}


@pytest.mark.parametrize("n", [1, 2])
def test_parity_exhaustive_small_arenas(n):
    for g, o in all_parity_games(n):
        result = solve(g, o)
        assert (result.win0, result.win1) == positional_oracle(g, o)
        assert verify_strategy(g, o, result)


@pytest.mark.parametrize("kind", POSITIONAL_KINDS)
def test_random_positional_games_against_oracle(kind):
    rng = random.Random(7)
    for _ in range(60):
        g, o = random_game(rng, rng.randint(1, 4), kind)
        result = solve(g, o)
        assert (result.win0, result.win1) == positional_oracle(g, o)
        assert verify_strategy(g, o, result)


@pytest.mark.parametrize("kind", POSITIONAL_KINDS + [ObjectiveKind.MULLER])
def test_duality(kind):
    rng = random.Random(11)
    for _ in range(40):
        g, o = random_game(rng, rng.randint(1, 4), kind)
        swapped, complementary = dual(g, o)
        result = solve(g, o)
        flipped = solve(swapped, complementary)
        assert flipped.win0 == result.win1
        assert flipped.win1 == result.win0


def test_muller_games_against_mcnaughton():
    rng = random.Random(3)
    for _ in range(80):
        g, o = random_game(rng, rng.randint(1, 4), ObjectiveKind.MULLER)
        result = solve(g, o)
        assert (result.win0, result.win1) == mcnaughton_oracle(g, o)
        assert isinstance(result.strategy0, MemoryStrategy)
        assert verify_strategy(g, o, result)


def test_lar_oracle_agrees_where_it_fits():
    rng = random.Random(5)
    checked = 0
    for _ in range(60):
        g, o = random_game(rng, rng.randint(1, 3), ObjectiveKind.MULLER)
        try:
            expected = lar_oracle(g, o)
        except StateGuardExceeded:
            continue
        checked += 1
        assert expected == mcnaughton_oracle(g, o)
    assert checked >= 20


def test_latest_appearance_records():
    g = GameGraph.build(owner=[0, 0, 0], edges=[[1], [2], [0]])
    record = initial_record(g, 1)
    assert record == ((1, 0, 2), 0)
    moved = advance(record, 2)
    assert moved == ((2, 1, 0), 2)
    family = {frozenset({0, 1, 2})}
    assert record_priority(moved, 3, family) == 0
    assert record_priority(((0, 1, 2), 0), 3, family) == 5


def test_lar_reduction_guards():
    g, o = expanded_arena()
    with pytest.raises(StateGuardExceeded):
        lar_reduction(g, o, max_vertices=4)
    with pytest.raises(GameValidationError):
        lar_reduction(g, Objective.reach([0]))
    lar = lar_reduction(g, o)
    assert set(lar.projection) == g.vertices
    assert len(lar.priority) == lar.graph.num_vertices


def test_reach_arena_is_won_by_player0():
    g, o = reach_arena()
    result = solve(g, o)
    assert result.win0 == g.vertices
    assert verify_strategy(g, o, result)


def test_arena_lift_paper_convention():
    g, _ = reach_arena()
    expanded, _ = expanded_arena()
    lifted = lift_objective(g, expanded, ["v3"], LiftConvention.PAPER_EXACT)
    assert lifted.family == {frozenset({0, 1, 2, 3})}
    result = solve(expanded, lifted)
    assert result.win0 == frozenset()
    assert result.win1 == expanded.vertices
    assert verify_strategy(expanded, lifted, result)


def test_arena_lift_meets_reach_convention():
    g, _ = reach_arena()
    expanded, _ = expanded_arena()
    lifted = lift_objective(g, expanded, [3], "meets-r")
    assert len(lifted.family) == 8
    assert all(3 in member and 4 not in member for member in lifted.family)
    result = solve(expanded, lifted)
    assert result.win0 == expanded.vertices
    assert verify_strategy(expanded, lifted, result)


def test_lift_needs_every_base_vertex():
    g, _ = reach_arena()
    smaller = GameGraph.build(owner=[0, 1], edges=[[1], [0]], names=["v0", "v1"])
    with pytest.raises(GameValidationError):
        lift_objective(g, smaller, ["v3"])
    expanded, _ = expanded_arena()
    with pytest.raises(GameValidationError):
        lift_objective(g, expanded, ["v4"])


def test_play_outcome():
    g, o = reach_arena()
    assert play_outcome(g, o, 0, {0: 1, 1: 3, 2: 3, 3: 0})
    stuck = GameGraph.build(owner=[0, 0], edges=[[0, 1], [1]])
    assert not play_outcome(stuck, Objective.reach([1]), 0, {0: 0, 1: 1})
