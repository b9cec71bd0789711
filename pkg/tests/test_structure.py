"""Structure recognition and nearness distances against enumeration oracles."""

from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from axisvote import gen
from axisvote.model import ApprovalVote, Election, LinearVote, ORDERS
from axisvote.structure import (
    classify_vote,
    count_mavericks,
    dodgson_distance,
    dodgson_distance_enum,
    is_approval_interval,
    is_single_caved,
    is_single_peaked,
    kendall_tau,
    locality_check,
    neighborhood,
    perception_flip_distance,
    perception_flip_distance_enum,
    plurality_scores,
    sp_order_with_peak,
    sp_orders,
    swoon_check,
    vote_consistent,
)

AXIS5 = (0, 1, 2, 3, 4)


def test_single_peaked_known_cases():
    assert is_single_peaked((2, 1, 3, 0, 4), AXIS5)
    assert is_single_peaked((0, 1, 2, 3, 4), AXIS5)
    assert not is_single_peaked((0, 2, 1, 3, 4), AXIS5)
    assert not is_single_peaked((2, 0, 4, 1, 3), AXIS5)


def test_single_caved_is_reversed_single_peaked():
    rng = Random(0)
    for _ in range(200):
        axis = gen.rand_axis(rng, rng.randint(2, 6))
        r = gen.rand_sp_ranking(rng, axis)
        assert is_single_peaked(r, axis)
        assert is_single_caved(tuple(reversed(r)), axis)


def test_sp_orders_enumerates_exactly_the_sp_rankings():
    rng = Random(1)
    for m in range(1, 6):
        axis = gen.rand_axis(rng, m)
        orders = set(sp_orders(axis))
        assert len(orders) == 2 ** (m - 1)
        from itertools import permutations
        assert orders == {r for r in permutations(range(m)) if is_single_peaked(r, axis)}


def test_approval_interval():
    assert is_approval_interval(frozenset(), AXIS5)
    assert is_approval_interval(frozenset({1, 2, 3}), AXIS5)
    assert not is_approval_interval(frozenset({0, 2}), AXIS5)


def test_vote_consistent_dispatches_on_ballot_kind():
    assert vote_consistent(LinearVote((2, 1, 3, 0, 4)), AXIS5)
    assert not vote_consistent(ApprovalVote(frozenset({0, 4})), AXIS5)


def test_classify_vote_reports():
    rep = classify_vote(LinearVote((2, 1, 3, 0, 4)), AXIS5)
    assert rep.is_sp and not rep.is_sc and rep.is_approval_interval is None
    rep = classify_vote(ApprovalVote(frozenset({1, 2})), AXIS5)
    assert rep.is_sp is None and rep.is_sc is None and rep.is_approval_interval


def test_count_mavericks():
    e = Election(("a", "b", "c"), ORDERS, (
        LinearVote((0, 1, 2)), LinearVote((0, 2, 1)), LinearVote((2, 1, 0))))
    assert count_mavericks(e, (0, 1, 2)) == 1  # only (0, 2, 1) is inconsistent


def test_swoon_check():
    # dropping the favorite leaves an SP order
    assert swoon_check((3, 0, 1, 2), (0, 1, 2, 3), 1, 0)
    assert not swoon_check((3, 0, 2, 1), (0, 1, 2, 3), 0, 0)
    rng = Random(2)
    for _ in range(100):
        axis = gen.rand_axis(rng, 5)
        assert swoon_check(gen.rand_swoon_ranking(rng, axis), axis, 1, 0)


@given(st.permutations(list(range(5))), st.permutations(list(range(5))))
def test_kendall_tau_is_a_metric_on_rankings(r1, r2):
    r1, r2 = tuple(r1), tuple(r2)
    assert kendall_tau(r1, r1) == 0
    assert kendall_tau(r1, r2) == kendall_tau(r2, r1)
    assert 0 <= kendall_tau(r1, r2) <= 10


def test_kendall_tau_counts_adjacent_swaps():
    assert kendall_tau((0, 1, 2), (1, 0, 2)) == 1
    assert kendall_tau((0, 1, 2), (2, 1, 0)) == 3


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 6), st.randoms(use_true_random=False))
def test_dodgson_distance_matches_enumeration(m, pyrng):
    rng = Random(pyrng.randint(0, 2 ** 30))
    axis = gen.rand_axis(rng, m)
    ranking = gen.rand_any_ranking(rng, m)
    d = dodgson_distance(ranking, axis)
    assert d == dodgson_distance_enum(ranking, axis)
    assert (d == 0) == is_single_peaked(ranking, axis)


def test_perception_flip_distance_matches_bfs():
    rng = Random(3)
    for _ in range(200):
        m = rng.randint(2, 5)
        axis = gen.rand_axis(rng, m)
        ranking = gen.rand_any_ranking(rng, m)
        assert perception_flip_distance(ranking, axis, kmax=8) \
            == perception_flip_distance_enum(ranking, axis, kmax=8)


def test_perception_flip_distance_zero_iff_single_peaked():
    rng = Random(4)
    for _ in range(100):
        axis = gen.rand_axis(rng, 5)
        ranking = gen.rand_any_ranking(rng, 5)
        zero = perception_flip_distance(ranking, axis, kmax=10) == 0
        assert zero == is_single_peaked(ranking, axis)


def test_perception_flip_distance_respects_kmax():
    # (0, 2, 1, 3, 4)? build something far from SP: reverse middle
    ranking = (0, 2, 4, 1, 3)
    full = perception_flip_distance(ranking, AXIS5, kmax=20)
    assert full is not None and full > 0
    assert perception_flip_distance(ranking, AXIS5, kmax=full - 1) is None


def test_neighborhood_is_axis_radius_within_members():
    members = frozenset({0, 2, 3, 4})
    assert neighborhood(AXIS5, members, 3, 1) == frozenset({2, 3, 4})
    assert neighborhood(AXIS5, members, 0, 1) == frozenset({0, 2})


def test_plurality_scores_restrict_ballots():
    votes = (LinearVote((1, 0, 2), 2), LinearVote((2, 1, 0), 1))
    assert plurality_scores(votes, frozenset({0, 2})) == {0: 2, 2: 1}


def test_sp_order_with_peak():
    rng = Random(5)
    for _ in range(100):
        axis = gen.rand_axis(rng, 6)
        peak = rng.choice(axis)
        order = sp_order_with_peak(peak, axis)
        assert order[0] == peak and is_single_peaked(order, axis)
        low = axis[-1] if peak != axis[-1] else axis[0]
        order = sp_order_with_peak(peak, axis, low_end=low)
        assert order[0] == peak and order[-1] == low
        assert is_single_peaked(order, axis)


def test_locality_check_sufficient_implies_exhaustive():
    rng = Random(6)
    for _ in range(30):
        axis = gen.rand_axis(rng, 5)
        votes = tuple(LinearVote(gen.rand_dodgson1_ranking(rng, axis))
                      for _ in range(4))
        C = tuple(axis[:3])
        A = tuple(axis[3:])
        if locality_check(C, A, votes, axis, 2, mode="sufficient"):
            assert locality_check(C, A, votes, axis, 2, mode="exhaustive")


def test_locality_check_rejects_bad_modes_and_sizes():
    votes = (LinearVote((0, 1, 2)),)
    with pytest.raises(ValueError):
        locality_check((0, 1, 2), (), votes, (0, 1, 2), 1, mode="bogus")
