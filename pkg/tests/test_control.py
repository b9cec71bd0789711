"""Voter- and candidate-control solvers against the exhaustive oracle."""

from dataclasses import replace
from random import Random

import pytest

from axisvote import control, gen
from axisvote.control import EnumerationCapExceeded
from axisvote.model import ApprovalVote, LinearVote
from axisvote.oracle import brute_control
from axisvote.structure import is_approval_interval, plurality_scores

from conftest import assert_valid_witness


def test_demaverickify_preserves_scores_and_yields_intervals():
    rng = Random(0)
    for _ in range(100):
        m = rng.randint(2, 6)
        axis = gen.rand_axis(rng, m)
        votes = tuple(ApprovalVote(gen.rand_any_approval(rng, m), rng.randint(1, 3))
                      for _ in range(rng.randint(1, 6)))
        fixed = control.demaverickify_approval(votes, axis)
        for c in range(m):
            before = sum(v.weight for v in votes if c in v.approved)
            after = sum(v.weight for v in fixed if c in v.approved)
            assert before == after
        assert all(is_approval_interval(v.approved, axis) for v in fixed)


def test_approval_voter_control_matches_oracle():
    rng = Random(1)
    for kind in ("ccav", "ccdv"):
        for _ in range(40):
            inst = gen.gen_approval_control(rng, kind, 4, 4, 4, 2, 2)
            out = control.maverick_control_approval(inst)
            assert out.decision == brute_control(inst).decision
            if out.decision:
                assert_valid_witness(inst, out)


def test_condorcet_voter_control_matches_oracle():
    rng = Random(2)
    for kind in ("ccav", "ccdv"):
        for _ in range(40):
            inst = gen.gen_condorcet_control(rng, kind, 4, 4, 4, 2, 2)
            out = control.maverick_control_condorcet(inst)
            assert out.decision == brute_control(inst).decision
            if out.decision:
                assert_valid_witness(inst, out)


def test_condorcet_control_requires_unit_weights():
    rng = Random(3)
    inst = gen.gen_condorcet_control(rng, "ccav", 4, 4, 2, 1, 1)
    heavy = replace(inst.election.votes[0], weight=2)
    inst = replace(inst, election=replace(
        inst.election, votes=(heavy,) + inst.election.votes[1:]))
    with pytest.raises(ValueError):
        control.maverick_control_condorcet(inst)


def test_maverick_enumeration_cap():
    rng = Random(4)
    while True:
        inst = gen.gen_approval_control(rng, "ccdv", 4, 6, 0, 2, 3)
        mavs = sum(1 for v in inst.election.votes
                   if not is_approval_interval(v.approved, inst.axis))
        if mavs >= 2:
            break
    with pytest.raises(EnumerationCapExceeded):
        control.maverick_control_approval(inst, enum_cap=1)


def test_maverick_bound_is_enforced():
    rng = Random(5)
    while True:
        inst = gen.gen_approval_control(rng, "ccdv", 4, 6, 0, 2, 3)
        mavs = sum(1 for v in inst.election.votes
                   if not is_approval_interval(v.approved, inst.axis))
        if mavs >= 1:
            break
    with pytest.raises(ValueError):
        control.maverick_control_approval(inst, maverick_bound=0)


def test_klocal_candidate_control_matches_oracle():
    rng = Random(6)
    for kind in ("ccac", "ccdc"):
        for locality, k in (("sp", 1), ("dodgson1", 2)):
            for _ in range(30):
                inst = gen.gen_klocal_control(rng, kind, 5, 5, 2, locality)
                if kind == "ccac":
                    out = control.ccac_plurality_klocal(
                        inst.registered, inst.spoilers, inst.election.votes,
                        inst.axis, k, inst.preferred, inst.budget)
                else:
                    out = control.ccdc_plurality_klocal(
                        inst.election.ids, inst.election.votes, inst.axis, k,
                        inst.preferred, inst.budget, protected=inst.protected)
                assert out.decision == brute_control(inst).decision
                if out.decision:
                    assert_valid_witness(inst, out)


def test_klocal_min_additions_matches_exhaustive_minimum():
    from itertools import combinations
    rng = Random(7)
    for _ in range(30):
        m = rng.randint(4, 7)
        axis = gen.rand_axis(rng, m)
        middles = list(axis[1:-1])
        rng.shuffle(middles)
        cut = rng.randint(0, len(middles))
        C = frozenset({axis[0], axis[-1]} | set(middles[:cut]))
        A = frozenset(middles[cut:])
        votes = tuple(LinearVote(gen.rand_sp_ranking(rng, axis), rng.randint(1, 3))
                      for _ in range(4))
        t = rng.randint(0, 6)
        got = control.klocal_min_additions(C, A, votes, axis, 1, t)
        best = float("inf")
        for r in range(len(A) + 1):
            for picked in combinations(sorted(A), r):
                members = C | set(picked)
                if all(s <= t for s in plurality_scores(votes, members).values()):
                    best = min(best, r)
                    break
            if best < float("inf"):
                break
        assert got == best


def test_klocal_requires_registered_axis_endpoints():
    votes = (LinearVote((0, 1, 2)),)
    with pytest.raises(ValueError):
        control.klocal_min_additions(frozenset({1}), frozenset({0, 2}),
                                     votes, (0, 1, 2), 1, 1)


def test_kmaverick_candidate_control_matches_oracle():
    rng = Random(8)
    for kind in ("ccac", "ccdc"):
        for _ in range(40):
            inst = gen.gen_kmaverick_control(rng, kind, 5, 4, 2, 2)
            out = control.kmaverick_control_plurality(inst)
            assert out.decision == brute_control(inst).decision
            if out.decision:
                assert_valid_witness(inst, out)


def test_singlecaved_candidate_control_matches_oracle():
    rng = Random(9)
    for kind in ("ccac", "ccdc"):
        for _ in range(40):
            inst = gen.gen_singlecaved_control(rng, kind, 5, 5, 2)
            out = control.singlecaved_control_plurality(inst)
            assert out.decision == brute_control(inst).decision
            if out.decision:
                assert_valid_witness(inst, out)
