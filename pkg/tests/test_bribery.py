"""Approval bribery solvers against the exhaustive oracles."""

from dataclasses import replace
from random import Random

import pytest

from axisvote import bribery, gen
from axisvote.bribery import canonical_bribe_target
from axisvote.control import EnumerationCapExceeded
from axisvote.model import ApprovalVote
from axisvote.oracle import brute_bribery, brute_flagbribe

from conftest import assert_valid_witness


def test_canonical_bribe_targets():
    p = 1
    approves_p = ApprovalVote(frozenset({0, 1}))
    misses_p = ApprovalVote(frozenset({0, 2}))
    assert canonical_bribe_target(approves_p, p, "plain") == frozenset({p})
    assert canonical_bribe_target(misses_p, p, "plain") == frozenset({p})
    assert canonical_bribe_target(approves_p, p, "negative") == frozenset({p})
    assert canonical_bribe_target(misses_p, p, "negative") == frozenset()
    assert canonical_bribe_target(approves_p, p, "strongnegative") == frozenset()
    assert canonical_bribe_target(misses_p, p, "strongnegative") == frozenset()


def test_flag_level_bribery_matches_oracle():
    rng = Random(0)
    for variant in ("plain", "negative", "strongnegative"):
        for _ in range(30):
            election, axis = gen.gen_flagbribe_election(rng, 5, 5)
            p = rng.randrange(5)
            K = rng.randint(0, 2)
            out = bribery.flagbribe_approval(election, p, K, axis, variant)
            truth = brute_flagbribe(election, p, K, axis, variant)
            assert out.decision == truth.decision
            if out.decision:
                flagged = {i for i, v in enumerate(election.votes)
                           if "open-to-bribe" in v.flags}
                assert len(out.witness.bribes) <= K
                assert {i for i, _ in out.witness.bribes} <= flagged


def test_flag_level_bribery_rejects_noninterval_flagged_votes():
    election, axis = gen.gen_flagbribe_election(Random(1), 5, 5)
    bad = ApprovalVote(frozenset({axis[0], axis[-1]}), 1, frozenset({"open-to-bribe"}))
    election = replace(election, votes=election.votes + (bad,))
    with pytest.raises(ValueError):
        bribery.flagbribe_approval(election, axis[0], 1, axis, "plain")


def test_maverick_bribery_matches_oracle():
    rng = Random(2)
    for model in ("marked", "standard"):
        for variant in ("plain", "negative", "strongnegative"):
            for _ in range(20):
                inst = gen.gen_bribery(rng, model, variant, 5, 5, rng.randint(0, 2), 2)
                out = bribery.maverick_bribery_approval(inst)
                assert out.decision == brute_bribery(inst).decision
                if out.decision:
                    assert_valid_witness(inst, out)


def test_marked_model_rejects_inconsistent_unmarked_voters():
    rng = Random(3)
    inst = gen.gen_bribery(rng, "marked", "plain", 5, 4, 1, 2)
    bad = ApprovalVote(frozenset({inst.axis[0], inst.axis[-1]}))
    inst = replace(inst, election=replace(
        inst.election, votes=inst.election.votes + (bad,)))
    with pytest.raises(ValueError):
        bribery.maverick_bribery_approval(inst)


def test_bribery_enforces_bound_and_enum_cap():
    rng = Random(4)
    while True:
        inst = gen.gen_bribery(rng, "standard", "plain", 4, 6, 2, 3)
        from axisvote.structure import is_approval_interval
        mavs = sum(1 for v in inst.election.votes
                   if not is_approval_interval(v.approved, inst.axis))
        if mavs >= 2:
            break
    with pytest.raises(ValueError):
        bribery.maverick_bribery_approval(inst, maverick_bound=mavs - 1)
    with pytest.raises(EnumerationCapExceeded):
        bribery.maverick_bribery_approval(inst, enum_cap=1)
