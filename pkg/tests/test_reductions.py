"""Hardness-gadget generators and round-trip verification."""

from random import Random

import pytest

from axisvote.model import Society
from axisvote.oracle import society_admits_profile
from axisvote.reductions import (
    PartitionInstance,
    X3CInstance,
    complete_top_two,
    pad_for_epsilon,
    partition_has_split,
    partition_to_ccwm,
    verify_reduction,
    x3c_has_cover,
    x3c_to_control,
)
from axisvote.structure import (
    dodgson_distance,
    perception_flip_distance,
    plurality_scores,
)

from conftest import rand_partition, x3c_with_cover


def test_partition_instance_validation():
    with pytest.raises(ValueError):
        PartitionInstance(())
    with pytest.raises(ValueError):
        PartitionInstance((1, 1, 2))      # not distinct
    with pytest.raises(ValueError):
        PartitionInstance((0, 2))         # not positive
    with pytest.raises(ValueError):
        PartitionInstance((1, 2))         # odd sum
    assert PartitionInstance((1, 2, 3)).half == 3


def test_x3c_instance_validation():
    with pytest.raises(ValueError):
        X3CInstance(4, ())                # base not a multiple of 3
    with pytest.raises(ValueError):
        X3CInstance(6, ((1, 1, 2),))      # repeated element
    with pytest.raises(ValueError):
        X3CInstance(6, ((1, 2, 7),))      # element outside the base
    inst = X3CInstance(6, ((1, 2, 3), (1, 4, 5)))
    assert inst.k == 2 and inst.n == 2 and inst.occurrences(1) == 2


def test_direct_source_solvers():
    assert sum(partition_has_split(PartitionInstance((1, 2, 3)))) == 3
    assert partition_has_split(PartitionInstance((1, 2, 4, 9))) is None
    yes = X3CInstance(6, ((1, 2, 3), (4, 5, 6), (2, 3, 4)))
    assert sorted(x3c_has_cover(yes)) == [0, 1]
    no = X3CInstance(6, ((1, 2, 3), (2, 3, 4), (3, 4, 5)))
    assert x3c_has_cover(no) is None


def test_partition_gadget_parameter_validation():
    inst = PartitionInstance((1, 3))
    with pytest.raises(ValueError):
        partition_to_ccwm("nope", inst)
    with pytest.raises(ValueError):
        partition_to_ccwm("scoring1mav", inst, alphas=(1, 2, 0))   # alpha1 < alpha2
    with pytest.raises(ValueError):
        partition_to_ccwm("vetoKmav", inst, m=6, k=2)              # m > k+2
    with pytest.raises(ValueError):
        partition_to_ccwm("singleCaved", inst, alphas=(5, 2, 0))   # alpha1 > 2*alpha2


def test_x3c_gadget_parameter_validation():
    small = X3CInstance(6, ((1, 2, 3), (4, 5, 6)))
    with pytest.raises(ValueError):
        x3c_to_control("ccacSwoon", small)   # needs n >= 4
    with pytest.raises(ValueError):
        x3c_to_control("ccdcSwoon", small)   # needs k > 5
    with pytest.raises(ValueError):
        x3c_to_control("nope", small)


def test_partition_round_trips_small():
    rng = Random(0)
    for _ in range(6):
        inst = rand_partition(rng, 4, 6)
        for kind, kw in [("scoring1mav", dict(alphas=(2, 1, 0))),
                         ("vetoKmav", dict(m=4, k=2)),
                         ("vetoSwoon4", {}),
                         ("vetoDodgson4", {}),
                         ("singleCaved", dict(alphas=(3, 2, 0)))]:
            report = verify_reduction(inst, partition_to_ccwm(kind, inst, **kw))
            assert report.agree and report.votes_admissible


def test_x3c_round_trips_small():
    rng = Random(1)
    for kind in ("ccacSwoon", "ccacDodgsonM2", "ccacPerceptionM2"):
        for i in range(3):
            inst = x3c_with_cover(rng, 2, 2 + i)
            report = verify_reduction(inst, x3c_to_control(kind, inst))
            assert report.agree and report.votes_admissible


def test_ccac_gadget_initial_scores():
    rng = Random(2)
    inst = x3c_with_cover(rng, 2, 2)
    gadget = x3c_to_control("ccacSwoon", inst)
    k, n = inst.k, inst.n
    scores = plurality_scores(gadget.election.votes, frozenset(gadget.registered))
    assert scores[gadget.preferred] == 2 * n * k + k
    d = gadget.axis[1]
    assert scores[d] == 2 * n * k
    for b in gadget.registered:
        if b not in (gadget.preferred, d):
            assert scores[b] == 2 * n * k + 2 * k


def test_complete_top_two_stays_near_single_peaked():
    rng = Random(3)
    for _ in range(50):
        m = rng.randint(4, 7)
        axis = tuple(range(m))
        ci, cj = rng.sample(range(1, m), 2)
        for society, dist in (("dodgsonM2", dodgson_distance),):
            vote = complete_top_two(ci, cj, axis, society, rank_c1_last=True)
            assert vote.ranking[:2] == (ci, cj)
            assert vote.ranking[-1] == axis[0]
            assert dist(vote.ranking, axis) <= m - 2
        vote = complete_top_two(ci, cj, axis, "perceptionM2", rank_c1_last=False)
        assert vote.ranking[:2] == (ci, cj)
        assert perception_flip_distance(vote.ranking, axis, kmax=m - 2) is not None


def test_complete_top_two_validation():
    with pytest.raises(ValueError):
        complete_top_two(1, 1, (0, 1, 2), "dodgsonM2", False)
    with pytest.raises(ValueError):
        complete_top_two(0, 1, (0, 1, 2), "dodgsonM2", True)
    with pytest.raises(ValueError):
        complete_top_two(1, 2, (0, 1, 2), "nope", False)


def test_pad_for_epsilon_preserves_decision_and_society():
    rng = Random(4)
    for i in range(3):
        inst = x3c_with_cover(rng, 2, 2 + i)
        gadget = x3c_to_control("ccacSwoon", inst)
        base = verify_reduction(inst, gadget)
        for t in (1, 2):
            padded = pad_for_epsilon(gadget, t)
            assert len(padded.election.votes) > len(gadget.election.votes)
            report = verify_reduction(inst, padded)
            assert report.reduced_yes == base.reduced_yes
            assert report.votes_admissible
            # every padding vote is itself single-peaked
            extra = padded.election.votes[len(gadget.election.votes):]
            assert society_admits_profile(extra, padded.axis, Society("sp"))
    assert pad_for_epsilon(gadget, 0) is gadget
    with pytest.raises(ValueError):
        pad_for_epsilon(gadget, -1)


def test_pad_for_epsilon_rejects_other_instances():
    rng = Random(5)
    inst = rand_partition(rng, 4, 5)
    gadget = partition_to_ccwm("vetoSwoon4", inst)
    with pytest.raises(ValueError):
        pad_for_epsilon(gadget, 1)


def test_verify_reduction_rejects_unknown_sources():
    rng = Random(6)
    inst = rand_partition(rng, 4, 5)
    gadget = partition_to_ccwm("vetoSwoon4", inst)
    with pytest.raises(ValueError):
        verify_reduction(object(), gadget)
