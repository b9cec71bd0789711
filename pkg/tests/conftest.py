"""Shared test helpers: witness validation and random source instances."""

from itertools import combinations

from axisvote.model import ApprovalVote, LinearVote, replay_witness
from axisvote.oracle import society_admits_profile
from axisvote.reductions import PartitionInstance, X3CInstance
from axisvote.structure import is_approval_interval


def assert_valid_witness(instance, outcome):
    """Replay a yes-witness and check it makes the preferred candidate a
    co-winner while honoring budgets, flags, protected sets, and (where the
    attack must end inside the society) the society constraint."""
    assert outcome.decision and outcome.witness is not None
    w = outcome.witness
    winners = replay_witness(instance, w)  # raises on budget/protected abuse
    assert instance.preferred in winners
    votes = instance.election.votes
    if instance.kind == "ccwm" and instance.axis is not None:
        full = list(votes) + [
            LinearVote(r, wt)
            for r, wt in zip(w.manipulator_votes, instance.manipulator_weights)
        ]
        assert society_admits_profile(full, instance.axis, instance.society)
    if instance.kind == "ccdv":
        flagged = {i for i, v in enumerate(votes) if "deletable" in v.flags}
        if flagged:
            assert set(w.deleted_voters) <= flagged
    if instance.kind == "ccac":
        assert set(w.added_candidates) <= set(instance.spoilers)
    if instance.kind == "ccdc":
        assert not set(w.deleted_candidates) & instance.protected
    if instance.kind == "bribery":
        assert len(w.bribes) <= instance.budget
        if instance.bribery_model == "marked":
            for idx, new in w.bribes:
                if "maverick-enabled" not in votes[idx].flags:
                    assert is_approval_interval(new, instance.axis)
        else:
            bribed = list(votes)
            for idx, new in w.bribes:
                old = bribed[idx]
                bribed[idx] = ApprovalVote(new, old.weight, old.flags)
            assert society_admits_profile(bribed, instance.axis, instance.society)


def rand_partition(rng, n_lo=4, n_hi=8, vmax=12):
    """Distinct positive values <= vmax with an even sum."""
    while True:
        n = rng.randint(n_lo, min(n_hi, vmax))
        values = tuple(sorted(rng.sample(range(1, vmax + 1), n)))
        if sum(values) % 2 == 0:
            return PartitionInstance(values)


def rand_x3c(rng, k=2, n_lo=4, n_hi=5):
    """Random 3-cover instance over a base of size 3k."""
    base = 3 * k
    triples = list(combinations(range(1, base + 1), 3))
    n = rng.randint(n_lo, min(n_hi, len(triples)))
    return X3CInstance(base, tuple(sorted(rng.sample(triples, n))))


def x3c_with_cover(rng, k, n_extra):
    """3-cover instance built around a hidden exact cover plus extra sets."""
    base = 3 * k
    elements = list(range(1, base + 1))
    rng.shuffle(elements)
    sets = [tuple(sorted(elements[3 * i:3 * i + 3])) for i in range(k)]
    all_triples = [t for t in combinations(range(1, base + 1), 3)
                   if t not in set(sets)]
    sets.extend(rng.sample(all_triples, n_extra))
    rng.shuffle(sets)
    return X3CInstance(base, tuple(sets))
