"""Approval bribery solvers.

The flag-level problem restricts bribes to voters carrying the open-to-bribe
flag and to axis-interval targets.  The marked and standard maverick models
reduce to it by enumerating which mavericks get bribed.
"""

from __future__ import annotations

from axisvote.control import EnumerationCapExceeded, _cover_search, _group_by_mask, _with_votes
from axisvote.model import (
    ApprovalVote,
    AttackInstance,
    AttackOutcome,
    Witness,
)
from axisvote.oracle import subsets_up_to
from axisvote.structure import is_approval_interval


def canonical_bribe_target(vote, p, variant) -> frozenset:
    """The pointwise-dominant bribe target for one voter.

    Any bribe changes the p-to-rival gap by w*([c in old] - [c in new]
    + [p in new] - [p in old]); putting p (when the variant allows it) and
    nothing else in the new ballot maximizes every coordinate at once, and
    otherwise the empty ballot does.  Both are axis intervals.
    """
    if variant == "plain":
        return frozenset({p})
    if variant == "negative":
        return frozenset({p}) if p in vote.approved else frozenset()
    if variant == "strongnegative":
        return frozenset()
    raise ValueError(f"unknown bribery variant {variant!r}")


def _bribe_mask(vote, p, variant, needs):
    """Gap reduction per needy rival, in multiples of the voter's weight,
    when the voter is bribed to the canonical target; None if never useful."""
    target = canonical_bribe_target(vote, p, variant)
    old = vote.approved
    bonus = (1 if p in target else 0) - (1 if p in old else 0)
    mask = {}
    for c in needs:
        mult = (1 if c in old else 0) + bonus
        if mult > 0:
            mask[c] = mult
        elif mult < 0:
            return None
    return mask or None


def flagbribe_approval(election, p, K, axis, variant) -> AttackOutcome:
    """Approval bribery restricted to open-to-bribe voters and axis-interval
    targets: bribe each chosen voter to its canonical target and solve the
    residual covering problem over voter types."""
    bribable = [i for i, v in enumerate(election.votes) if "open-to-bribe" in v.flags]
    for i in bribable:
        if not is_approval_interval(election.votes[i].approved, axis):
            raise ValueError("open-to-bribe vote is not an axis interval")
    scores = {c: 0 for c in election.ids}
    for vote in election.votes:
        for c in vote.approved:
            scores[c] += vote.weight
    needs = {c: scores[c] - scores[p] for c in election.ids
             if c != p and scores[c] > scores[p]}
    if not needs:
        return AttackOutcome(True, Witness(bribes=()))
    if K == 0:
        return AttackOutcome(False)
    entries = []
    for idx in bribable:
        vote = election.votes[idx]
        mask = _bribe_mask(vote, p, variant, needs)
        if mask is not None:
            entries.append((mask, vote.weight, idx))
    chosen = _cover_search(_group_by_mask(entries), needs, K)
    if chosen is None:
        return AttackOutcome(False)
    bribes = tuple(
        (i, canonical_bribe_target(election.votes[i], p, variant))
        for i in sorted(chosen))
    return AttackOutcome(True, Witness(bribes=bribes))


def _apply_bribes(election, bribes):
    votes = list(election.votes)
    for i, target in bribes:
        old = votes[i]
        votes[i] = ApprovalVote(target, old.weight, old.flags)
    return _with_votes(election, votes)


def _reflag(election, open_idx):
    votes = []
    for i, v in enumerate(election.votes):
        flags = (v.flags | {"open-to-bribe"}) if i in open_idx \
            else (v.flags - {"open-to-bribe"})
        votes.append(ApprovalVote(v.approved, v.weight, frozenset(flags)))
    return _with_votes(election, votes)


def maverick_bribery_approval(instance: AttackInstance, maverick_bound=None,
                              enum_cap: int = 2 ** 20) -> AttackOutcome:
    """Approval bribery with a bounded number of mavericks.

    Marked model: only maverick-enabled voters may cast inconsistent ballots;
    enumerate which of them get bribed (canonically), then bribe the rest of
    the electorate at flag level.  Standard model: the inconsistent voters are
    exactly the ones needing the enabled treatment.
    """
    if instance.kind != "bribery":
        raise ValueError("expected a bribery instance")
    if maverick_bound is None:
        if instance.society.kind == "maverick":
            maverick_bound = instance.society.params[0]
        elif instance.society.kind == "sp":
            maverick_bound = 0
        else:
            raise ValueError("instance carries no maverick bound")
    election, p, K, axis = instance.election, instance.preferred, instance.budget, instance.axis
    variant = instance.bribery_variant
    if instance.bribery_model == "marked":
        enabled = [i for i, v in enumerate(election.votes)
                   if "maverick-enabled" in v.flags]
        for i, v in enumerate(election.votes):
            if i not in set(enabled) and not is_approval_interval(v.approved, axis):
                raise ValueError("non-enabled vote is not an axis interval")
    else:
        enabled = [i for i, v in enumerate(election.votes)
                   if not is_approval_interval(v.approved, axis)]
    if len(enabled) > maverick_bound:
        raise ValueError("maverick count exceeds the bound")
    if 2 ** len(enabled) > enum_cap:
        raise EnumerationCapExceeded("maverick subset enumeration exceeds the cap")
    rest = [i for i in range(len(election.votes)) if i not in set(enabled)]
    for chosen in subsets_up_to(enabled, min(K, len(enabled))):
        first = tuple(
            (i, canonical_bribe_target(election.votes[i], p, variant))
            for i in chosen)
        working = _reflag(_apply_bribes(election, first), set(rest))
        sub = flagbribe_approval(working, p, K - len(chosen), axis, variant)
        if sub.decision:
            bribes = tuple(sorted(first + sub.witness.bribes))
            return AttackOutcome(True, Witness(bribes=bribes))
    return AttackOutcome(False)
