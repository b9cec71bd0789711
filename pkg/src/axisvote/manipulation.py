"""Polynomial-time deciders for weighted coalition manipulation (CCWM) in
the tractable society/system cells, plus a dispatcher that routes the
provably hard cells to the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from axisvote.model import (
    AttackInstance,
    AttackOutcome,
    LinearVote,
    Witness,
    evaluate_winners,
)
from axisvote.oracle import OracleCaps, brute_ccwm
from axisvote.structure import (
    count_mavericks,
    dodgson_distance,
    sp_order_with_peak,
    swoon_check,
)


class UnsupportedCell(ValueError):
    """The instance does not match any classified system/society cell."""


@dataclass(frozen=True)
class CcwmVerdict:
    outcome: AttackOutcome
    route: str


def _normalized_alphas(system):
    if system.name == "veto":
        return None
    if system.name != "scoring" or len(system.alphas) != 3:
        raise UnsupportedCell("only veto and 3-candidate scoring cells are classified")
    a1, a2, a3 = system.alphas
    return (a1 - a3, a2 - a3, 0)


def _yes_with_peak_votes(instance):
    vote = sp_order_with_peak(instance.preferred, instance.axis)
    return AttackOutcome(True, Witness(
        manipulator_votes=tuple(vote for _ in instance.manipulator_weights)))


def ccwm_veto_never_vetoed(instance: AttackInstance) -> AttackOutcome:
    """Veto CCWM in the easy regimes: p can be made a winner iff no
    nonmanipulator ranks p last.

    With votes constrained by the society, some interior candidate can never
    be vetoed, so every candidate's score is capped at the total weight and p
    reaches that cap exactly when nobody vetoes p.  Witnesses cast
    single-peaked votes ranking p first, which are legal in all three
    societies handled here and never veto p.
    """
    if instance.kind != "ccwm" or instance.system.name != "veto":
        raise ValueError("expected a veto ccwm instance")
    society = instance.society
    m = len(instance.election.candidates)
    if society.kind == "maverick":
        k = society.params[0]
        if m < k + 3:
            raise UnsupportedCell("veto with m <= k+2 is a hard cell")
        if count_mavericks(instance.election, instance.axis) > k:
            raise ValueError("nonmanipulators exceed the maverick bound")
    elif society.kind == "swoon":
        if society.params != (1, 0):
            raise UnsupportedCell("only the swoon(1,0) society is classified")
        if m < 5:
            raise UnsupportedCell("swoon veto with m <= 4 is a hard cell")
        for vote in instance.election.votes:
            if not swoon_check(vote.ranking, instance.axis, 1, 0):
                raise ValueError("nonmanipulator vote is not swoon-consistent")
    elif society.kind == "dodgson":
        if society.params != (1,):
            raise UnsupportedCell("only the dodgson(1) society is classified")
        if m < 5:
            raise UnsupportedCell("dodgson veto with m <= 4 is a hard cell")
        for vote in instance.election.votes:
            if dodgson_distance(vote.ranking, instance.axis) > 1:
                raise ValueError("nonmanipulator vote exceeds dodgson distance 1")
    else:
        raise UnsupportedCell(f"society {society.kind!r} is not a veto easy cell")
    p = instance.preferred
    if any(vote.ranking[-1] == p for vote in instance.election.votes):
        return AttackOutcome(False)
    return _yes_with_peak_votes(instance)


def ccwm_singlecaved_scoring(instance: AttackInstance) -> AttackOutcome:
    """Single-caved 3-candidate scoring CCWM, tractable branch alpha1 > 2*alpha2
    after normalizing alpha3 = 0.

    The axis-middle candidate is never ranked first by a single-caved vote,
    so with any positive total weight its score stays below the best endpoint.
    Hence: p middle is a yes only for the empty electorate; p an endpoint is a
    yes iff p wins when every manipulator votes p > middle > other-endpoint.
    """
    if instance.kind != "ccwm" or instance.society.kind != "single-caved":
        raise ValueError("expected a single-caved ccwm instance")
    a1, a2, _ = _normalized_alphas(instance.system)
    if a1 <= 2 * a2:
        raise UnsupportedCell("single-caved scoring with alpha1 <= 2*alpha2 is a hard cell")
    axis = instance.axis
    middle = axis[1]
    p = instance.preferred
    if p == middle:
        if not instance.election.votes and not instance.manipulator_weights:
            return AttackOutcome(True, Witness())
        return AttackOutcome(False)
    other = axis[2] if p == axis[0] else axis[0]
    vote = (p, middle, other)
    votes = tuple(instance.election.votes) + tuple(
        LinearVote(vote, w) for w in instance.manipulator_weights)
    winners = evaluate_winners(replace(instance.election, votes=votes), instance.system)
    if p in winners:
        return AttackOutcome(True, Witness(
            manipulator_votes=tuple(vote for _ in instance.manipulator_weights)))
    return AttackOutcome(False)


def _trivial_plurality_like(instance) -> AttackOutcome:
    """Normalized alpha2 = alpha3 = 0: only first places score, so the best
    manipulator vote ranks p as high as the society permits."""
    a1 = _normalized_alphas(instance.system)[0]
    total = sum(v.weight for v in instance.election.votes) + sum(instance.manipulator_weights)
    if instance.society.kind == "single-caved" and instance.preferred == instance.axis[1]:
        # p can never be ranked first, so any positive weight elects an endpoint.
        if a1 == 0 or total == 0:
            axis = instance.axis
            vote = (axis[0], instance.preferred, axis[2])
            return AttackOutcome(True, Witness(
                manipulator_votes=tuple(vote for _ in instance.manipulator_weights)))
        return AttackOutcome(False)
    if instance.society.kind == "single-caved":
        axis = instance.axis
        other = axis[2] if instance.preferred == axis[0] else axis[0]
        vote = (instance.preferred, axis[1], other)
    elif instance.axis is None:
        others = [c for c in instance.election.ids if c != instance.preferred]
        vote = (instance.preferred, *others)
    else:
        vote = sp_order_with_peak(instance.preferred, instance.axis)
    votes = tuple(instance.election.votes) + tuple(
        LinearVote(vote, w) for w in instance.manipulator_weights)
    winners = evaluate_winners(replace(instance.election, votes=votes), instance.system)
    if instance.preferred in winners:
        return AttackOutcome(True, Witness(
            manipulator_votes=tuple(vote for _ in instance.manipulator_weights)))
    return AttackOutcome(False)


def ccwm_dispatch(instance: AttackInstance,
                  caps: OracleCaps = OracleCaps()) -> CcwmVerdict:
    """Route a CCWM instance to the matching polynomial algorithm, or to the
    brute-force oracle when it falls in an NP-complete cell."""
    if instance.kind != "ccwm":
        raise ValueError("expected a ccwm instance")
    society = instance.society
    m = len(instance.election.candidates)
    if instance.system.name == "veto":
        if society.kind == "maverick":
            k = society.params[0]
            if m >= k + 3:
                return CcwmVerdict(ccwm_veto_never_vetoed(instance), "veto-never-vetoed")
            if m >= 3:
                return CcwmVerdict(brute_ccwm(instance, caps), "oracle(NP-hard case)")
            raise UnsupportedCell("veto with fewer than 3 candidates is not classified")
        if society.kind in ("swoon", "dodgson"):
            if m >= 5:
                return CcwmVerdict(ccwm_veto_never_vetoed(instance), "veto-never-vetoed")
            if m >= 3:
                return CcwmVerdict(brute_ccwm(instance, caps), "oracle(NP-hard case)")
            raise UnsupportedCell("veto with fewer than 3 candidates is not classified")
        raise UnsupportedCell(f"veto over society {society.kind!r} is not classified")
    a1, a2, _ = _normalized_alphas(instance.system)
    if a2 == 0:
        return CcwmVerdict(_trivial_plurality_like(instance), "trivial-top-spot")
    if society.kind == "maverick" and society.params[0] >= 1:
        return CcwmVerdict(brute_ccwm(instance, caps), "oracle(NP-hard case)")
    if society.kind == "single-caved":
        if a1 > 2 * a2:
            return CcwmVerdict(ccwm_singlecaved_scoring(instance), "single-caved-scoring")
        return CcwmVerdict(brute_ccwm(instance, caps), "oracle(NP-hard case)")
    raise UnsupportedCell(
        f"scoring over society {society.kind!r} is not a classified cell")
