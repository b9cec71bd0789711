"""Exhaustive ground-truth solvers for every attack problem.

These oracles enumerate the full action space under explicit size caps and
return the lexicographically least witness.  They deliberately avoid any
pruning cleverness so that they stay obviously correct.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations, permutations, product
from math import comb, factorial

from axisvote.model import (
    ApprovalVote,
    AttackInstance,
    AttackOutcome,
    LinearVote,
    System,
    Witness,
    evaluate_winners,
)
from axisvote.structure import (
    dodgson_distance,
    is_approval_interval,
    is_single_caved,
    perception_flip_distance,
    swoon_check,
    vote_consistent,
)


@dataclass(frozen=True)
class OracleCaps:
    max_candidates: int = 6
    max_voters: int = 8
    max_manipulators: int = 4
    max_subsets: int = 2 ** 22

    def __post_init__(self):
        if min(self.max_candidates, self.max_voters,
               self.max_manipulators, self.max_subsets) < 1:
            raise ValueError("oracle caps must be positive")


class CapExceeded(RuntimeError):
    """Raised when an instance is too large for exhaustive enumeration."""


def society_admits_profile(votes, axis, society) -> bool:
    """Whether a full vote profile satisfies the society constraint."""
    if society.kind == "none":
        return True
    if society.kind == "maverick":
        bad = sum(1 for v in votes if not vote_consistent(v, axis))
        return bad <= society.params[0]
    for vote in votes:
        if society.kind == "sp":
            ok = vote_consistent(vote, axis)
        elif society.kind == "single-caved":
            ok = is_single_caved(vote.ranking, axis)
        elif society.kind == "swoon":
            ok = swoon_check(vote.ranking, axis, *society.params)
        elif society.kind == "dodgson":
            ok = dodgson_distance(vote.ranking, axis) <= society.params[0]
        elif society.kind == "perceptionflip":
            ok = perception_flip_distance(vote.ranking, axis, kmax=society.params[0]) is not None
        else:
            raise ValueError(f"unknown society {society.kind!r}")
        if not ok:
            return False
    return True


def subsets_up_to(indices, max_size):
    """Subsets of the index sequence, smallest first, lexicographic within size."""
    indices = tuple(indices)
    for r in range(min(max_size, len(indices)) + 1):
        yield from combinations(indices, r)


def _count_subsets(n, max_size):
    return sum(comb(n, r) for r in range(min(max_size, n) + 1))


def brute_ccwm(instance: AttackInstance, caps: OracleCaps = OracleCaps()) -> AttackOutcome:
    """Try every tuple of society-admissible manipulator rankings."""
    m = len(instance.election.candidates)
    n_manip = len(instance.manipulator_weights)
    if m > caps.max_candidates:
        raise CapExceeded("too many candidates for brute_ccwm")
    if n_manip > caps.max_manipulators:
        raise CapExceeded("too many manipulators for brute_ccwm")
    if factorial(m) ** n_manip > caps.max_subsets:
        raise CapExceeded("manipulator vote space exceeds the subset cap")
    rankings = sorted(permutations(range(m)))
    base = list(instance.election.votes)
    for choice in product(rankings, repeat=n_manip):
        votes = base + [LinearVote(r, w) for r, w in zip(choice, instance.manipulator_weights)]
        if instance.axis is not None and not society_admits_profile(
                votes, instance.axis, instance.society):
            continue
        winners = evaluate_winners(replace(instance.election, votes=tuple(votes)),
                                   instance.system)
        if instance.preferred in winners:
            return AttackOutcome(True, Witness(manipulator_votes=choice))
    return AttackOutcome(False)


def _positional_alphas(system: System, m: int):
    if system.name == "plurality":
        return (1,) + (0,) * (m - 1)
    if system.name == "veto":
        return (1,) * (m - 1) + (0,)
    if system.name == "borda":
        return tuple(range(m - 1, -1, -1))
    if system.name == "scoring":
        if len(system.alphas) != m:
            raise ValueError("scoring vector length must match the candidate count")
        return tuple(system.alphas)
    raise ValueError(f"{system.name!r} is not a positional scoring system")


def brute_ccwm_grouped(instance: AttackInstance,
                       caps: OracleCaps = OracleCaps()) -> AttackOutcome:
    """Exhaustive CCWM search over positional scoring systems that groups
    manipulator rankings by the score column they induce.

    Equivalent to brute_ccwm (two rankings with the same score column are
    interchangeable up to admissibility, so each group keeps an
    axis-consistent representative when one exists); the grouping makes
    manipulator counts beyond brute_ccwm's reach enumerable, e.g. veto has
    only m distinct columns instead of m! rankings.
    """
    ids = instance.election.ids
    m = len(ids)
    if m > caps.max_candidates:
        raise CapExceeded("too many candidates for brute_ccwm_grouped")
    n_manip = len(instance.manipulator_weights)
    if n_manip > caps.max_voters:
        raise CapExceeded("too many manipulators for brute_ccwm_grouped")
    alphas = _positional_alphas(instance.system, m)
    axis, society = instance.axis, instance.society
    per_vote_society = axis is not None and society.kind not in ("none", "maverick")
    maverick_budget = None
    if axis is not None and society.kind == "maverick":
        bad = sum(1 for v in instance.election.votes if not vote_consistent(v, axis))
        maverick_budget = society.params[0] - bad
        if maverick_budget < 0:
            return AttackOutcome(False)
    if per_vote_society and not society_admits_profile(
            instance.election.votes, axis, society):
        return AttackOutcome(False)

    # group -> (score column, representative ranking, maverick cost)
    groups = {}
    for ranking in sorted(permutations(range(m))):
        pos = {c: i for i, c in enumerate(ranking)}
        column = tuple(alphas[pos[c]] for c in ids)
        vote = LinearVote(ranking)
        if per_vote_society:
            if not society_admits_profile((vote,), axis, society):
                continue
            cost = 0
        elif maverick_budget is not None:
            cost = 0 if vote_consistent(vote, axis) else 1
        else:
            cost = 0
        known = groups.get(column)
        if known is None or cost < known[1]:
            groups[column] = (ranking, cost)
    if not groups:
        return AttackOutcome(False)
    if len(groups) ** n_manip > caps.max_subsets:
        raise CapExceeded("grouped manipulator vote space exceeds the subset cap")

    base = {c: 0 for c in ids}
    for vote in instance.election.votes:
        pos = {c: i for i, c in enumerate(vote.ranking)}
        for c in ids:
            base[c] += alphas[pos[c]] * vote.weight
    p = instance.preferred
    rivals = [c for c in ids if c != p]
    idx = {c: i for i, c in enumerate(ids)}
    options = sorted((column, ranking, cost)
                     for column, (ranking, cost) in groups.items())
    weights = instance.manipulator_weights
    # best_gain[i][c]: largest total lead gain over rival c achievable by
    # manipulators i..n-1, used to prune hopeless branches.
    best_gain = [{c: 0 for c in rivals} for _ in range(n_manip + 1)]
    for i in range(n_manip - 1, -1, -1):
        for c in rivals:
            best_gain[i][c] = best_gain[i + 1][c] + weights[i] * max(
                column[idx[p]] - column[idx[c]] for column, _, _ in options)

    deficits = {c: base[c] - base[p] for c in rivals}
    chosen = []

    def dfs(i, budget):
        if any(deficits[c] > best_gain[i][c] for c in rivals):
            return None
        if i == n_manip:
            return tuple(chosen)
        for column, ranking, cost in options:
            if budget is not None and cost > budget:
                continue
            w = weights[i]
            for c in rivals:
                deficits[c] += w * (column[idx[c]] - column[idx[p]])
            chosen.append(ranking)
            found = dfs(i + 1, None if budget is None else budget - cost)
            chosen.pop()
            for c in rivals:
                deficits[c] -= w * (column[idx[c]] - column[idx[p]])
            if found is not None:
                return found
        return None

    found = dfs(0, maverick_budget)
    if found is None:
        return AttackOutcome(False)
    return AttackOutcome(True, Witness(manipulator_votes=found))


def brute_control(instance: AttackInstance, caps: OracleCaps = OracleCaps()) -> AttackOutcome:
    """Try every legal addition or deletion subset within the budget."""
    election = instance.election
    p, K = instance.preferred, instance.budget
    if instance.kind == "ccav":
        if _count_subsets(len(instance.pool), K) > caps.max_subsets:
            raise CapExceeded("pool subset space exceeds the subset cap")
        for subset in subsets_up_to(range(len(instance.pool)), K):
            votes = tuple(election.votes) + tuple(instance.pool[i] for i in subset)
            winners = evaluate_winners(replace(election, votes=votes), instance.system)
            if p in winners:
                return AttackOutcome(True, Witness(added_voters=subset))
        return AttackOutcome(False)
    if instance.kind == "ccdv":
        flagged = [i for i, v in enumerate(election.votes) if "deletable" in v.flags]
        deletable = flagged if flagged else list(range(len(election.votes)))
        if _count_subsets(len(deletable), K) > caps.max_subsets:
            raise CapExceeded("deletion subset space exceeds the subset cap")
        for subset in subsets_up_to(deletable, K):
            dropped = set(subset)
            votes = tuple(v for i, v in enumerate(election.votes) if i not in dropped)
            winners = evaluate_winners(replace(election, votes=votes), instance.system)
            if p in winners:
                return AttackOutcome(True, Witness(deleted_voters=subset))
        return AttackOutcome(False)
    if instance.kind == "ccac":
        if _count_subsets(len(instance.spoilers), K) > caps.max_subsets:
            raise CapExceeded("spoiler subset space exceeds the subset cap")
        registered = set(instance.registered)
        for subset in subsets_up_to(instance.spoilers, K):
            winners = evaluate_winners(election, instance.system,
                                       candidates=registered | set(subset))
            if p in winners:
                return AttackOutcome(True, Witness(added_candidates=subset))
        return AttackOutcome(False)
    if instance.kind == "ccdc":
        removable = [c for c in election.ids if c not in instance.protected]
        if _count_subsets(len(removable), K) > caps.max_subsets:
            raise CapExceeded("candidate deletion space exceeds the subset cap")
        everyone = set(election.ids)
        for subset in subsets_up_to(removable, K):
            winners = evaluate_winners(election, instance.system,
                                       candidates=everyone - set(subset))
            if p in winners:
                return AttackOutcome(True, Witness(deleted_candidates=subset))
        return AttackOutcome(False)
    raise ValueError(f"brute_control cannot handle attack kind {instance.kind!r}")


def _legal_targets(voter, p, variant, all_ids, interval_only, axis):
    sets = []
    for r in range(len(all_ids) + 1):
        for subset in combinations(all_ids, r):
            new = frozenset(subset)
            if variant == "strongnegative" and p in new:
                continue
            if variant == "negative" and p in new and p not in voter.approved:
                continue
            if interval_only and not is_approval_interval(new, axis):
                continue
            sets.append(new)
    return sets


def brute_flagbribe(election, p, K, axis, variant,
                    caps: OracleCaps = OracleCaps()) -> AttackOutcome:
    """Ground truth for flag-level bribery: only open-to-bribe voters may be
    bribed, and only to axis-interval approval sets legal for the variant."""
    m = len(election.candidates)
    if m > caps.max_candidates:
        raise CapExceeded("too many candidates for brute bribery")
    if len(election.votes) > caps.max_voters:
        raise CapExceeded("too many voters for brute bribery")
    bribable = [i for i, v in enumerate(election.votes) if "open-to-bribe" in v.flags]
    targets = {
        i: _legal_targets(election.votes[i], p, variant, election.ids, True, axis)
        for i in bribable
    }
    return _search_bribes(election, p, K, bribable, targets, caps, lambda votes: True)


def brute_bribery(instance: AttackInstance, caps: OracleCaps = OracleCaps()) -> AttackOutcome:
    """Ground truth for standard- and marked-model approval bribery."""
    election = instance.election
    m = len(election.candidates)
    if m > caps.max_candidates:
        raise CapExceeded("too many candidates for brute bribery")
    if len(election.votes) > caps.max_voters:
        raise CapExceeded("too many voters for brute bribery")
    p, K, axis = instance.preferred, instance.budget, instance.axis
    if instance.bribery_model == "marked":
        enabled = {i for i, v in enumerate(election.votes) if "maverick-enabled" in v.flags}
        bribable = list(range(len(election.votes)))
        targets = {
            i: _legal_targets(election.votes[i], p, instance.bribery_variant,
                              election.ids, i not in enabled, axis)
            for i in bribable
        }

        def admissible(votes):
            return all(vote_consistent(v, axis)
                       for i, v in enumerate(votes) if i not in enabled)
    else:
        bound = {"maverick": instance.society.params[0] if instance.society.params else 0,
                 "sp": 0}.get(instance.society.kind)
        bribable = list(range(len(election.votes)))
        targets = {
            i: _legal_targets(election.votes[i], p, instance.bribery_variant,
                              election.ids, False, axis)
            for i in bribable
        }

        def admissible(votes):
            if bound is None:
                return True
            bad = sum(1 for v in votes if not vote_consistent(v, axis))
            return bad <= bound
    return _search_bribes(election, p, K, bribable, targets, caps, admissible)


def _search_bribes(election, p, K, bribable, targets, caps, admissible):
    worst = max((len(t) for t in targets.values()), default=1)
    if _count_subsets(len(bribable), K) * worst ** min(K, len(bribable)) > caps.max_subsets:
        raise CapExceeded("bribery action space exceeds the subset cap")
    system = System("approval")
    for subset in subsets_up_to(bribable, K):
        choices = [sorted(targets[i], key=lambda s: (len(s), sorted(s))) for i in subset]
        for assignment in product(*choices):
            votes = list(election.votes)
            for i, new in zip(subset, assignment):
                old = votes[i]
                votes[i] = ApprovalVote(new, old.weight, old.flags)
            if not admissible(votes):
                continue
            winners = evaluate_winners(replace(election, votes=tuple(votes)), system)
            if p in winners:
                bribes = tuple(zip(subset, assignment))
                return AttackOutcome(True, Witness(bribes=bribes))
    return AttackOutcome(False)
