"""Control solvers: approval CCAV/CCDV with maverick enumeration and
demaverickification, Condorcet CCAV/CCDV, and plurality CCAC/CCDC for
k-maverick, k-local (single-peaked / Dodgson / perception-flip), and
single-caved societies.
"""

from __future__ import annotations

from dataclasses import replace
from itertools import combinations, product

from axisvote.model import (
    ApprovalVote,
    AttackInstance,
    AttackOutcome,
    LinearVote,
    System,
    Witness,
    evaluate_winners,
)
from axisvote.oracle import subsets_up_to
from axisvote.structure import (
    is_approval_interval,
    is_single_caved,
    neighborhood,
    plurality_scores,
    sp_order_with_peak,
    vote_consistent,
)

INF = float("inf")
_APPROVAL = System("approval")
_CONDORCET = System("condorcet")
_PLURALITY = System("plurality")


class EnumerationCapExceeded(RuntimeError):
    """The maverick subset enumeration would exceed the caller's cap."""


def demaverickify_approval(votes, axis):
    """Replace every axis-inconsistent approval vote approving S by |S|
    singleton-approval votes of the same weight; per-candidate approval
    scores are unchanged and the result has zero mavericks."""
    out = []
    for vote in votes:
        if is_approval_interval(vote.approved, axis):
            out.append(vote)
        else:
            for c in sorted(vote.approved):
                out.append(ApprovalVote(frozenset({c}), vote.weight))
    return tuple(out)


def _approval_gaps(votes, p, ids):
    scores = {c: 0 for c in ids}
    for vote in votes:
        for c in vote.approved:
            scores[c] += vote.weight
    return {c: scores[c] - scores[p] for c in ids if c != p}


def _cover_search(groups, needs, budget):
    """Pick at most `budget` items from weighted groups so that every need is
    met.  Each group carries a per-rival multiplier mask (an item of weight w
    closes rival r's need by mult[r] * w), and its items sorted heaviest first
    (within a mask, heavier items dominate).  Returns the chosen item labels
    or None."""
    rivals = tuple(sorted(needs))
    start = tuple(max(0, needs[r]) for r in rivals)
    prepared = []
    for mask, items in groups:
        mask_t = tuple(mask.get(r, 0) for r in rivals)
        if not any(mask_t):
            continue
        weights = [w for w, _ in items]
        prefix = [0]
        for w in weights:
            prefix.append(prefix[-1] + w)
        prepared.append((mask_t, prefix, [label for _, label in items]))
    dead = set()

    def rec(gi, budget_left, need):
        if not any(need):
            return []
        if gi == len(prepared) or budget_left == 0:
            return None
        key = (gi, budget_left, need)
        if key in dead:
            return None
        mask_t, prefix, labels = prepared[gi]
        for q in range(min(budget_left, len(labels)) + 1):
            new_need = tuple(
                max(0, n - m * prefix[q]) for n, m in zip(need, mask_t)
            )
            sub = rec(gi + 1, budget_left - q, new_need)
            if sub is not None:
                return labels[:q] + sub
        dead.add(key)
        return None

    return rec(0, budget, start)


def _group_by_mask(entries):
    """entries: iterable of (mask dict rival->multiplier, weight, label);
    heavier first in each group, groups ordered deterministically."""
    buckets = {}
    for mask, weight, label in entries:
        key = tuple(sorted(mask.items()))
        buckets.setdefault(key, []).append((weight, label))
    groups = []
    for key in sorted(buckets):
        items = sorted(buckets[key], key=lambda t: (-t[0], t[1]))
        groups.append((dict(key), items))
    return groups


def sp_approval_ccav(election, pool, p, K, axis) -> AttackOutcome:
    """Approval CCAV when every pool vote is an axis interval.

    Only pool votes approving p can ever help (they raise p's score by their
    weight and each rival's by at most that), and such a vote narrows every
    rival outside its interval by its weight.  This reduces the problem to a
    covering search over interval types.
    """
    for vote in pool:
        if not is_approval_interval(vote.approved, axis):
            raise ValueError("pool vote is not an axis interval")
    gaps = _approval_gaps(election.votes, p, election.ids)
    needs = {c: g for c, g in gaps.items() if g > 0}
    if not needs:
        return AttackOutcome(True, Witness(added_voters=()))
    if K == 0:
        return AttackOutcome(False)
    entries = []
    for idx, vote in enumerate(pool):
        if p not in vote.approved:
            continue
        mask = {c: 1 for c in needs if c not in vote.approved}
        if mask:
            entries.append((mask, vote.weight, idx))
    chosen = _cover_search(_group_by_mask(entries), needs, K)
    if chosen is None:
        return AttackOutcome(False)
    return AttackOutcome(True, Witness(added_voters=tuple(sorted(chosen))))


def sp_approval_ccdv_flagged(election, p, K, axis) -> AttackOutcome:
    """Approval CCDV with a deletable flag per voter; every deletable vote
    must be an axis interval (nondeletable votes may be mavericks).

    Only deletable votes that miss p are worth deleting; such a deletion
    lowers every approved rival by the vote's weight.
    """
    deletable = [i for i, v in enumerate(election.votes) if "deletable" in v.flags]
    for i in deletable:
        if not is_approval_interval(election.votes[i].approved, axis):
            raise ValueError("deletable vote is not an axis interval")
    gaps = _approval_gaps(election.votes, p, election.ids)
    needs = {c: g for c, g in gaps.items() if g > 0}
    if not needs:
        return AttackOutcome(True, Witness(deleted_voters=()))
    if K == 0:
        return AttackOutcome(False)
    entries = []
    for idx in deletable:
        vote = election.votes[idx]
        if p in vote.approved:
            continue
        mask = {c: 1 for c in needs if c in vote.approved}
        if mask:
            entries.append((mask, vote.weight, idx))
    chosen = _cover_search(_group_by_mask(entries), needs, K)
    if chosen is None:
        return AttackOutcome(False)
    return AttackOutcome(True, Witness(deleted_voters=tuple(sorted(chosen))))


def _maverick_bound(instance, maverick_bound):
    if maverick_bound is not None:
        return maverick_bound
    if instance.society.kind == "maverick":
        return instance.society.params[0]
    if instance.society.kind == "sp":
        return 0
    raise ValueError("instance carries no maverick bound")


def maverick_control_approval(instance: AttackInstance, maverick_bound=None,
                              count_pool_only: bool = True,
                              enum_cap: int = 2 ** 20) -> AttackOutcome:
    """Approval CCAV/CCDV with a bounded number of mavericks, solved by
    enumerating which mavericks take part and reducing the rest to the
    single-peaked base solvers."""
    bound = _maverick_bound(instance, maverick_bound)
    election, p, K, axis = instance.election, instance.preferred, instance.budget, instance.axis
    if instance.kind == "ccav":
        pool_mavs = [i for i, v in enumerate(instance.pool)
                     if not is_approval_interval(v.approved, axis)]
        if len(pool_mavs) > bound:
            raise ValueError("pool maverick count exceeds the bound")
        if not count_pool_only:
            total = len(pool_mavs) + sum(
                1 for v in election.votes if not is_approval_interval(v.approved, axis))
            if total > bound:
                raise ValueError("total maverick count exceeds the bound")
        if 2 ** len(pool_mavs) > enum_cap:
            raise EnumerationCapExceeded("maverick subset enumeration exceeds the cap")
        clean_pool = [(i, v) for i, v in enumerate(instance.pool) if i not in set(pool_mavs)]
        for added in subsets_up_to(pool_mavs, min(K, len(pool_mavs))):
            main = tuple(election.votes) + tuple(instance.pool[i] for i in added)
            main = demaverickify_approval(main, axis)
            sub_election = _with_votes(election, main)
            rest_pool = tuple(v for _, v in clean_pool)
            outcome = sp_approval_ccav(sub_election, rest_pool, p, K - len(added), axis)
            if outcome.decision:
                picked = tuple(clean_pool[j][0] for j in outcome.witness.added_voters)
                return AttackOutcome(True, Witness(
                    added_voters=tuple(sorted(added + picked))))
        return AttackOutcome(False)
    if instance.kind == "ccdv":
        input_flagged = [i for i, v in enumerate(election.votes) if "deletable" in v.flags]
        allowed = set(input_flagged) if input_flagged else set(range(len(election.votes)))
        mavs = [i for i, v in enumerate(election.votes)
                if not is_approval_interval(v.approved, axis)]
        if len(mavs) > bound:
            raise ValueError("maverick count exceeds the bound")
        if 2 ** len(mavs) > enum_cap:
            raise EnumerationCapExceeded("maverick subset enumeration exceeds the cap")
        deletable_mavs = [i for i in mavs if i in allowed]
        mav_set = set(mavs)
        for deleted in subsets_up_to(deletable_mavs, min(K, len(deletable_mavs))):
            dropped = set(deleted)
            kept = [(i, v) for i, v in enumerate(election.votes) if i not in dropped]
            votes = tuple(
                ApprovalVote(v.approved, v.weight,
                             frozenset({"deletable"})
                             if i not in mav_set and i in allowed else frozenset())
                for i, v in kept)
            sub_election = _with_votes(election, votes)
            outcome = sp_approval_ccdv_flagged(sub_election, p, K - len(deleted), axis)
            if outcome.decision:
                picked = tuple(kept[j][0] for j in outcome.witness.deleted_voters)
                return AttackOutcome(True, Witness(
                    deleted_voters=tuple(sorted(deleted + picked))))
        return AttackOutcome(False)
    raise ValueError("expected a ccav or ccdv instance")


def _with_votes(election, votes):
    return replace(election, votes=tuple(votes))


def _condorcet_partition(votes, p, axis, indices):
    pos = {c: i for i, c in enumerate(axis)}
    left, right, top_p, mav = [], [], [], []
    for i in indices:
        vote = votes[i]
        if vote.ranking[0] == p:
            top_p.append(i)
        elif not vote_consistent(vote, axis):
            mav.append(i)
        elif pos[vote.ranking[0]] < pos[p]:
            left.append(i)
        else:
            right.append(i)
    return left, right, top_p, mav


def _is_condorcet_p(election, votes, p):
    winners = evaluate_winners(_with_votes(election, votes), _CONDORCET)
    return p in winners


def maverick_control_condorcet(instance: AttackInstance, maverick_bound=None,
                               enum_cap: int = 2 ** 20) -> AttackOutcome:
    """Condorcet CCAV/CCDV with bounded mavericks.

    Voters ranking p first dominate every other action, so CCAV adds
    min(|W_p|, K) of them up front; the remaining budget goes to maverick
    subsets plus sorted prefixes of the left/right single-peaked voters.
    """
    bound = _maverick_bound(instance, maverick_bound)
    election, p, K, axis = instance.election, instance.preferred, instance.budget, instance.axis
    if any(v.weight != 1 for v in tuple(election.votes) + tuple(instance.pool)):
        # The sorted-prefix dominance argument orders voters by how many
        # candidates they prefer to p, which is only a total order when all
        # voters count equally.
        raise ValueError("condorcet voter control requires unit-weight voters")
    prefer_count = lambda vote: vote.ranking.index(p)
    if instance.kind == "ccav":
        pool = instance.pool
        wl, wr, wp, wm = _condorcet_partition(pool, p, axis, range(len(pool)))
        if len(wm) > bound:
            raise ValueError("maverick count exceeds the bound")
        if 2 ** len(wm) > enum_cap:
            raise EnumerationCapExceeded("maverick subset enumeration exceeds the cap")
        wl.sort(key=lambda i: (prefer_count(pool[i]), i))
        wr.sort(key=lambda i: (prefer_count(pool[i]), i))
        base = list(election.votes)
        first = wp[:min(len(wp), K)]
        added_base = [pool[i] for i in first]
        if _is_condorcet_p(election, base + added_base, p):
            return AttackOutcome(True, Witness(added_voters=tuple(sorted(first))))
        K1 = K - len(first)
        if K1 == 0:
            return AttackOutcome(False)
        for chosen_m in subsets_up_to(wm, min(K1, len(wm))):
            K2 = K1 - len(chosen_m)
            mav_votes = [pool[i] for i in chosen_m]
            for kl in range(min(K2, len(wl)) + 1):
                for kr in range(min(K2 - kl, len(wr)) + 1):
                    extra = [pool[i] for i in wl[:kl]] + [pool[i] for i in wr[:kr]]
                    if _is_condorcet_p(election, base + added_base + mav_votes + extra, p):
                        picked = tuple(sorted(first + list(chosen_m)
                                              + wl[:kl] + wr[:kr]))
                        return AttackOutcome(True, Witness(added_voters=picked))
        return AttackOutcome(False)
    if instance.kind == "ccdv":
        votes = election.votes
        vl, vr, vp, vm = _condorcet_partition(votes, p, axis, range(len(votes)))
        if len(vm) > bound:
            raise ValueError("maverick count exceeds the bound")
        if 2 ** len(vm) > enum_cap:
            raise EnumerationCapExceeded("maverick subset enumeration exceeds the cap")
        vl.sort(key=lambda i: (-prefer_count(votes[i]), i))
        vr.sort(key=lambda i: (-prefer_count(votes[i]), i))
        for chosen_m in subsets_up_to(vm, min(K, len(vm))):
            K1 = K - len(chosen_m)
            for kl in range(min(K1, len(vl)) + 1):
                for kr in range(min(K1 - kl, len(vr)) + 1):
                    dropped = set(chosen_m) | set(vl[:kl]) | set(vr[:kr])
                    kept = [v for i, v in enumerate(votes) if i not in dropped]
                    if _is_condorcet_p(election, kept, p):
                        return AttackOutcome(True, Witness(
                            deleted_voters=tuple(sorted(dropped))))
        return AttackOutcome(False)
    raise ValueError("expected a ccav or ccdv instance")


def neighborhood_family(candidate_ids, spoiler_ids, d, k, axis):
    """All possible k-radius neighborhoods of d over choices of added
    spoilers; spoiler subsets of size at most 2k+1 realize every one."""
    base = frozenset(candidate_ids)
    others = [a for a in spoiler_ids if a != d]
    forced = frozenset({d}) if d in spoiler_ids else frozenset()
    seen = set()
    for size in range(min(2 * k + 1, len(others)) + 1):
        for combo in combinations(others, size):
            members = base | forced | frozenset(combo)
            if d not in members:
                continue
            seen.add(neighborhood(axis, members, d, k))
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def klocal_min_additions(candidate_ids, spoiler_ids, votes, axis, k, t,
                         with_choice: bool = False, check=None):
    """Smallest number of spoilers whose addition keeps every candidate's
    plurality score at most t, assuming the election is k-local w.r.t. the
    axis and both axis endpoints of the universe are registered.

    `check` optionally restricts which candidates must respect the score
    bound (used by the candidate-addition solver, whose side subproblems
    must not re-score the already-fixed neighborhood of p with truncated
    context); by default every candidate is checked.

    Dynamic program over (candidate, intended k-radius neighborhood) pairs
    sweeping the axis left to right.  Returns the minimum (or inf); with
    with_choice=True returns (minimum, chosen spoiler set or None).
    """
    C = frozenset(candidate_ids)
    A = frozenset(spoiler_ids) - C
    universe = [c for c in axis if c in C | A]
    if not universe or universe[0] not in C or universe[-1] not in C:
        raise ValueError("axis endpoints of the universe must be registered")
    if check is None:
        check = C | A
    families = {d: neighborhood_family(C, A, d, k, axis) for d in universe}
    index = {d: i for i, d in enumerate(universe)}
    axis_key = {c: i for i, c in enumerate(axis)}

    def lt(s):
        return min(s, key=axis_key.__getitem__)

    def rt(s):
        return max(s, key=axis_key.__getitem__)

    table = {}
    d1 = universe[0]
    for nb in families[d1]:
        if lt(nb) != d1:
            continue
        if d1 in check and plurality_scores(votes, nb)[d1] > t:
            continue
        table[(d1, nb)] = (len(nb & A), None, nb & A)
    for d in universe[1:]:
        for nb in families[d]:
            if d in check and plurality_scores(votes, nb)[d] > t:
                continue
            preds = [x for x in nb if index[x] < index[d]]
            if not preds:
                continue
            dj = max(preds, key=index.__getitem__)
            r = rt(nb)
            best = None
            for nb2 in families[dj]:
                if (dj, nb2) not in table:
                    continue
                if nb | {lt(nb2)} != nb2 | {r}:
                    continue
                cost, _, _ = table[(dj, nb2)]
                inc = 1 if (r in A and r not in nb2) else 0
                cand = cost + inc
                if best is None or cand < best[0]:
                    new = frozenset({r}) if (r in A and r not in nb2) else frozenset()
                    best = (cand, (dj, nb2), new)
            if best is not None:
                table[(d, nb)] = best
    dm = universe[-1]
    final = None
    for nb in families[dm]:
        entry = table.get((dm, nb))
        if entry is not None and (final is None or entry[0] < final[1][0]):
            final = ((dm, nb), entry)
    if final is None:
        return (INF, None) if with_choice else INF
    if not with_choice:
        return final[1][0]
    chosen = set()
    key, entry = final
    while key is not None:
        cost, parent, added = table[key]
        chosen |= added
        key = parent
    return final[1][0], frozenset(chosen)


def _pad_sentinels(candidate_ids, spoiler_ids, votes, axis):
    """Append two registered sentinel candidates at the axis ends, ranked
    last by all voters, so the DP's endpoint precondition holds."""
    m = len(axis)
    s_left, s_right = m, m + 1
    new_axis = (s_left,) + tuple(axis) + (s_right,)
    new_votes = [LinearVote(v.ranking + (s_left, s_right), v.weight, v.flags)
                 for v in votes]
    return tuple(candidate_ids) + (s_left, s_right), tuple(spoiler_ids), new_votes, new_axis


def ccac_plurality_klocal(candidate_ids, spoiler_ids, votes, axis, k, p, K) -> AttackOutcome:
    """Plurality CCAC for k-local elections: fix p's k-radius neighborhood
    (fixing p's score t), then solve the left and right sides independently
    with the minimum-additions DP."""
    C, A, V, ax = _pad_sentinels(candidate_ids, spoiler_ids, votes, axis)
    Cset, Aset = frozenset(C), frozenset(A) - frozenset(C)
    universe = [c for c in ax if c in Cset | Aset]
    index = {d: i for i, d in enumerate(universe)}
    p_i = index[p]
    for nb in neighborhood_family(Cset, Aset, p, k, ax):
        K_p = len(nb & Aset)
        if K_p > K:
            continue
        t = plurality_scores(V, nb)[p]
        lt_i = min(index[x] for x in nb)
        rt_i = max(index[x] for x in nb)
        # Each side subproblem only vouches for candidates on its side of p:
        # their true neighborhoods lie inside that side's universe, whereas
        # the other side's members of nb would be re-scored with truncated
        # context.
        left_C = (set(universe[:lt_i]) & Cset) | nb
        left_A = set(universe[:lt_i]) & Aset
        k_left, pick_left = klocal_min_additions(
            left_C, left_A, V, ax, k, t, with_choice=True,
            check={d for d in left_C | left_A if index[d] <= p_i})
        if k_left == INF:
            continue
        right_C = (set(universe[rt_i + 1:]) & Cset) | nb
        right_A = set(universe[rt_i + 1:]) & Aset
        k_right, pick_right = klocal_min_additions(
            right_C, right_A, V, ax, k, t, with_choice=True,
            check={d for d in right_C | right_A if index[d] >= p_i})
        if k_right == INF:
            continue
        if K_p + k_left + k_right <= K:
            added = sorted((nb & Aset) | pick_left | pick_right)
            return AttackOutcome(True, Witness(added_candidates=tuple(added)))
    return AttackOutcome(False)


def ccdc_plurality_klocal(candidate_ids, votes, axis, k, p, K,
                          protected=frozenset()) -> AttackOutcome:
    """Plurality CCDC for k-local elections with a protected set F (p in F):
    enumerate p's post-deletion k-radius neighborhood, then greedily delete
    any remaining candidate outscoring p."""
    ordered = [c for c in axis if c in set(candidate_ids)]
    i_p = ordered.index(p)
    lefts = ordered[:i_p][::-1]
    rights = ordered[i_p + 1:]
    all_ids = set(candidate_ids)

    def side_choices(side):
        # Keep-sets realizing every possible one-sided neighborhood of p:
        # keeping fewer than k candidates means every other candidate on
        # that side must go, keeping exactly k means only the nearer
        # bypassed ones must.
        for size in range(min(k, len(side)) + 1):
            for kept in combinations(side, size):
                if size == k:
                    far = max(side.index(c) for c in kept)
                    forced = set(side[:far + 1]) - set(kept)
                else:
                    forced = set(side) - set(kept)
                yield forced

    for left_forced in side_choices(lefts):
        for right_forced in side_choices(rights):
            D = left_forced | right_forced
            if D & protected:
                continue
            blocked = False
            while True:
                remaining = all_ids - D
                scores = plurality_scores(votes, remaining)
                offenders = sorted(
                    (c for c in remaining if c != p and scores[c] > scores[p]),
                    key=lambda c: axis.index(c))
                if not offenders:
                    break
                c = offenders[0]
                if c in protected:
                    blocked = True
                    break
                D.add(c)
            if blocked or len(D) > K:
                continue
            return AttackOutcome(True, Witness(deleted_candidates=tuple(sorted(D))))
    return AttackOutcome(False)


def kmaverick_control_plurality(instance: AttackInstance, k=None) -> AttackOutcome:
    """Plurality CCAC/CCDC with at most k maverick voters: enumerate which
    candidate each maverick will end up ranking first, rewrite the mavericks
    as single-peaked votes with that peak, and call the 1-local solvers."""
    if k is None:
        k = instance.society.params[0] if instance.society.kind == "maverick" else 0
    election, p, K, axis = instance.election, instance.preferred, instance.budget, instance.axis
    votes = election.votes
    mav_idx = [i for i, v in enumerate(votes) if not vote_consistent(v, axis)]
    if len(mav_idx) > k:
        raise ValueError("maverick count exceeds the bound")
    pos = {c: i for i, c in enumerate(axis)}

    def prefers(vote, a, b):
        return vote.ranking.index(a) < vote.ranking.index(b)

    if instance.kind == "ccac":
        C = set(instance.registered)
        A = list(instance.spoilers)
        domain = sorted(C | set(A))
        for B in product(domain, repeat=len(mav_idx)):
            fixed_tops = set(B)
            if any(
                any(prefers(votes[mi], c, b) for c in (C | fixed_tops) - {b})
                for mi, b in zip(mav_idx, B)
            ):
                continue
            b_spoilers = [b for b in set(B) if b not in C]
            newC = C | set(b_spoilers)
            banned = {a for a in A if a not in newC and any(
                prefers(votes[mi], a, b) for mi, b in zip(mav_idx, B))}
            newA = [a for a in A if a not in newC and a not in banned]
            K1 = K - len(b_spoilers)
            if K1 < 0:
                continue
            universe = newC | set(newA)
            new_votes = list(votes)
            for mi, b in zip(mav_idx, B):
                peak_order = sp_order_with_peak(b, axis, members=universe)
                tail = tuple(c for c in axis if c not in universe)
                new_votes[mi] = LinearVote(peak_order + tail, votes[mi].weight)
            sub = ccac_plurality_klocal(sorted(newC), sorted(newA), new_votes,
                                        axis, 1, p, K1)
            if sub.decision:
                added = tuple(sorted(set(b_spoilers)
                                     | set(sub.witness.added_candidates)))
                return AttackOutcome(True, Witness(added_candidates=added))
        return AttackOutcome(False)
    if instance.kind == "ccdc":
        C = set(election.ids)
        for B in product(sorted(C), repeat=len(mav_idx)):
            F1 = set(B) | {p} | set(instance.protected)
            if any(
                any(prefers(votes[mi], c, b) for c in F1 - {b})
                for mi, b in zip(mav_idx, B)
            ):
                continue
            forced = {c for c in C if any(
                prefers(votes[mi], c, b) for mi, b in zip(mav_idx, B))}
            if forced & set(instance.protected):
                continue
            newC = C - forced
            K1 = K - len(forced)
            if K1 < 0:
                continue
            new_votes = list(votes)
            for mi, b in zip(mav_idx, B):
                peak_order = sp_order_with_peak(b, axis, members=newC)
                tail = tuple(c for c in axis if c not in newC)
                new_votes[mi] = LinearVote(peak_order + tail, votes[mi].weight)
            sub = ccdc_plurality_klocal(sorted(newC), new_votes, axis, 1, p, K1,
                                        protected=frozenset(F1))
            if sub.decision:
                deleted = tuple(sorted(forced | set(sub.witness.deleted_candidates)))
                return AttackOutcome(True, Witness(deleted_candidates=deleted))
        return AttackOutcome(False)
    raise ValueError("expected a ccac or ccdc instance")


def singlecaved_control_plurality(instance: AttackInstance) -> AttackOutcome:
    """Plurality CCAC/CCDC over single-caved electorates.

    Adding candidates can never turn p from a loser into a winner, so CCAC
    is a pure winner check.  For CCDC only deletion sets of the form
    "whole left block plus a right suffix" or "left prefix plus whole right
    block" can help, since p must end up an axis endpoint to score at all.
    """
    election, p, K, axis = instance.election, instance.preferred, instance.budget, instance.axis
    for vote in election.votes:
        if not is_single_caved(vote.ranking, axis):
            raise ValueError("vote is not single-caved")
    if instance.kind == "ccac":
        winners = evaluate_winners(election, _PLURALITY, candidates=instance.registered)
        if p in winners:
            return AttackOutcome(True, Witness(added_candidates=()))
        return AttackOutcome(False)
    if instance.kind == "ccdc":
        ordered = [c for c in axis if c in set(election.ids)]
        i_p = ordered.index(p)
        m = len(ordered)
        family = []
        for j in range(i_p + 1, m + 1):
            family.append(set(ordered[:i_p]) | set(ordered[j:]))
        for pre in range(i_p):
            family.append(set(ordered[:pre]) | set(ordered[i_p + 1:]))
        family.sort(key=lambda s: (len(s), sorted(s)))
        everyone = set(election.ids)
        for D in family:
            if len(D) > K or D & set(instance.protected):
                continue
            if not election.votes or p in evaluate_winners(
                    election, _PLURALITY, candidates=everyone - D):
                return AttackOutcome(True, Witness(deleted_candidates=tuple(sorted(D))))
        return AttackOutcome(False)
    raise ValueError("expected a ccac or ccdc instance")
