"""Recognition and quantification of nearness to single-peakedness.

Every predicate here measures a vote or an election against a given societal
axis; no axis discovery is performed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from axisvote.model import ApprovalVote, Election, LinearVote


def _axis_pos(axis):
    return {c: i for i, c in enumerate(axis)}


def is_single_peaked(ranking, axis) -> bool:
    """A vote is single-peaked iff reading it from least preferred upward,
    each candidate sits at an end of the axis interval still in play."""
    pos = _axis_pos(axis)
    lo, hi = 0, len(axis) - 1
    for c in reversed(ranking):
        if pos[c] == lo:
            lo += 1
        elif pos[c] == hi:
            hi -= 1
        else:
            return False
    return True


def is_single_caved(ranking, axis) -> bool:
    """Single-caved is the mirror notion: the reversed ranking is single-peaked."""
    return is_single_peaked(tuple(reversed(ranking)), axis)


def is_approval_interval(approved, axis) -> bool:
    """An approval ballot is consistent iff the approved set is an axis block
    (the empty set and the full set count as blocks)."""
    positions = sorted(i for i, c in enumerate(axis) if c in approved)
    return all(b - a == 1 for a, b in zip(positions, positions[1:]))


def vote_consistent(vote, axis) -> bool:
    """Axis-consistency of a single ballot: single-peaked for orders,
    an axis interval for approval."""
    if isinstance(vote, LinearVote):
        return is_single_peaked(vote.ranking, axis)
    return is_approval_interval(vote.approved, axis)


@dataclass(frozen=True)
class ConsistencyReport:
    is_sp: bool | None = None
    is_sc: bool | None = None
    is_approval_interval: bool | None = None
    dodgson_distance: int | None = None
    perception_flip_distance: int | None = None


def classify_vote(vote, axis) -> ConsistencyReport:
    """Structural classification of one ballot (distances not filled in)."""
    if isinstance(vote, ApprovalVote):
        return ConsistencyReport(is_approval_interval=is_approval_interval(vote.approved, axis))
    return ConsistencyReport(
        is_sp=is_single_peaked(vote.ranking, axis),
        is_sc=is_single_caved(vote.ranking, axis),
    )


def count_mavericks(election: Election, axis) -> int:
    """Number of ballots inconsistent with the axis."""
    return sum(1 for v in election.votes if not vote_consistent(v, axis))


def swoon_check(ranking, axis, k: int, k2: int) -> bool:
    """True iff the vote with its k favorites and k2 least favorites removed
    is single-peaked with respect to the axis restricted to the remainder."""
    if k + k2 >= len(ranking):
        raise ValueError("swoon parameters must leave at least one candidate")
    rest = ranking[k:len(ranking) - k2] if k2 else ranking[k:]
    keep = set(rest)
    return is_single_peaked(rest, tuple(c for c in axis if c in keep))


def sp_orders(axis):
    """Yield every ranking single-peaked w.r.t. the axis (2^(m-1) of them).

    Built top-down: the peak is chosen implicitly by repeatedly taking the
    bottom-most candidate from either end of the remaining axis interval.
    """
    def build(lo, hi, below):
        if lo == hi:
            yield (axis[lo],) + below
            return
        yield from build(lo + 1, hi, (axis[lo],) + below)
        yield from build(lo, hi - 1, (axis[hi],) + below)

    yield from build(0, len(axis) - 1, ())


def kendall_tau(r1, r2) -> int:
    """Number of candidate pairs the two rankings order differently."""
    pos = {c: i for i, c in enumerate(r2)}
    seq = [pos[c] for c in r1]
    return sum(1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j])


def dodgson_distance(ranking, axis) -> int:
    """Minimum number of adjacent swaps turning the vote into some
    single-peaked order; equals the minimum Kendall tau over those orders.

    Computed by a DP over axis intervals: single-peaked orders are exactly
    the ones built by peeling an endpoint of the remaining axis interval for
    each successive bottom position, and placing candidate c at the bottom of
    the remaining order costs one inversion per remaining candidate that the
    vote ranks below c.
    """
    pos_in_vote = {c: i for i, c in enumerate(ranking)}
    m = len(axis)

    def cost_of_peel(lo, hi, c):
        return sum(
            1
            for i in range(lo, hi + 1)
            if axis[i] != c and pos_in_vote[axis[i]] > pos_in_vote[c]
        )

    best = {(0, m - 1): 0}
    for size in range(m, 1, -1):
        nxt = {}
        for (lo, hi), acc in best.items():
            for lo2, hi2, c in ((lo + 1, hi, axis[lo]), (lo, hi - 1, axis[hi])):
                total = acc + cost_of_peel(lo, hi, c)
                key = (lo2, hi2)
                if total < nxt.get(key, float("inf")):
                    nxt[key] = total
        best = nxt
    return min(best.values()) if best else 0


def dodgson_distance_enum(ranking, axis) -> int:
    """Enumeration ground truth: minimum Kendall tau over all SP orders."""
    return min(kendall_tau(ranking, order) for order in sp_orders(axis))


def perception_flip_distance(ranking, axis, kmax: int = 6):
    """Least d <= kmax such that some axis within d adjacent swaps of the
    given one makes the vote single-peaked; None if every axis within kmax
    swaps fails (a strictly-greater-than-kmax marker).

    Adjacent axis swaps measure Kendall tau, so this is the minimum Kendall
    tau from the given axis to any axis the vote is single-peaked on.  Those
    axes are exactly the ones built by placing the vote's candidates top-down
    at either end of a growing block, and each left/right placement orders
    the new candidate against every earlier one at once, so the choices
    contribute independently.
    """
    pos = _axis_pos(axis)
    total = 0
    for j in range(1, len(ranking)):
        before = sum(1 for i in range(j) if pos[ranking[i]] < pos[ranking[j]])
        total += min(before, j - before)
        if total > kmax:
            return None
    return total


def perception_flip_distance_enum(ranking, axis, kmax: int = 6):
    """Enumeration ground truth for perception_flip_distance: breadth-first
    search over axes reachable by adjacent swaps."""
    start = tuple(axis)
    frontier = [start]
    seen = {start}
    for d in range(kmax + 1):
        for ax in frontier:
            if is_single_peaked(ranking, ax):
                return d
        nxt = []
        for ax in frontier:
            for i in range(len(ax) - 1):
                flipped = ax[:i] + (ax[i + 1], ax[i]) + ax[i + 2:]
                if flipped not in seen:
                    seen.add(flipped)
                    nxt.append(flipped)
        frontier = nxt
    return None


def neighborhood(axis, members, center, k: int) -> frozenset:
    """The k-radius neighborhood of `center` inside `members`, with distance
    measured by position in the axis restricted to `members`."""
    ordered = [c for c in axis if c in members]
    i = ordered.index(center)
    return frozenset(ordered[max(0, i - k):i + k + 1])


def plurality_scores(votes, members) -> dict:
    """Weighted plurality scores when the contest is restricted to `members`."""
    scores = {c: 0 for c in members}
    for vote in votes:
        for c in vote.ranking:
            if c in members:
                scores[c] += vote.weight
                break
    return scores


def locality_check(candidate_ids, spoiler_ids, votes, axis, k: int,
                   mode: str = "sufficient") -> bool:
    """Check that the election is k-local w.r.t. the axis.

    sufficient: every vote within distance k-1 of single-peaked (by adjacent
    swaps in the vote or in the axis) certifies k-locality.
    exhaustive: verify the defining score identity over every candidate
    subset (at most 12 candidates).
    """
    full = tuple(candidate_ids) + tuple(spoiler_ids)
    if mode == "sufficient":
        if k < 1:
            return False
        for vote in votes:
            if dodgson_distance(vote.ranking, axis) <= k - 1:
                continue
            if perception_flip_distance(vote.ranking, axis, kmax=k - 1) is not None:
                continue
            return False
        return True
    if mode != "exhaustive":
        raise ValueError("mode must be 'sufficient' or 'exhaustive'")
    if len(full) > 12:
        raise ValueError("exhaustive locality check capped at 12 candidates")
    members = list(full)
    for r in range(1, len(members) + 1):
        for subset in combinations(members, r):
            sub = frozenset(subset)
            scores = plurality_scores(votes, sub)
            for c in subset:
                local = plurality_scores(votes, neighborhood(axis, sub, c, k))
                if local[c] != scores[c]:
                    return False
    return True


def sp_order_with_peak(peak, axis, members=None, low_end=None):
    """A deterministic single-peaked ranking with the given peak.

    After the peak, remaining candidates on one side of the peak are ranked
    nearest-first, then the other side.  By default the left side comes
    first; passing low_end as a candidate forces that axis endpoint to be
    ranked last (its side comes second).
    """
    keep = set(axis if members is None else members)
    ordered = [c for c in axis if c in keep]
    i = ordered.index(peak)
    left = ordered[:i][::-1]
    right = ordered[i + 1:]
    if low_end is not None:
        if left and left[-1] == low_end:
            return (peak, *right, *left)
        if not (right and right[-1] == low_end):
            raise ValueError("low_end must be an axis endpoint other than the peak")
    return (peak, *left, *right)
