"""Executable hardness-gadget generators.

Each generator maps a PARTITION or exact-3-cover source instance to an
attack instance whose answer provably matches, and verify_reduction replays
both sides (direct search on the source, exhaustive oracle on the target).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from axisvote.model import (
    AttackInstance,
    Election,
    LinearVote,
    ORDERS,
    Society,
    System,
)
from axisvote.oracle import (
    OracleCaps,
    brute_ccwm_grouped,
    brute_control,
    society_admits_profile,
)
from axisvote.structure import sp_order_with_peak

PARTITION_KINDS = ("scoring1mav", "vetoKmav", "vetoSwoon4", "vetoDodgson4",
                   "singleCaved")
X3C_KINDS = ("ccacSwoon", "ccdcSwoon", "ccacDodgsonM2", "ccdcDodgsonM2",
             "ccacPerceptionM2", "ccdcPerceptionM2")


@dataclass(frozen=True)
class PartitionInstance:
    """Distinct positive integers summing to an even total 2K."""
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("partition instance needs at least one value")
        if any(v < 1 for v in self.values):
            raise ValueError("partition values must be positive")
        if len(set(self.values)) != len(self.values):
            raise ValueError("partition values must be distinct")
        if sum(self.values) % 2:
            raise ValueError("partition values must sum to an even number")

    @property
    def half(self) -> int:
        return sum(self.values) // 2


@dataclass(frozen=True)
class X3CInstance:
    """Exact cover by 3-sets: a base of size 3k and a list of 3-element
    subsets of it (elements numbered 1..3k)."""
    base_size: int
    sets: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.base_size < 3 or self.base_size % 3:
            raise ValueError("base size must be a positive multiple of 3")
        for s in self.sets:
            if len(set(s)) != 3 or not all(1 <= e <= self.base_size for e in s):
                raise ValueError("each set must hold 3 distinct base elements")

    @property
    def k(self) -> int:
        return self.base_size // 3

    @property
    def n(self) -> int:
        return len(self.sets)

    def occurrences(self, element: int) -> int:
        return sum(1 for s in self.sets if element in s)


def partition_has_split(inst: PartitionInstance):
    """Direct solver: a subset summing to half the total, or None."""
    half = inst.half
    reach = {0: ()}
    for v in inst.values:
        for total, picked in sorted(reach.items()):
            new = total + v
            if new <= half and new not in reach:
                reach[new] = picked + (v,)
    return reach.get(half)


def x3c_has_cover(inst: X3CInstance):
    """Direct solver: indices of an exact cover, or None."""
    by_element = {e: [] for e in range(1, inst.base_size + 1)}
    for i, s in enumerate(inst.sets):
        for e in s:
            by_element[e].append(i)

    def search(covered, chosen):
        if len(covered) == inst.base_size:
            return chosen
        e = min(x for x in range(1, inst.base_size + 1) if x not in covered)
        for i in by_element[e]:
            s = set(inst.sets[i])
            if s & covered:
                continue
            found = search(covered | s, chosen + (i,))
            if found is not None:
                return found
        return None

    return search(set(), ())


def _normalize(alphas):
    a1, a2, a3 = alphas
    if not a1 >= a2 > a3:
        raise ValueError("scoring vector must satisfy alpha1 >= alpha2 > alpha3")
    return a1 - a3, a2 - a3


def partition_to_ccwm(kind: str, inst: PartitionInstance, alphas=None,
                      m: int = None, k: int = None) -> AttackInstance:
    """Build the CCWM election whose manipulators can elect p exactly when
    the partition instance splits evenly."""
    K = inst.half
    if kind == "scoring1mav":
        a1, a2 = _normalize(alphas)
        votes = [LinearVote((1, 2, 0), (2 * a1 - a2) * a1 * K)]
        if a1 != a2:
            votes.append(LinearVote((2, 0, 1), (2 * a1 - a2) * (a1 - a2) * K))
        weights = tuple((a1 * a1 - a1 * a2 + a2 * a2) * v for v in inst.values)
        return AttackInstance(
            kind="ccwm",
            election=Election(("p", "a", "b"), ORDERS, tuple(votes)),
            system=System("scoring", tuple(alphas)),
            preferred=0, axis=(1, 0, 2),
            society=Society("maverick", (1,)),
            manipulator_weights=weights)
    if kind == "vetoKmav":
        if not 3 <= m <= k + 2:
            raise ValueError("vetoKmav needs 3 <= m <= k+2")
        # axis a < p < c1 < ... < c_{m-3} < b with ids in axis order
        names = ("a", "p") + tuple(f"c{i}" for i in range(1, m - 2)) + ("b",)
        axis = tuple(range(m))
        votes = []
        for c in range(1, m - 1):
            rest = tuple(x for x in range(m) if x != c)
            votes.append(LinearVote(rest + (c,), K))
        return AttackInstance(
            kind="ccwm",
            election=Election(names, ORDERS, tuple(votes)),
            system=System("veto"),
            preferred=1, axis=axis,
            society=Society("maverick", (k,)),
            manipulator_weights=tuple(inst.values))
    if kind in ("vetoSwoon4", "vetoDodgson4"):
        # axis a < p < b < c, ids in axis order: a=0 p=1 b=2 c=3
        names = ("a", "p", "b", "c")
        axis = (0, 1, 2, 3)
        if kind == "vetoSwoon4":
            votes = (LinearVote((0, 3, 2, 1), K), LinearVote((3, 0, 1, 2), K))
            society = Society("swoon", (1, 0))
        else:
            votes = (LinearVote((3, 2, 0, 1), K), LinearVote((0, 1, 3, 2), K))
            society = Society("dodgson", (1,))
        return AttackInstance(
            kind="ccwm",
            election=Election(names, ORDERS, votes),
            system=System("veto"),
            preferred=1, axis=axis,
            society=society,
            manipulator_weights=tuple(inst.values))
    if kind == "singleCaved":
        a1, a2 = _normalize(alphas)
        if a1 > 2 * a2:
            raise ValueError("singleCaved needs alpha1 <= 2*alpha2 after normalization")
        votes = []
        if a1 != 2 * a2:
            w = (2 * a2 - a1) * K
            votes = [LinearVote((1, 2, 0), w), LinearVote((2, 1, 0), w)]
        weights = tuple((a1 + a2) * v for v in inst.values)
        return AttackInstance(
            kind="ccwm",
            election=Election(("p", "a", "b"), ORDERS, tuple(votes)),
            system=System("scoring", tuple(alphas)),
            preferred=0, axis=(1, 0, 2),
            society=Society("single-caved"),
            manipulator_weights=weights)
    raise ValueError(f"unknown partition reduction kind {kind!r}")


def complete_top_two(ci, cj, axis, society: str, rank_c1_last: bool) -> LinearVote:
    """A full ranking with ci first and cj second whose distance from
    single-peakedness is at most m-2 under the requested nearness notion,
    optionally ranking the leftmost axis candidate last."""
    if ci == cj:
        raise ValueError("the two top candidates must differ")
    c1 = axis[0]
    if rank_c1_last and c1 in (ci, cj):
        raise ValueError("ranking c1 last requires ci and cj distinct from c1")
    if society == "dodgsonM2":
        base = sp_order_with_peak(ci, axis, low_end=c1 if rank_c1_last else None)
        rest = [c for c in base if c != cj]
        return LinearVote((rest[0], cj, *rest[1:]))
    if society == "perceptionM2":
        # Slide cj adjacent to ci on the axis (at most m-2 adjacent swaps,
        # never displacing the leftmost candidate), then vote single-peaked
        # on the altered axis with ci on top and cj second.
        trimmed = [c for c in axis if c != cj]
        i = trimmed.index(ci)
        new_axis = tuple(trimmed[:i + 1] + [cj] + trimmed[i + 1:])
        left = [c for c in new_axis[:i + 1] if c != ci][::-1]
        right = [c for c in new_axis[i + 2:]]
        if rank_c1_last:
            return LinearVote((ci, cj, *right, *left))
        return LinearVote((ci, cj, *left, *right))
    raise ValueError(f"unknown top-two society {society!r}")


def _top_two_vote(ci, cj, axis, flavor, rank_c1_last=False, members=None):
    """Vote with the given top two, legal in the given society flavor."""
    ax = axis if members is None else tuple(c for c in axis if c in set(members))
    if flavor == "swoon":
        low = ax[0] if rank_c1_last else None
        return LinearVote((ci,) + sp_order_with_peak(
            cj, ax, members=[c for c in ax if c != ci], low_end=low))
    return complete_top_two(ci, cj, ax, flavor, rank_c1_last)


def x3c_to_control(kind: str, inst: X3CInstance) -> AttackInstance:
    """Build the plurality control election whose attack succeeds exactly
    when the exact-cover instance has a cover of the base."""
    if kind not in X3C_KINDS:
        raise ValueError(f"unknown control reduction kind {kind!r}")
    k, n = inst.k, inst.n
    flavor = {"Swoon": "swoon", "DodgsonM2": "dodgsonM2",
              "PerceptionM2": "perceptionM2"}[kind[4:]]
    if kind.startswith("ccac"):
        if k < 2 or n < 4:
            raise ValueError("candidate-addition gadget needs k >= 2 and n >= 4")
        # ids in axis order: p=0, d=1, b_i=1+i, a_j=3k+1+j
        names = ("p", "d") + tuple(f"b{i}" for i in range(1, 3 * k + 1)) \
            + tuple(f"a{j}" for j in range(1, n + 1))
        m = len(names)
        axis = tuple(range(m))
        b = lambda i: 1 + i
        a = lambda j: 3 * k + 1 + j
        votes = []
        for j, s in enumerate(inst.sets, start=1):
            for e in sorted(s):
                votes.extend(_top_two_vote(a(j), b(e), axis, flavor)
                             for _ in range(2 * k))
        for j in range(1, n + 1):
            votes.append(_top_two_vote(a(j), 0, axis, flavor))
        p_first = LinearVote(sp_order_with_peak(0, axis))
        votes.extend(p_first for _ in range(2 * n * k + k - n))
        d_first = LinearVote(sp_order_with_peak(1, axis))
        votes.extend(d_first for _ in range(2 * n * k))
        for i in range(1, 3 * k + 1):
            count = 2 * n * k + 2 * k - 2 * k * inst.occurrences(i)
            bi_first = LinearVote(sp_order_with_peak(b(i), axis))
            votes.extend(bi_first for _ in range(count))
        society = {"swoon": Society("swoon", (1, 0)),
                   "dodgsonM2": Society("dodgson", (m - 2,)),
                   "perceptionM2": Society("perceptionflip", (m - 2,))}[flavor]
        return AttackInstance(
            kind="ccac",
            election=Election(names, ORDERS, tuple(votes)),
            system=System("plurality"),
            preferred=0, axis=axis, society=society, budget=k,
            spoilers=tuple(a(j) for j in range(1, n + 1)))
    # candidate deletion: ids in axis order p=0, b_i=i, a_j=3k+j (no d)
    if k <= 5:
        raise ValueError("candidate-deletion gadget needs k > 5")
    names = ("p",) + tuple(f"b{i}" for i in range(1, 3 * k + 1)) \
        + tuple(f"a{j}" for j in range(1, n + 1))
    m = len(names)
    axis = tuple(range(m))
    b = lambda i: i
    a = lambda j: 3 * k + j
    votes = []
    for j, s in enumerate(inst.sets, start=1):
        for e in sorted(s):
            votes.append(_top_two_vote(a(j), b(e), axis, flavor, rank_c1_last=True))
    for j in range(1, n + 1):
        votes.append(_top_two_vote(a(j), 0, axis, flavor))
    for i in range(1, 3 * k + 1):
        bi_first = LinearVote(sp_order_with_peak(b(i), axis, low_end=0))
        votes.extend(bi_first for _ in range(k - 1))
    society = {"swoon": Society("swoon", (1, 0)),
               "dodgsonM2": Society("dodgson", (m - 2,)),
               "perceptionM2": Society("perceptionflip", (m - 2,))}[flavor]
    return AttackInstance(
        kind="ccdc",
        election=Election(names, ORDERS, tuple(votes)),
        system=System("plurality"),
        preferred=0, axis=axis, society=society, budget=k,
        protected=frozenset({0}))


def pad_for_epsilon(instance: AttackInstance, t: int) -> AttackInstance:
    """Append t blocks of single-peaked padding votes to a swoon control
    gadget; each block leaves every relevant score gap, and hence the
    decision, unchanged while diluting the maverick fraction."""
    if t < 0:
        raise ValueError("padding block count must be nonnegative")
    if instance.kind not in ("ccac", "ccdc") or instance.society.kind != "swoon":
        raise ValueError("padding applies to the swoon control gadgets only")
    if t == 0:
        return instance
    axis, p, k = instance.axis, instance.preferred, instance.budget
    block = []
    if instance.kind == "ccac":
        d = axis[1]
        bs = [c for c in instance.registered if c not in (p, d)]
        for bi in sorted(bs):
            block.append(LinearVote(sp_order_with_peak(bi, axis, low_end=p)))
        block.append(LinearVote(sp_order_with_peak(p, axis)))
        block.append(LinearVote(sp_order_with_peak(d, axis, low_end=p)))
    else:
        bs = list(axis[1:3 * k + 1])
        for bi in sorted(bs):
            block.append(LinearVote(sp_order_with_peak(bi, axis, low_end=p)))
        block.append(LinearVote(sp_order_with_peak(p, axis)))
    votes = tuple(instance.election.votes) + tuple(block) * t
    return replace(instance, election=replace(instance.election, votes=votes))


@dataclass(frozen=True)
class ReductionReport:
    source_yes: bool
    reduced_yes: bool
    agree: bool
    votes_admissible: bool


def verify_reduction(source, reduced: AttackInstance,
                     caps: OracleCaps = OracleCaps()) -> ReductionReport:
    """Round-trip check: direct search on the source, exhaustive oracle on
    the reduced instance, plus society validation of every built vote."""
    if isinstance(source, PartitionInstance):
        source_yes = partition_has_split(source) is not None
    elif isinstance(source, X3CInstance):
        source_yes = x3c_has_cover(source) is not None
    else:
        raise ValueError("unknown source instance type")
    if reduced.kind == "ccwm":
        reduced_yes = brute_ccwm_grouped(reduced, caps).decision
    elif reduced.kind in ("ccac", "ccdc"):
        reduced_yes = brute_control(reduced, caps).decision
    else:
        raise ValueError("reduced instance has an unexpected attack kind")
    admissible = society_admits_profile(
        reduced.election.votes, reduced.axis, reduced.society)
    return ReductionReport(source_yes, reduced_yes,
                           source_yes == reduced_yes, admissible)
