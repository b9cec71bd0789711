"""Seeded random instance generators for oracle-equivalence sweeps and
benchmarks.  Every generator takes a random.Random so runs are reproducible
from a single seed.
"""

from __future__ import annotations

from axisvote.model import (
    APPROVAL,
    ApprovalVote,
    AttackInstance,
    Election,
    LinearVote,
    ORDERS,
    Society,
    System,
)



def rand_axis(rng, m):
    axis = list(range(m))
    rng.shuffle(axis)
    return tuple(axis)


def rand_sp_ranking(rng, axis):
    """Uniformly random single-peaked ranking: peel a random axis end for
    each successive bottom position."""
    lo, hi = 0, len(axis) - 1
    bottom_up = []
    while lo < hi:
        if rng.random() < 0.5:
            bottom_up.append(axis[lo])
            lo += 1
        else:
            bottom_up.append(axis[hi])
            hi -= 1
    bottom_up.append(axis[lo])
    return tuple(reversed(bottom_up))


def rand_sc_ranking(rng, axis):
    return tuple(reversed(rand_sp_ranking(rng, axis)))


def rand_any_ranking(rng, m):
    r = list(range(m))
    rng.shuffle(r)
    return tuple(r)


def rand_swoon_ranking(rng, axis):
    """Swoon(1,0)-legal ranking: a freely chosen favorite, then a
    single-peaked order over the rest."""
    fav = rng.choice(axis)
    rest = tuple(c for c in axis if c != fav)
    return (fav,) + rand_sp_ranking(rng, rest)


def rand_dodgson1_ranking(rng, axis):
    """Ranking within one adjacent swap of single-peaked."""
    r = list(rand_sp_ranking(rng, axis))
    if len(r) > 1 and rng.random() < 0.5:
        i = rng.randrange(len(r) - 1)
        r[i], r[i + 1] = r[i + 1], r[i]
    return tuple(r)


def rand_interval_approval(rng, axis):
    m = len(axis)
    if rng.random() < 0.1:
        return frozenset()
    i = rng.randrange(m)
    j = rng.randrange(i, m)
    return frozenset(axis[i:j + 1])


def rand_any_approval(rng, m):
    return frozenset(c for c in range(m) if rng.random() < 0.5)


def _weight(rng):
    return rng.randint(1, 3)


def _society_ranking(rng, axis, society: Society):
    if society.kind == "sp":
        return rand_sp_ranking(rng, axis)
    if society.kind == "single-caved":
        return rand_sc_ranking(rng, axis)
    if society.kind == "swoon":
        return rand_swoon_ranking(rng, axis)
    if society.kind == "dodgson":
        return rand_dodgson1_ranking(rng, axis)
    raise ValueError(f"no per-vote generator for society {society.kind!r}")


def gen_ccwm(rng, system: System, society: Society, m, n_voters, n_manip) -> AttackInstance:
    axis = rand_axis(rng, m)
    votes = []
    if society.kind == "maverick":
        n_mav = rng.randint(0, min(society.params[0], n_voters))
        kinds = ["mav"] * n_mav + ["sp"] * (n_voters - n_mav)
        rng.shuffle(kinds)
        for kind in kinds:
            r = rand_any_ranking(rng, m) if kind == "mav" else rand_sp_ranking(rng, axis)
            votes.append(LinearVote(r, _weight(rng)))
    else:
        for _ in range(n_voters):
            votes.append(LinearVote(_society_ranking(rng, axis, society), _weight(rng)))
    names = tuple(f"c{i}" for i in range(m))
    return AttackInstance(
        kind="ccwm",
        election=Election(names, ORDERS, tuple(votes)),
        system=system,
        preferred=rng.randrange(m),
        axis=axis,
        society=society,
        manipulator_weights=tuple(_weight(rng) for _ in range(n_manip)))


def gen_approval_control(rng, kind, m, n_voters, n_pool, K, bound) -> AttackInstance:
    """CCAV/CCDV approval instances under a maverick(bound) society."""
    axis = rand_axis(rng, m)

    def votes_with_mavericks(count, max_mav):
        n_mav = rng.randint(0, min(max_mav, count))
        kinds = ["mav"] * n_mav + ["sp"] * (count - n_mav)
        rng.shuffle(kinds)
        out = []
        for vk in kinds:
            approved = rand_any_approval(rng, m) if vk == "mav" \
                else rand_interval_approval(rng, axis)
            out.append(ApprovalVote(approved, _weight(rng)))
        return tuple(out)

    names = tuple(f"c{i}" for i in range(m))
    if kind == "ccav":
        return AttackInstance(
            kind="ccav",
            election=Election(names, APPROVAL, votes_with_mavericks(n_voters, bound)),
            system=System("approval"),
            preferred=rng.randrange(m), axis=axis,
            society=Society("maverick", (bound,)),
            budget=K, pool=votes_with_mavericks(n_pool, bound))
    return AttackInstance(
        kind="ccdv",
        election=Election(names, APPROVAL, votes_with_mavericks(n_voters, bound)),
        system=System("approval"),
        preferred=rng.randrange(m), axis=axis,
        society=Society("maverick", (bound,)),
        budget=K)


def gen_condorcet_control(rng, kind, m, n_voters, n_pool, K, bound) -> AttackInstance:
    axis = rand_axis(rng, m)

    def order_votes(count, max_mav):
        # Voter control under Condorcet is an unweighted problem (the
        # sorted-prefix solver requires unit weights).
        n_mav = rng.randint(0, min(max_mav, count))
        kinds = ["mav"] * n_mav + ["sp"] * (count - n_mav)
        rng.shuffle(kinds)
        out = []
        for vk in kinds:
            r = rand_any_ranking(rng, m) if vk == "mav" else rand_sp_ranking(rng, axis)
            out.append(LinearVote(r))
        return tuple(out)

    names = tuple(f"c{i}" for i in range(m))
    pool = order_votes(n_pool, bound) if kind == "ccav" else ()
    return AttackInstance(
        kind=kind,
        election=Election(names, ORDERS, order_votes(n_voters, bound)),
        system=System("condorcet"),
        preferred=rng.randrange(m), axis=axis,
        society=Society("maverick", (bound,)),
        budget=K, pool=pool)


def gen_klocal_control(rng, kind, m, n_voters, K, locality: str) -> AttackInstance:
    """Plurality CCAC/CCDC whose votes are single-peaked (1-local) or within
    one swap of it (2-local)."""
    axis = rand_axis(rng, m)
    make = rand_sp_ranking if locality == "sp" else rand_dodgson1_ranking
    votes = tuple(LinearVote(make(rng, axis), _weight(rng)) for _ in range(n_voters))
    names = tuple(f"c{i}" for i in range(m))
    society = Society("sp") if locality == "sp" else Society("dodgson", (1,))
    p = rng.randrange(m)
    if kind == "ccac":
        others = [c for c in range(m) if c != p]
        n_spoil = rng.randint(0, min(3, len(others)))
        spoilers = tuple(sorted(rng.sample(others, n_spoil)))
        return AttackInstance(
            kind="ccac", election=Election(names, ORDERS, votes),
            system=System("plurality"), preferred=p, axis=axis,
            society=society, budget=K, spoilers=spoilers)
    return AttackInstance(
        kind="ccdc", election=Election(names, ORDERS, votes),
        system=System("plurality"), preferred=p, axis=axis,
        society=society, budget=K, protected=frozenset({p}))


def gen_kmaverick_control(rng, kind, m, n_voters, K, k) -> AttackInstance:
    axis = rand_axis(rng, m)
    n_mav = rng.randint(0, min(k, n_voters))
    kinds = ["mav"] * n_mav + ["sp"] * (n_voters - n_mav)
    rng.shuffle(kinds)
    votes = tuple(
        LinearVote(rand_any_ranking(rng, m) if vk == "mav"
                   else rand_sp_ranking(rng, axis), _weight(rng))
        for vk in kinds)
    names = tuple(f"c{i}" for i in range(m))
    p = rng.randrange(m)
    if kind == "ccac":
        others = [c for c in range(m) if c != p]
        n_spoil = rng.randint(0, min(3, len(others)))
        spoilers = tuple(sorted(rng.sample(others, n_spoil)))
        return AttackInstance(
            kind="ccac", election=Election(names, ORDERS, votes),
            system=System("plurality"), preferred=p, axis=axis,
            society=Society("maverick", (k,)), budget=K, spoilers=spoilers)
    return AttackInstance(
        kind="ccdc", election=Election(names, ORDERS, votes),
        system=System("plurality"), preferred=p, axis=axis,
        society=Society("maverick", (k,)), budget=K, protected=frozenset({p}))


def gen_singlecaved_control(rng, kind, m, n_voters, K) -> AttackInstance:
    axis = rand_axis(rng, m)
    votes = tuple(LinearVote(rand_sc_ranking(rng, axis), _weight(rng))
                  for _ in range(n_voters))
    names = tuple(f"c{i}" for i in range(m))
    p = rng.randrange(m)
    if kind == "ccac":
        others = [c for c in range(m) if c != p]
        n_spoil = rng.randint(0, min(3, len(others)))
        spoilers = tuple(sorted(rng.sample(others, n_spoil)))
        return AttackInstance(
            kind="ccac", election=Election(names, ORDERS, votes),
            system=System("plurality"), preferred=p, axis=axis,
            society=Society("single-caved"), budget=K, spoilers=spoilers)
    return AttackInstance(
        kind="ccdc", election=Election(names, ORDERS, votes),
        system=System("plurality"), preferred=p, axis=axis,
        society=Society("single-caved"), budget=K, protected=frozenset({p}))


def gen_flagbribe_election(rng, m, n_voters):
    """Approval election where a random subset of interval voters carries the
    open-to-bribe flag (unflagged voters may be arbitrary)."""
    axis = rand_axis(rng, m)
    votes = []
    for _ in range(n_voters):
        if rng.random() < 0.6:
            votes.append(ApprovalVote(rand_interval_approval(rng, axis), _weight(rng),
                                      frozenset({"open-to-bribe"})))
        else:
            votes.append(ApprovalVote(rand_any_approval(rng, m), _weight(rng)))
    names = tuple(f"c{i}" for i in range(m))
    return Election(names, APPROVAL, tuple(votes)), axis


def gen_bribery(rng, model, variant, m, n_voters, K, bound) -> AttackInstance:
    axis = rand_axis(rng, m)
    votes = []
    if model == "marked":
        n_enabled = rng.randint(0, min(bound, n_voters))
        kinds = ["enabled"] * n_enabled + ["plain"] * (n_voters - n_enabled)
        rng.shuffle(kinds)
        for vk in kinds:
            if vk == "enabled":
                approved = rand_any_approval(rng, m)
                votes.append(ApprovalVote(approved, _weight(rng),
                                          frozenset({"maverick-enabled"})))
            else:
                votes.append(ApprovalVote(rand_interval_approval(rng, axis), _weight(rng)))
    else:
        n_mav = rng.randint(0, min(bound, n_voters))
        kinds = ["mav"] * n_mav + ["sp"] * (n_voters - n_mav)
        rng.shuffle(kinds)
        for vk in kinds:
            approved = rand_any_approval(rng, m) if vk == "mav" \
                else rand_interval_approval(rng, axis)
            votes.append(ApprovalVote(approved, _weight(rng)))
    names = tuple(f"c{i}" for i in range(m))
    return AttackInstance(
        kind="bribery",
        election=Election(names, APPROVAL, tuple(votes)),
        system=System("approval"),
        preferred=rng.randrange(m), axis=axis,
        society=Society("maverick", (bound,)),
        budget=K, bribery_model=model, bribery_variant=variant)
