"""Core domain types, winner evaluation, and the canonical text formats.

Candidates are dense integer ids 0..m-1 with unique names.  Votes are either
linear orders (rankings, most preferred first) or approval sets.  All types
are immutable values and every function here is pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

ORDERS = "orders"
APPROVAL = "approval"

FLAG_MAVERICK_ENABLED = "maverick-enabled"
FLAG_DELETABLE = "deletable"
FLAG_OPEN_TO_BRIBE = "open-to-bribe"
KNOWN_FLAGS = frozenset({FLAG_MAVERICK_ENABLED, FLAG_DELETABLE, FLAG_OPEN_TO_BRIBE})

ATTACK_KINDS = ("ccwm", "ccav", "ccdv", "ccac", "ccdc", "bribery")
SOCIETY_KINDS = ("none", "sp", "single-caved", "maverick", "swoon", "dodgson", "perceptionflip")
SYSTEM_NAMES = ("plurality", "veto", "borda", "approval", "condorcet", "scoring")
BRIBERY_MODELS = ("standard", "marked")
BRIBERY_VARIANTS = ("plain", "negative", "strongnegative")


class FormatError(ValueError):
    """Raised on malformed instance or outcome text."""


@dataclass(frozen=True)
class LinearVote:
    ranking: tuple[int, ...]
    weight: int = 1
    flags: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError("vote weight must be a positive integer")
        if len(set(self.ranking)) != len(self.ranking):
            raise ValueError("ranking must be a permutation")


@dataclass(frozen=True)
class ApprovalVote:
    approved: frozenset[int]
    weight: int = 1
    flags: frozenset[str] = frozenset()

    def __post_init__(self):
        if self.weight < 1:
            raise ValueError("vote weight must be a positive integer")


@dataclass(frozen=True)
class Election:
    candidates: tuple[str, ...]
    ballot_kind: str
    votes: tuple = ()

    def __post_init__(self):
        if len(set(self.candidates)) != len(self.candidates):
            raise ValueError("candidate names must be unique")
        for name in self.candidates:
            if not name or any(ch.isspace() for ch in name):
                raise ValueError("candidate names must be nonempty without whitespace")
        m = len(self.candidates)
        for vote in self.votes:
            if self.ballot_kind == ORDERS:
                if not isinstance(vote, LinearVote) or sorted(vote.ranking) != list(range(m)):
                    raise ValueError("orders ballot must rank every candidate exactly once")
            elif self.ballot_kind == APPROVAL:
                if not isinstance(vote, ApprovalVote) or not vote.approved <= set(range(m)):
                    raise ValueError("approval ballot must approve a subset of candidates")
            else:
                raise ValueError(f"unknown ballot kind {self.ballot_kind!r}")

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(range(len(self.candidates)))


@dataclass(frozen=True)
class System:
    name: str
    alphas: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.name not in SYSTEM_NAMES:
            raise ValueError(f"unknown voting system {self.name!r}")
        if self.name == "scoring":
            if not self.alphas:
                raise ValueError("scoring system needs a scoring vector")
            if any(a < 0 for a in self.alphas) or any(
                a < b for a, b in zip(self.alphas, self.alphas[1:])
            ):
                raise ValueError("scoring vector must be non-increasing and nonnegative")
        elif self.alphas is not None:
            raise ValueError("only scoring systems carry a scoring vector")


@dataclass(frozen=True)
class Society:
    kind: str = "none"
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in SOCIETY_KINDS:
            raise ValueError(f"unknown society kind {self.kind!r}")
        want = {"maverick": 1, "swoon": 2, "dodgson": 1, "perceptionflip": 1}.get(self.kind, 0)
        if len(self.params) != want or any(x < 0 for x in self.params):
            raise ValueError(f"society {self.kind!r} takes {want} nonnegative parameter(s)")


@dataclass(frozen=True)
class Witness:
    manipulator_votes: tuple[tuple[int, ...], ...] = ()
    added_voters: tuple[int, ...] = ()
    deleted_voters: tuple[int, ...] = ()
    added_candidates: tuple[int, ...] = ()
    deleted_candidates: tuple[int, ...] = ()
    bribes: tuple[tuple[int, frozenset[int]], ...] = ()


@dataclass(frozen=True)
class AttackOutcome:
    decision: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.decision != (self.witness is not None):
            raise ValueError("witness must be present exactly on yes outcomes")


@dataclass(frozen=True)
class AttackInstance:
    kind: str
    election: Election
    system: System
    preferred: int
    axis: tuple[int, ...] | None = None
    society: Society = Society()
    budget: int = 0
    pool: tuple = ()
    spoilers: tuple[int, ...] = ()
    protected: frozenset[int] = frozenset()
    manipulator_weights: tuple[int, ...] = ()
    bribery_model: str | None = None
    bribery_variant: str | None = None

    def __post_init__(self):
        if self.kind not in ATTACK_KINDS:
            raise ValueError(f"unknown attack kind {self.kind!r}")
        m = len(self.election.candidates)
        if not 0 <= self.preferred < m:
            raise ValueError("preferred candidate not in the candidate set")
        if self.budget < 0:
            raise ValueError("budget must be nonnegative")
        if self.axis is not None and sorted(self.axis) != list(range(m)):
            raise ValueError("axis must order exactly the candidate ids")
        if self.society.kind != "none" and self.axis is None:
            raise ValueError("a society constraint requires an axis")
        if self.kind == "ccdc":
            if self.preferred not in self.protected or not self.protected <= set(range(m)):
                raise ValueError("ccdc protected set must satisfy p in F subset of C")
        if self.kind == "ccac":
            if not set(self.spoilers) <= set(range(m)) or self.preferred in self.spoilers:
                raise ValueError("spoilers must be candidate ids excluding p")
        if self.kind == "ccwm":
            if any(w < 1 for w in self.manipulator_weights):
                raise ValueError("manipulator weights must be positive")
        if self.kind == "bribery":
            if self.bribery_model not in BRIBERY_MODELS:
                raise ValueError("bribery instance needs a bribery model")
            if self.bribery_variant not in BRIBERY_VARIANTS:
                raise ValueError("bribery instance needs a bribery variant")

    @property
    def registered(self) -> tuple[int, ...]:
        """Candidate ids excluding spoilers (equals all ids unless ccac)."""
        spoiled = set(self.spoilers)
        return tuple(c for c in self.election.ids if c not in spoiled)


def _restrict_ranking(ranking: tuple[int, ...], subset: frozenset[int]) -> tuple[int, ...]:
    return tuple(c for c in ranking if c in subset)


def evaluate_winners(election: Election, system: System, candidates=None) -> frozenset[int]:
    """Return all co-winners of the election under the given system.

    `candidates` optionally restricts the contest to a subset of ids
    (ballots are projected onto the subset); by default all candidates run.
    """
    subset = frozenset(election.ids if candidates is None else candidates)
    if not subset:
        raise ValueError("cannot evaluate winners of an empty candidate set")
    if system.name == "approval":
        if election.ballot_kind != APPROVAL:
            raise ValueError("approval system needs approval ballots")
    elif election.ballot_kind != ORDERS:
        raise ValueError(f"{system.name} system needs orders ballots")

    if system.name == "approval":
        scores = {c: 0 for c in subset}
        for vote in election.votes:
            for c in vote.approved & subset:
                scores[c] += vote.weight
        top = max(scores.values())
        return frozenset(c for c, s in scores.items() if s == top)

    if system.name == "condorcet":
        members = sorted(subset)
        wins = set()
        for c in members:
            beats_all = True
            for d in members:
                if c == d:
                    continue
                margin = 0
                for vote in election.votes:
                    pos = {x: i for i, x in enumerate(vote.ranking)}
                    margin += vote.weight if pos[c] < pos[d] else -vote.weight
                if margin <= 0:
                    beats_all = False
                    break
            if beats_all:
                wins.add(c)
        return frozenset(wins)

    if system.name == "plurality":
        # Only each ballot's first surviving candidate matters, so skip the
        # full ranking restriction (subset searches call this in a tight loop).
        scores = {c: 0 for c in subset}
        for vote in election.votes:
            for c in vote.ranking:
                if c in subset:
                    scores[c] += vote.weight
                    break
        top = max(scores.values())
        return frozenset(c for c, s in scores.items() if s == top)

    m = len(subset)
    if system.name == "veto":
        alphas = (1,) * (m - 1) + (0,)
    elif system.name == "borda":
        alphas = tuple(range(m - 1, -1, -1))
    else:
        alphas = system.alphas
        if len(alphas) != m:
            raise ValueError("scoring vector length must match the candidate count")
    scores = {c: 0 for c in subset}
    for vote in election.votes:
        for pos, c in enumerate(_restrict_ranking(vote.ranking, subset)):
            scores[c] += alphas[pos] * vote.weight
    top = max(scores.values())
    return frozenset(c for c, s in scores.items() if s == top)


def replay_witness(instance: AttackInstance, witness: Witness) -> frozenset[int]:
    """Apply a witness action to the instance and return the resulting winners."""
    election = instance.election
    if instance.kind == "ccwm":
        if len(witness.manipulator_votes) != len(instance.manipulator_weights):
            raise ValueError("witness must supply one ranking per manipulator")
        votes = list(election.votes) + [
            LinearVote(r, w) for r, w in zip(witness.manipulator_votes, instance.manipulator_weights)
        ]
        return evaluate_winners(replace(election, votes=tuple(votes)), instance.system)
    if instance.kind == "ccav":
        if len(witness.added_voters) > instance.budget:
            raise ValueError("witness exceeds the addition budget")
        votes = list(election.votes) + [instance.pool[i] for i in witness.added_voters]
        return evaluate_winners(replace(election, votes=tuple(votes)), instance.system,
                                candidates=instance.registered)
    if instance.kind == "ccdv":
        if len(witness.deleted_voters) > instance.budget:
            raise ValueError("witness exceeds the deletion budget")
        dropped = set(witness.deleted_voters)
        votes = tuple(v for i, v in enumerate(election.votes) if i not in dropped)
        return evaluate_winners(replace(election, votes=votes), instance.system)
    if instance.kind == "ccac":
        if len(witness.added_candidates) > instance.budget:
            raise ValueError("witness exceeds the addition budget")
        if not set(witness.added_candidates) <= set(instance.spoilers):
            raise ValueError("witness adds a non-spoiler candidate")
        contest = set(instance.registered) | set(witness.added_candidates)
        return evaluate_winners(election, instance.system, candidates=contest)
    if instance.kind == "ccdc":
        if len(witness.deleted_candidates) > instance.budget:
            raise ValueError("witness exceeds the deletion budget")
        if set(witness.deleted_candidates) & instance.protected:
            raise ValueError("witness deletes a protected candidate")
        contest = set(election.ids) - set(witness.deleted_candidates)
        return evaluate_winners(election, instance.system, candidates=contest)
    if instance.kind == "bribery":
        if len(witness.bribes) > instance.budget:
            raise ValueError("witness exceeds the bribery budget")
        votes = list(election.votes)
        for idx, new_set in witness.bribes:
            old = votes[idx]
            if instance.bribery_variant == "strongnegative" and instance.preferred in new_set:
                raise ValueError("strongnegative bribe must drop p")
            if (instance.bribery_variant == "negative"
                    and instance.preferred in new_set
                    and instance.preferred not in old.approved):
                raise ValueError("negative bribe cannot add p")
            votes[idx] = ApprovalVote(frozenset(new_set), old.weight, old.flags)
        return evaluate_winners(replace(election, votes=tuple(votes)), instance.system)
    raise ValueError(f"unknown attack kind {instance.kind!r}")


_VOTER_RE = re.compile(r"^(voter|pool)((?:\s+\[[^\]]*\])*)\s*:\s*(.*)$")
_OPT_RE = re.compile(r"\[([^\]]*)\]")


def _parse_vote_line(match, names_to_ids, ballot_kind, lineno):
    opts = _OPT_RE.findall(match.group(2))
    weight, flags = 1, set()
    for opt in opts:
        key, _, value = opt.partition("=")
        key, value = key.strip(), value.strip()
        if key == "w":
            try:
                weight = int(value)
            except ValueError:
                raise FormatError(f"line {lineno}: bad weight {value!r}")
        elif key == "flags":
            for flag in filter(None, (f.strip() for f in value.split(","))):
                if flag not in KNOWN_FLAGS:
                    raise FormatError(f"line {lineno}: unknown flag {flag!r}")
                flags.add(flag)
        else:
            raise FormatError(f"line {lineno}: unknown vote option {key!r}")
    body = match.group(3).strip()
    try:
        if ballot_kind == APPROVAL:
            if not (body.startswith("{") and body.endswith("}")):
                raise FormatError(f"line {lineno}: approval ballot must be a {{...}} set")
            inner = body[1:-1].strip()
            parts = [x.strip() for x in inner.split(",")] if inner else []
            approved = frozenset(_lookup(names_to_ids, x, lineno) for x in parts)
            if len(approved) != len(parts):
                raise FormatError(f"line {lineno}: duplicate candidate in approval set")
            return ApprovalVote(approved, weight, frozenset(flags))
        parts = [x.strip() for x in body.split(">")] if body else []
        ranking = tuple(_lookup(names_to_ids, x, lineno) for x in parts)
        if len(set(ranking)) != len(ranking) or len(ranking) != len(names_to_ids):
            raise FormatError(f"line {lineno}: ranking must list every candidate once")
        return LinearVote(ranking, weight, frozenset(flags))
    except ValueError as exc:
        raise FormatError(f"line {lineno}: {exc}")


def _lookup(names_to_ids, name, lineno):
    if name not in names_to_ids:
        raise FormatError(f"line {lineno}: unknown candidate {name!r}")
    return names_to_ids[name]


_SCALAR_KEYS = {
    "ballots", "candidates", "axis", "attack", "system", "preferred", "budget",
    "society", "spoilers", "protected", "manipulators", "bribery-model",
    "bribery-variant",
}


def parse_instance(text) -> AttackInstance:
    """Parse the canonical line-based instance format."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    keys: dict[str, tuple[str, int]] = {}
    voter_lines, pool_lines = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        match = _VOTER_RE.match(line)
        if match:
            (voter_lines if match.group(1) == "voter" else pool_lines).append((match, lineno))
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if not sep or key not in _SCALAR_KEYS:
            raise FormatError(f"line {lineno}: unknown key {key!r}")
        if key in keys:
            raise FormatError(f"line {lineno}: duplicate key {key!r}")
        keys[key] = (value, lineno)

    def need(key):
        if key not in keys:
            raise FormatError(f"missing required key {key!r}")
        return keys.pop(key)[0]

    def optional(key, default=None):
        return keys.pop(key)[0] if key in keys else default

    ballot_kind = need("ballots")
    if ballot_kind not in (ORDERS, APPROVAL):
        raise FormatError(f"ballots must be {ORDERS!r} or {APPROVAL!r}")
    names = need("candidates").split()
    names_to_ids = {n: i for i, n in enumerate(names)}
    if len(names_to_ids) != len(names):
        raise FormatError("duplicate candidate name")
    kind = need("attack")
    if kind not in ATTACK_KINDS:
        raise FormatError(f"unknown attack {kind!r}")

    system_words = need("system").split()
    if system_words[0] == "scoring":
        try:
            alphas = tuple(int(x) for x in system_words[1:])
        except ValueError:
            raise FormatError("scoring vector must be integers")
        system = System("scoring", alphas)
    elif len(system_words) == 1:
        system = System(system_words[0])
    else:
        raise FormatError(f"bad system line {' '.join(system_words)!r}")

    pname = need("preferred")
    if pname not in names_to_ids:
        raise FormatError(f"preferred candidate {pname!r} not declared")
    preferred = names_to_ids[pname]

    axis_value = optional("axis")
    axis = None
    if axis_value is not None:
        axis = tuple(_lookup(names_to_ids, x, 0) for x in axis_value.split())
        if sorted(axis) != list(range(len(names))):
            raise FormatError("axis must list every candidate exactly once")

    society_words = optional("society", "none").split()
    try:
        society = Society(society_words[0], tuple(int(x) for x in society_words[1:]))
    except ValueError as exc:
        raise FormatError(str(exc))

    try:
        budget = int(optional("budget", "0"))
    except ValueError:
        raise FormatError("budget must be an integer")

    spoilers = ()
    if "spoilers" in keys:
        if kind != "ccac":
            raise FormatError("spoilers are only legal for ccac")
        spoilers = tuple(_lookup(names_to_ids, x, 0) for x in need("spoilers").split())
    protected = frozenset()
    if "protected" in keys:
        if kind != "ccdc":
            raise FormatError("protected is only legal for ccdc")
        protected = frozenset(_lookup(names_to_ids, x, 0) for x in need("protected").split())
    if kind == "ccdc":
        protected = protected | {preferred}
    manipulator_weights = ()
    if kind == "ccwm":
        try:
            manipulator_weights = tuple(int(x) for x in need("manipulators").split())
        except ValueError:
            raise FormatError("manipulator weights must be integers")
    elif "manipulators" in keys:
        raise FormatError("manipulators are only legal for ccwm")
    bribery_model = bribery_variant = None
    if kind == "bribery":
        bribery_model = need("bribery-model")
        bribery_variant = need("bribery-variant")
    else:
        if "bribery-model" in keys or "bribery-variant" in keys:
            raise FormatError("bribery keys are only legal for bribery")
    if keys:
        raise FormatError(f"key {next(iter(keys))!r} is not legal for attack {kind!r}")

    votes = tuple(_parse_vote_line(m, names_to_ids, ballot_kind, ln) for m, ln in voter_lines)
    pool = tuple(_parse_vote_line(m, names_to_ids, ballot_kind, ln) for m, ln in pool_lines)
    if pool and kind != "ccav":
        raise FormatError("pool voters are only legal for ccav")

    try:
        election = Election(tuple(names), ballot_kind, votes)
        return AttackInstance(
            kind=kind, election=election, system=system, preferred=preferred,
            axis=axis, society=society, budget=budget, pool=pool,
            spoilers=spoilers, protected=protected,
            manipulator_weights=manipulator_weights,
            bribery_model=bribery_model, bribery_variant=bribery_variant,
        )
    except ValueError as exc:
        raise FormatError(str(exc))


def _emit_vote(prefix, vote, names, ballot_kind):
    opts = []
    if vote.weight != 1:
        opts.append(f"[w={vote.weight}]")
    if vote.flags:
        opts.append(f"[flags={','.join(sorted(vote.flags))}]")
    head = " ".join([prefix, *opts])
    if ballot_kind == APPROVAL:
        body = "{" + ", ".join(names[c] for c in sorted(vote.approved)) + "}"
    else:
        body = " > ".join(names[c] for c in vote.ranking)
    return f"{head}: {body}"


def emit_instance(instance: AttackInstance) -> str:
    """Render an instance in the canonical text format (round-trips with parse)."""
    names = instance.election.candidates
    lines = [
        f"ballots: {instance.election.ballot_kind}",
        f"candidates: {' '.join(names)}",
    ]
    if instance.axis is not None:
        lines.append(f"axis: {' '.join(names[c] for c in instance.axis)}")
    lines.append(f"attack: {instance.kind}")
    system = instance.system.name
    if instance.system.alphas is not None:
        system += " " + " ".join(str(a) for a in instance.system.alphas)
    lines.append(f"system: {system}")
    lines.append(f"preferred: {names[instance.preferred]}")
    lines.append(f"budget: {instance.budget}")
    society = instance.society.kind
    if instance.society.params:
        society += " " + " ".join(str(x) for x in instance.society.params)
    lines.append(f"society: {society}")
    if instance.kind == "ccac":
        lines.append(f"spoilers: {' '.join(names[c] for c in instance.spoilers)}")
    if instance.kind == "ccdc":
        lines.append(f"protected: {' '.join(names[c] for c in sorted(instance.protected))}")
    if instance.kind == "ccwm":
        lines.append(f"manipulators: {' '.join(str(w) for w in instance.manipulator_weights)}")
    if instance.kind == "bribery":
        lines.append(f"bribery-model: {instance.bribery_model}")
        lines.append(f"bribery-variant: {instance.bribery_variant}")
    for vote in instance.election.votes:
        lines.append(_emit_vote("voter", vote, names, instance.election.ballot_kind))
    for vote in instance.pool:
        lines.append(_emit_vote("pool", vote, names, instance.election.ballot_kind))
    return "\n".join(lines) + "\n"


def emit_outcome(instance: AttackInstance, outcome: AttackOutcome) -> str:
    """Render an outcome in the canonical format: YES/NO plus witness lines."""
    if not outcome.decision:
        return "NO\n"
    names = instance.election.candidates
    w = outcome.witness
    lines = ["YES"]
    for i, ranking in enumerate(w.manipulator_votes):
        lines.append(f"manipulator {i}: " + " > ".join(names[c] for c in ranking))
    lines.extend(f"add-voter {i}" for i in w.added_voters)
    lines.extend(f"delete-voter {i}" for i in w.deleted_voters)
    lines.extend(f"add-candidate {names[c]}" for c in w.added_candidates)
    lines.extend(f"delete-candidate {names[c]}" for c in w.deleted_candidates)
    for idx, new_set in w.bribes:
        body = "{" + ", ".join(names[c] for c in sorted(new_set)) + "}"
        lines.append(f"bribe {idx} -> {body}")
    return "\n".join(lines) + "\n"
