"""Solvers for manipulation, control, and bribery of elections whose
electorates are single-peaked or nearly so with respect to a given axis.
"""

from axisvote.model import (
    ApprovalVote,
    AttackInstance,
    AttackOutcome,
    Election,
    LinearVote,
    Society,
    System,
    Witness,
    emit_instance,
    emit_outcome,
    evaluate_winners,
    parse_instance,
    replay_witness,
)

__all__ = [
    "ApprovalVote",
    "AttackInstance",
    "AttackOutcome",
    "Election",
    "LinearVote",
    "Society",
    "System",
    "Witness",
    "emit_instance",
    "emit_outcome",
    "evaluate_winners",
    "parse_instance",
    "replay_witness",
]
