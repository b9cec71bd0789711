"""Coalition-manipulation solvers and the complexity-aware dispatcher."""

from random import Random

import pytest

from axisvote import gen
from axisvote.manipulation import (
    UnsupportedCell,
    ccwm_dispatch,
    ccwm_singlecaved_scoring,
    ccwm_veto_never_vetoed,
)
from axisvote.model import Society, System
from axisvote.oracle import brute_ccwm

from conftest import assert_valid_witness


def test_dispatch_routes_veto_cells():
    rng = Random(0)
    for k in (1, 2):
        fast = gen.gen_ccwm(rng, System("veto"), Society("maverick", (k,)), k + 3, 3, 2)
        assert ccwm_dispatch(fast).route == "veto-never-vetoed"
        hard = gen.gen_ccwm(rng, System("veto"), Society("maverick", (k,)), k + 2, 3, 2)
        assert ccwm_dispatch(hard).route == "oracle(NP-hard case)"
    for society in (Society("swoon", (1, 0)), Society("dodgson", (1,))):
        assert ccwm_dispatch(
            gen.gen_ccwm(rng, System("veto"), society, 5, 3, 2)
        ).route == "veto-never-vetoed"
        assert ccwm_dispatch(
            gen.gen_ccwm(rng, System("veto"), society, 4, 3, 2)
        ).route == "oracle(NP-hard case)"


def test_dispatch_routes_scoring_cells():
    rng = Random(1)
    trivial = gen.gen_ccwm(rng, System("scoring", (1, 0, 0)), Society("single-caved"), 3, 3, 2)
    assert ccwm_dispatch(trivial).route == "trivial-top-spot"
    easy = gen.gen_ccwm(rng, System("scoring", (5, 2, 0)), Society("single-caved"), 3, 3, 2)
    assert ccwm_dispatch(easy).route == "single-caved-scoring"
    hard = gen.gen_ccwm(rng, System("scoring", (3, 2, 0)), Society("single-caved"), 3, 3, 2)
    assert ccwm_dispatch(hard).route == "oracle(NP-hard case)"
    mav = gen.gen_ccwm(rng, System("scoring", (3, 2, 0)), Society("maverick", (1,)), 3, 3, 2)
    assert ccwm_dispatch(mav).route == "oracle(NP-hard case)"


def test_dispatch_rejects_unclassified_cells():
    rng = Random(2)
    tiny = gen.gen_ccwm(rng, System("veto"), Society("maverick", (1,)), 2, 2, 1)
    with pytest.raises(UnsupportedCell):
        ccwm_dispatch(tiny)
    odd = gen.gen_ccwm(rng, System("scoring", (3, 2, 0)), Society("sp"), 3, 3, 1)
    with pytest.raises(UnsupportedCell):
        ccwm_dispatch(odd)
    ccav = gen.gen_approval_control(rng, "ccav", 4, 4, 3, 2, 2)
    with pytest.raises(ValueError):
        ccwm_dispatch(ccav)


def test_veto_never_vetoed_matches_brute():
    rng = Random(3)
    for _ in range(30):
        inst = gen.gen_ccwm(rng, System("veto"), Society("maverick", (1,)), 4, 4, 2)
        out = ccwm_veto_never_vetoed(inst)
        assert out.decision == brute_ccwm(inst).decision
        if out.decision:
            assert_valid_witness(inst, out)


def test_singlecaved_scoring_matches_brute():
    rng = Random(4)
    for _ in range(30):
        inst = gen.gen_ccwm(rng, System("scoring", (5, 2, 0)),
                            Society("single-caved"), 3, 3, 2)
        out = ccwm_singlecaved_scoring(inst)
        assert out.decision == brute_ccwm(inst).decision
        if out.decision:
            assert_valid_witness(inst, out)


def test_dispatch_agrees_with_brute_across_cells():
    rng = Random(5)
    for i in range(40):
        if i % 3 == 0:
            inst = gen.gen_ccwm(rng, System("veto"), Society("swoon", (1, 0)), 5, 4, 2)
        elif i % 3 == 1:
            inst = gen.gen_ccwm(rng, System("veto"), Society("dodgson", (1,)), 5, 4, 2)
        else:
            inst = gen.gen_ccwm(rng, System("scoring", (2, 0, 0)),
                                Society("single-caved"), 3, 3, 2)
        verdict = ccwm_dispatch(inst)
        assert verdict.outcome.decision == brute_ccwm(inst).decision
        if verdict.outcome.decision:
            assert_valid_witness(inst, verdict.outcome)
