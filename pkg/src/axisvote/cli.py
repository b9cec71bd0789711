"""Command-line front end: solve, oracle, check, reduce, verify, bench."""

from __future__ import annotations

import argparse
import csv
import sys
import time
from pathlib import Path
from random import Random

from axisvote import bribery, control, gen, manipulation, oracle, reductions
from axisvote.model import (
    AttackOutcome,
    FormatError,
    emit_instance,
    emit_outcome,
    parse_instance,
    replay_witness,
)
from axisvote.oracle import CapExceeded, OracleCaps
from axisvote.structure import classify_vote

EXIT_YES, EXIT_NO, EXIT_ERROR, EXIT_CAP = 0, 1, 2, 3


def solve_instance(instance, caps: OracleCaps, enum_cap: int) -> AttackOutcome:
    """Route an instance to its polynomial solver (falling back to the
    oracle only where the problem is provably hard)."""
    kind = instance.kind
    if kind == "ccwm":
        return manipulation.ccwm_dispatch(instance, caps).outcome
    if kind in ("ccav", "ccdv"):
        if instance.system.name == "approval":
            return control.maverick_control_approval(instance, enum_cap=enum_cap)
        if instance.system.name == "condorcet":
            return control.maverick_control_condorcet(instance, enum_cap=enum_cap)
        raise ValueError(f"no voter-control solver for system {instance.system.name!r}")
    if kind in ("ccac", "ccdc"):
        if instance.system.name != "plurality":
            raise ValueError(f"no candidate-control solver for system {instance.system.name!r}")
        society = instance.society
        if society.kind == "maverick":
            return control.kmaverick_control_plurality(instance)
        if society.kind == "single-caved":
            return control.singlecaved_control_plurality(instance)
        if society.kind == "sp":
            k = 1
        elif society.kind in ("dodgson", "perceptionflip"):
            k = society.params[0] + 1
        else:
            raise ValueError(f"no candidate-control solver for society {society.kind!r}")
        if kind == "ccac":
            return control.ccac_plurality_klocal(
                instance.registered, instance.spoilers, instance.election.votes,
                instance.axis, k, instance.preferred, instance.budget)
        return control.ccdc_plurality_klocal(
            instance.election.ids, instance.election.votes, instance.axis, k,
            instance.preferred, instance.budget, protected=instance.protected)
    if kind == "bribery":
        return bribery.maverick_bribery_approval(instance, enum_cap=enum_cap)
    raise ValueError(f"unknown attack kind {kind!r}")


def oracle_instance(instance, caps: OracleCaps) -> AttackOutcome:
    if instance.kind == "ccwm":
        return oracle.brute_ccwm(instance, caps)
    if instance.kind in ("ccav", "ccdv", "ccac", "ccdc"):
        return oracle.brute_control(instance, caps)
    if instance.kind == "bribery":
        return oracle.brute_bribery(instance, caps)
    raise ValueError(f"unknown attack kind {instance.kind!r}")


def _load_instance(path):
    return parse_instance(Path(path).read_text())


def _parse_caps(text) -> OracleCaps:
    parts = [int(x) for x in text.split(",")]
    if len(parts) != 4:
        raise ValueError("oracle caps expect candidates,voters,manipulators,subsets")
    return OracleCaps(*parts)


def _print_outcome(instance, outcome):
    sys.stdout.write(emit_outcome(instance, outcome))
    return EXIT_YES if outcome.decision else EXIT_NO


def cmd_solve(args) -> int:
    instance = _load_instance(args.file)
    outcome = solve_instance(instance, args.oracle_caps, args.enum_cap)
    return _print_outcome(instance, outcome)


def cmd_oracle(args) -> int:
    instance = _load_instance(args.file)
    outcome = oracle_instance(instance, args.oracle_caps)
    return _print_outcome(instance, outcome)


def cmd_check(args) -> int:
    instance = _load_instance(args.file)
    names = instance.election.candidates
    axis = instance.axis
    if axis is None:
        print("no axis: nothing to check")
        return EXIT_YES
    print("voter  weight  sp  sc  interval")
    for i, vote in enumerate(instance.election.votes):
        rep = classify_vote(vote, axis)

        def cell(v):
            return "-" if v is None else ("yes" if v else "no")

        print(f"{i:<6} {vote.weight:<7} {cell(rep.is_sp):<3} "
              f"{cell(rep.is_sc):<3} {cell(rep.is_approval_interval)}")
    return EXIT_YES


def _parse_partition_file(path) -> reductions.PartitionInstance:
    values = None
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("partition:"):
            raise FormatError(f"line {lineno}: expected a 'partition:' line")
        values = tuple(int(x) for x in line.split(":", 1)[1].split())
    if values is None:
        raise FormatError("no 'partition:' line found")
    return reductions.PartitionInstance(values)


def _parse_x3c_file(path) -> reductions.X3CInstance:
    base, sets = None, []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("x3c-base:"):
            base = int(line.split(":", 1)[1])
        elif line.startswith("set:"):
            elems = tuple(int(x) for x in line.split(":", 1)[1].split())
            sets.append(elems)
        else:
            raise FormatError(f"line {lineno}: expected 'x3c-base:' or 'set:'")
    if base is None:
        raise FormatError("no 'x3c-base:' line found")
    return reductions.X3CInstance(base, tuple(sets))


def _reduce_from_args(args):
    if args.source == "partition":
        src = _parse_partition_file(args.src)
        kwargs = {}
        if args.kind in ("scoring1mav", "singleCaved"):
            if args.alphas is None:
                raise ValueError(f"{args.kind} requires --alphas")
            kwargs["alphas"] = tuple(args.alphas)
        if args.kind == "vetoKmav":
            if args.m is None or args.k is None:
                raise ValueError("vetoKmav requires --m and --k")
            kwargs["m"], kwargs["k"] = args.m, args.k
        return src, reductions.partition_to_ccwm(args.kind, src, **kwargs)
    src = _parse_x3c_file(args.src)
    return src, reductions.x3c_to_control(args.kind, src)


def cmd_reduce(args) -> int:
    _, reduced = _reduce_from_args(args)
    text = emit_instance(reduced)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def cmd_verify(args) -> int:
    if args.source == "partition":
        src = _parse_partition_file(args.src)
    else:
        src = _parse_x3c_file(args.src)
    reduced = _load_instance(args.reduced)
    report = reductions.verify_reduction(src, reduced, caps=args.oracle_caps)
    yn = lambda b: "yes" if b else "no"
    print(f"agree: {yn(report.source_yes)}/{yn(report.reduced_yes)}"
          if report.agree else
          f"DISAGREE: source={yn(report.source_yes)} reduced={yn(report.reduced_yes)}")
    print(f"votes admissible: {yn(report.votes_admissible)}")
    return EXIT_YES if report.agree and report.votes_admissible else EXIT_NO


def _bench_cases(suite, rng):
    from axisvote.model import Society, System
    cases = []
    if suite in ("ccwm", "all"):
        for i in range(20):
            cases.append((f"ccwm-veto-maverick-{i}",
                          gen.gen_ccwm(rng, System("veto"), Society("maverick", (1,)),
                                       4, 4, 2)))
            cases.append((f"ccwm-scoring-sc-{i}",
                          gen.gen_ccwm(rng, System("scoring", (3, 1, 0)),
                                       Society("single-caved"), 3, 3, 2)))
    if suite in ("control", "all"):
        for i in range(20):
            cases.append((f"ccav-approval-{i}",
                          gen.gen_approval_control(rng, "ccav", 4, 4, 4, 2, 2)))
            cases.append((f"ccac-klocal-{i}",
                          gen.gen_klocal_control(rng, "ccac", 5, 5, 2, "sp")))
    if suite in ("bribery", "all"):
        for i in range(20):
            cases.append((f"bribery-plain-{i}",
                          gen.gen_bribery(rng, "standard", "plain", 4, 4, 2, 2)))
    if not cases:
        raise ValueError(f"unknown bench suite {suite!r}")
    return cases


def cmd_bench(args) -> int:
    rng = Random(args.seed)
    cases = _bench_cases(args.suite, rng)
    rows = []
    failures = 0
    for name, instance in cases:
        t0 = time.perf_counter()
        solved = solve_instance(instance, args.oracle_caps, args.enum_cap)
        t_solve = time.perf_counter() - t0
        t0 = time.perf_counter()
        truth = oracle_instance(instance, args.oracle_caps)
        t_oracle = time.perf_counter() - t0
        ok = solved.decision == truth.decision
        if ok and solved.decision:
            ok = instance.preferred in replay_witness(instance, solved.witness)
        if not ok:
            failures += 1
        rows.append((name, solved.decision, t_solve, t_oracle, ok))
        if not args.quiet_timings:
            print(f"{name}: {'pass' if ok else 'FAIL'} "
                  f"(solve {t_solve * 1000:.2f} ms, oracle {t_oracle * 1000:.2f} ms)")
        else:
            print(f"{name}: {'pass' if ok else 'FAIL'}")
    print(f"{len(cases) - failures}/{len(cases)} passed")
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        with open(out / "timings.csv", "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["case", "decision", "solve_s", "oracle_s", "pass"])
            for name, decision, ts, to, ok in rows:
                writer.writerow([name, "yes" if decision else "no",
                                 f"{ts:.6f}", f"{to:.6f}", "pass" if ok else "fail"])
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
        fig, ax = plt.subplots(figsize=(9, 4))
        xs = range(len(rows))
        ax.bar([x - 0.2 for x in xs], [r[2] * 1000 for r in rows], width=0.4,
               label="solver")
        ax.bar([x + 0.2 for x in xs], [r[3] * 1000 for r in rows], width=0.4,
               label="oracle")
        ax.set_xticks(list(xs))
        ax.set_xticklabels([r[0] for r in rows], rotation=90, fontsize=5)
        ax.set_ylabel("time (ms)")
        ax.set_title(f"suite {args.suite} (seed {args.seed})")
        ax.legend()
        fig.tight_layout()
        fig.savefig(out / "timings.png", dpi=150)
        plt.close(fig)
    return EXIT_YES if failures == 0 else EXIT_NO


def build_parser():
    parser = argparse.ArgumentParser(
        prog="axisvote",
        description="Solvers for electoral manipulation, control, and bribery "
                    "over (nearly) single-peaked electorates.")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for all randomized suites (default 0)")
    parser.add_argument("--enum-cap", type=int, default=2 ** 20,
                        help="cap on maverick subset enumeration")
    parser.add_argument("--oracle-caps", type=_parse_caps,
                        default=OracleCaps(),
                        help="candidates,voters,manipulators,subsets")
    parser.add_argument("--threads", type=int, default=1,
                        help="solver parallelism (results are deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance with the polynomial solvers")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="solve an instance by exhaustive search")
    p.add_argument("file")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="report per-vote structure against the axis")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", help="build a hardness gadget from a source instance")
    p.add_argument("source", choices=("partition", "x3c"))
    p.add_argument("--kind", required=True,
                   choices=reductions.PARTITION_KINDS + reductions.X3C_KINDS)
    p.add_argument("--alphas", type=int, nargs=3)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("src")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="round-trip a source against a reduced instance")
    p.add_argument("source", choices=("partition", "x3c"))
    p.add_argument("src")
    p.add_argument("reduced")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a seeded solver-vs-oracle suite")
    p.add_argument("--suite", default="all",
                   choices=("ccwm", "control", "bribery", "all"))
    p.add_argument("--out-dir", help="write timings.csv and timings.png here")
    p.add_argument("--quiet-timings", action="store_true",
                   help="suppress per-case timing output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, control.EnumerationCapExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
