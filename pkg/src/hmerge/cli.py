"""Command-line front end: hmerge <subcommand>.

Profiles are given inline ("5 4 3 3 3 2"), as a file path, or as "-" for
stdin; both the plain text format and the JSON {"citations": [...]} form
are accepted. --format structured switches every subcommand to a JSON
document mirroring the library's certificate types.

Exit codes: 0 success, 1 failed check, 2 parse error, 3 infeasible or
oversized instance, 4 node budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from .achievability import (
    DEFAULT_ORACLE_CAP,
    OracleCapExceededError,
    _achieve,
    brute_force_max,
    iter_small_multisets,
    max_achievable,
)
from .covering import DEFAULT_NODE_BUDGET, NodeBudgetExceededError
from .improvement import improving_partition
from .model import (
    ParseError,
    Profile,
    group_sums,
    h_index,
    parse_profile_json,
    parse_profile_text,
    partition_to_lists,
    validate_partition,
)
from .reduction import (
    InfeasibleParametersError,
    InvalidParametersError,
    MalformedInstanceError,
    OutOfRangeInstanceError,
    format_3partition_instance,
    format_reduced_instance,
    gen_3partition_instance,
    gen_profile,
    parse_3partition_file,
    reduce_3partition,
    verify_reduction,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_BUDGET = 4


def _read_source(value: str) -> str:
    if value == "-":
        return sys.stdin.read()
    if os.path.exists(value):
        try:
            with open(value, "r", encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {value!r}: {exc}") from None
    return value


def _load_profile(value: str) -> Profile:
    text = _read_source(value)
    if text.lstrip().startswith("{"):
        return parse_profile_json(text)
    return parse_profile_text(text)


def _emit(args, human_lines: list[str], structured: dict) -> None:
    if args.format == "structured":
        print(json.dumps(structured, indent=2))
    else:
        for line in human_lines:
            print(line)


def _certificate_doc(profile: Profile, certificate) -> dict:
    return {
        "k": certificate.k,
        "partition": partition_to_lists(certificate.partition),
        "witness_groups": sorted(certificate.witness_group_ids),
        "group_sums": list(group_sums(profile, certificate.partition)),
    }


def cmd_hindex(args) -> int:
    profile = _load_profile(args.input)
    _emit(args, [str(h_index(profile))], {"h_index": h_index(profile)})
    return EXIT_OK


def cmd_improve(args) -> int:
    profile = _load_profile(args.input)
    h = h_index(profile)
    witness = improving_partition(profile)
    if witness is None:
        _emit(args, ["not improvable"], {"improvable": False, "h_index": h})
        return EXIT_OK
    groups = partition_to_lists(witness.partition)
    sums = list(group_sums(profile, witness.partition))
    _emit(
        args,
        [
            f"improvable: h-index {h} -> {witness.achieved}",
            f"partition (item ids): {groups}",
            f"group sums: {sums}",
        ],
        {
            "improvable": True,
            "h_index": h,
            "achieved": witness.achieved,
            "partition": groups,
            "group_sums": sums,
        },
    )
    return EXIT_OK


def cmd_achieve(args) -> int:
    if args.k < 0:
        print("error: --k must be >= 0", file=sys.stderr)
        return EXIT_PARSE
    profile = _load_profile(args.input)
    start = time.perf_counter()
    certificate, nodes = _achieve(profile, args.k, args.node_budget)
    elapsed = time.perf_counter() - start
    if certificate is None:
        _emit(
            args,
            ["NO", f"nodes explored: {nodes}, wall time: {elapsed:.3f}s"],
            {"achievable": False, "k": args.k, "nodes_explored": nodes, "wall_time_s": elapsed},
        )
        return EXIT_OK
    doc = _certificate_doc(profile, certificate)
    doc.update({"achievable": True, "nodes_explored": nodes, "wall_time_s": elapsed})
    _emit(
        args,
        [
            "YES",
            f"partition (item ids): {doc['partition']}",
            f"witness groups: {doc['witness_groups']}",
            f"group sums: {doc['group_sums']}",
            f"nodes explored: {nodes}, wall time: {elapsed:.3f}s",
        ],
        doc,
    )
    return EXIT_OK


def cmd_maximize(args) -> int:
    profile = _load_profile(args.input)
    start = time.perf_counter()
    result = max_achievable(profile, node_budget=args.node_budget)
    elapsed = time.perf_counter() - start
    doc = _certificate_doc(profile, result.certificate)
    doc.update({"value": result.value, "nodes_explored": result.nodes_explored, "wall_time_s": elapsed})
    _emit(
        args,
        [
            f"max achievable h-index: {result.value}",
            f"partition (item ids): {doc['partition']}",
            f"witness groups: {doc['witness_groups']}",
            f"group sums: {doc['group_sums']}",
            f"nodes explored: {result.nodes_explored}, wall time: {elapsed:.3f}s",
        ],
        doc,
    )
    return EXIT_OK


def cmd_reduce3p(args) -> int:
    instance = parse_3partition_file(_read_source(args.instance))
    reduced = reduce_3partition(instance)
    text = format_reduced_instance(reduced)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    structured = {
        "citations": list(reduced.profile.citations),
        "k": reduced.k,
        "shifted": list(reduced.shifted),
        "padding_count": reduced.padding_count,
        "in_range": instance.in_range,
    }
    if args.output:
        _emit(args, [f"wrote reduced instance to {args.output} (k={reduced.k})"], structured)
    else:
        _emit(args, [text.rstrip("\n")], structured)
    return EXIT_OK


def cmd_verify3p(args) -> int:
    instance = parse_3partition_file(_read_source(args.instance))
    report = verify_reduction(instance, oracle_cap=args.oracle_cap, node_budget=args.node_budget)
    answer = "YES" if report.yes_3partition else "NO"
    lines = [
        f"3-partition: {answer}",
        f"max achievable on reduced profile: {report.max_result.value} (target k={report.reduced.k})",
        f"agreement: {'OK' if report.agree else 'MISMATCH'}",
    ]
    structured = {
        "three_partition": report.yes_3partition,
        "max_value": report.max_result.value,
        "k": report.reduced.k,
        "agree": report.agree,
    }
    if report.witness_blocks is not None:
        blocks_by_value = [[instance.numbers[i] for i in block] for block in report.witness_blocks]
        lines.insert(1, f"3-partition blocks (values): {blocks_by_value}")
        structured["witness_blocks"] = [list(block) for block in report.witness_blocks]
        structured["certificate"] = _certificate_doc(report.reduced.profile, report.constructed_certificate)
    _emit(args, lines, structured)
    return EXIT_OK if report.agree else EXIT_CHECK_FAILED


def cmd_oracle_check(args) -> int:
    rng = random.Random(args.seed)
    if args.count > 0:
        corpus = []
        for _ in range(args.count):
            size = rng.randint(0, args.max_size)
            corpus.append(tuple(rng.randint(1, args.max_value) for _ in range(size)))
    else:
        corpus = list(iter_small_multisets(args.max_size, args.max_value))

    checked = 0
    mismatches = []
    for counts in corpus:
        profile = Profile.from_citations(counts)
        oracle = brute_force_max(profile, oracle_cap=args.oracle_cap)
        result = max_achievable(profile, node_budget=args.node_budget)
        h = h_index(profile)
        problems = []
        if result.value != oracle.value:
            problems.append(f"max {result.value} != oracle {oracle.value}")
        improvable = improving_partition(profile)
        if (improvable is not None) != (oracle.value > h):
            problems.append(f"improvability {(improvable is not None)} != oracle {(oracle.value > h)}")
        validate_partition(profile, result.certificate.partition)
        sums = group_sums(profile, result.certificate.partition)
        if any(sums[g] < result.value for g in result.certificate.witness_group_ids):
            problems.append("witness group below threshold")
        checked += 1
        if problems:
            mismatches.append({"citations": list(counts), "problems": problems})

    passed = not mismatches
    mode = f"randomized count={args.count} seed={args.seed}" if args.count > 0 else "exhaustive"
    lines = [
        f"oracle check ({mode}, size <= {args.max_size}, values <= {args.max_value}): "
        f"{checked} instances, {len(mismatches)} disagreements -> {'PASS' if passed else 'FAIL'}"
    ]
    for bad in mismatches[:10]:
        lines.append(f"  disagreement on {bad['citations']}: {'; '.join(bad['problems'])}")
    _emit(args, lines, {
        "mode": mode,
        "checked": checked,
        "disagreements": mismatches,
        "pass": passed,
    })
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def cmd_gen_profile(args) -> int:
    profile = gen_profile(args.n, args.dist, args.seed)
    text = " ".join(str(c) for c in profile.citations)
    _emit(args, [text], {"citations": list(profile.citations)})
    return EXIT_OK


def cmd_gen_3p(args) -> int:
    instance = gen_3partition_instance(args.m, args.b, args.seed)
    _emit(
        args,
        [format_3partition_instance(instance).rstrip("\n")],
        {"m": instance.m, "b": instance.b, "numbers": list(instance.numbers), "in_range": instance.in_range},
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("human", "structured"), default="human",
                        help="output style; structured is stable JSON, human is for reading")
    shared.add_argument("--seed", type=int, default=0, help="seed for randomized commands (default 0)")
    shared.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET,
                        help="max search states before giving up with an error")
    shared.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP,
                        help="max instance size for exhaustive enumeration")

    parser = argparse.ArgumentParser(prog="hmerge", description="h-index merge manipulation toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hindex", parents=[shared], help="h-index of a profile")
    p.add_argument("input", help="profile: inline counts, file path, or - for stdin")
    p.set_defaults(func=cmd_hindex)

    p = sub.add_parser("improve", parents=[shared], help="find a merge that beats the h-index, if any")
    p.add_argument("input")
    p.set_defaults(func=cmd_improve)

    p = sub.add_parser("achieve", parents=[shared], help="decide whether value k is reachable by merging")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True, help="target value")
    p.set_defaults(func=cmd_achieve)

    p = sub.add_parser("maximize", parents=[shared], help="exact maximum value over all merges")
    p.add_argument("input")
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("reduce3p", parents=[shared], help="map a 3-partition instance file to a profile and k")
    p.add_argument("instance", help="instance file: 'm b' line then 3m numbers")
    p.add_argument("--output", help="write the reduced instance here instead of stdout")
    p.set_defaults(func=cmd_reduce3p)

    p = sub.add_parser("verify3p", parents=[shared],
                       help="solve both sides of the reduction and report agreement")
    p.add_argument("instance")
    p.set_defaults(func=cmd_verify3p)

    p = sub.add_parser("oracle-check", parents=[shared],
                       help="cross-check the solver against brute force on small profiles")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--max-value", type=int, default=6)
    p.add_argument("--count", type=int, default=0,
                   help="number of random profiles; 0 checks every multiset up to the caps")
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("gen", parents=[shared], help="generate test inputs")
    gensub = p.add_subparsers(dest="kind", required=True)
    gp = gensub.add_parser("profile", parents=[shared], help="random citation profile")
    gp.add_argument("-n", type=int, required=True, help="number of items")
    gp.add_argument("--dist", default="uniform:1:100", help="uniform:LO:HI or zipf:S:MAX")
    gp.set_defaults(func=cmd_gen_profile)
    g3 = gensub.add_parser("3p", parents=[shared], help="random in-range 3-partition instance")
    g3.add_argument("-m", type=int, required=True)
    g3.add_argument("-b", type=int, required=True)
    g3.set_defaults(func=cmd_gen_3p)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (MalformedInstanceError, OutOfRangeInstanceError, InfeasibleParametersError,
            InvalidParametersError, OracleCapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except NodeBudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
