"""Command-line driver.

Exit codes: 0 success, 2 usage error, 3 search found nothing,
4 verification failure.  Result records and CSV go to stdout; progress
and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import secrets
import statistics
import sys
from collections import defaultdict
from typing import Optional, Sequence

from .codes import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    ClassificationError,
    NotSelfDual,
    analyze,
    build_code,
    classify_counts,
    extremal_bound,
)
from .gf2 import BitWord
from .groups import FiniteGroup, GroupRingElement, parse_group_id
from .registry import (
    ParseError,
    RecordRejected,
    ResultRecord,
    ResultsLog,
    load_registry,
)
from .search import Find, GaParams, SearchOutcome, ga_run, linear_search

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_FINDS = 3
EXIT_VERIFY = 4

BENCH_COLUMNS = [
    "search_space_bits",
    "group_id",
    "method",
    "codes_found",
    "evaluations",
    "first_find_evaluation",
    "wall_time_seconds",
    "seed",
    "capped",
]

# search spaces of 2^16, 2^24 and 2^26 first rows
BENCH_GROUPS = ("Cn:16", "D:16", "Cn:24", "D:24", "Cn:26", "D:26")

log = logging.getLogger("selfdual")


class UsageError(Exception):
    pass


def _group(text: str) -> FiniteGroup:
    try:
        return parse_group_id(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _seed(args) -> int:
    if args.seed is None:
        args.seed = secrets.randbits(63)
        print(f"seed={args.seed}", file=sys.stderr)
    return args.seed


def _ga_params(args, target: int, seed: int) -> GaParams:
    try:
        return GaParams(
            population_size=args.pop,
            crossover_kind=args.crossover,
            crossover_rate=args.crossover_rate,
            mutation_p=args.mutation_p,
            elite_count=args.elite,
            max_generations=args.max_gen,
            target_distance=target,
            rng_seed=seed,
            stop_after=args.stop_after or None,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _default_target(group: FiniteGroup) -> int:
    return extremal_bound(2 * group.order, "I")


def _v_from_args(group: FiniteGroup, args) -> BitWord:
    n = group.order
    try:
        if args.hex is not None:
            return BitWord.from_hex(args.hex, n)
        word = BitWord.from_str("".join(args.bits))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if word.length != n:
        raise UsageError(f"bit blocks give length {word.length}, group {group.id} has order {n}")
    return word


def cmd_search(args) -> int:
    group = _group(args.group)
    target = args.target_d if args.target_d is not None else _default_target(group)
    results = ResultsLog(args.results) if args.results else None
    registry = load_registry(args.registry)
    seed = _seed(args) if args.alg == "ga" else None

    def emit(f: Find) -> None:
        rec = ResultRecord(group.id, f.genes, f.d, f.cls, seed=seed, evaluations=f.evaluation)
        print(rec.to_line(), flush=True)
        if f.cls.form is not None:
            log.info("%s: %s", f.cls.describe(), registry.is_new(f.cls, 2 * group.order).value)
        if results is not None:
            results.append_result(rec, threads=args.threads)

    if args.alg == "ga":
        out = ga_run(group, _ga_params(args, target, seed), threads=args.threads, on_find=emit)
    else:
        n = group.order
        try:
            start = BitWord.from_hex(args.start, n) if args.start else None
            end = BitWord.from_hex(args.end, n) if args.end else None
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        out = linear_search(group, start, end, target=target, threads=args.threads,
                            budget=args.budget, on_find=emit)
    log.info("%s on %s: %d finds, %d evaluations, %.2fs",
             out.method, group.id, len(out.found), out.evaluations, out.wall_time)
    return EXIT_OK if out.found else EXIT_NO_FINDS


def cmd_verify(args) -> int:
    group = _group(args.group)
    v = _v_from_args(group, args)
    registry = load_registry(args.registry)
    print(f"group: {group.id} n={group.order} v={v.to_hex()}")
    try:
        code = build_code(GroupRingElement(group, v))
    except NotSelfDual as exc:
        print(f"self-dual: no (violations={exc.violations})")
        return EXIT_VERIFY
    print("self-dual: yes")
    try:
        res = analyze(code, threads=args.threads, budget=args.budget)
    except (ClassificationError, BudgetExceeded) as exc:
        print(f"error: {exc}")
        return EXIT_VERIFY
    print(f"type: {code.code_type}")
    print(f"d={res.distance.d}")
    if res.spectrum is not None:
        counts = " ".join(f"A{w}={c}" for w, c in sorted(res.spectrum.counts.items()))
        print(f"spectrum: {counts} (cutoff {res.spectrum.cutoff})")
    cls = res.cls
    print(f"class: {cls.describe()}")
    ok = True
    if cls.form is not None:
        verdict = registry.is_new(cls, code.length, args.aut_order)
        print(f"registry: {verdict.value}")
    if args.expect_d is not None and res.distance.d != args.expect_d:
        print(f"expected d={args.expect_d}")
        ok = False
    print(f"summary: self-dual, d={res.distance.d}, {cls.describe()}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_classify(args) -> int:
    if args.group:
        group = _group(args.group)
        v = _v_from_args(group, args)
        try:
            res = analyze(build_code(GroupRingElement(group, v)), threads=args.threads)
        except (NotSelfDual, ClassificationError, BudgetExceeded) as exc:
            print(f"error: {exc}")
            return EXIT_VERIFY
        print(res.cls.describe())
        return EXIT_OK
    if args.length is None or args.A12 is None:
        raise UsageError("classify needs --group/--hex or --length with --A12")
    counts = {0: 1, 12: args.A12}
    if args.A14 is not None:
        counts[14] = args.A14
    if args.A16 is not None:
        counts[16] = args.A16
    try:
        cls = classify_counts(args.length, args.type, counts, d=12)
    except ClassificationError as exc:
        print(f"error: {exc}")
        return EXIT_VERIFY
    print(cls.describe())
    return EXIT_OK


def cmd_registry(args) -> int:
    try:
        reg = load_registry(args.registry)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.action == "list":
        sys.stdout.write(reg.serialize())
        return EXIT_OK
    if args.action == "stats":
        for (length, form, gamma), count in sorted(reg.bucket_counts().items(),
                                                   key=lambda kv: (kv[0][0], kv[0][1], kv[0][2] or -1)):
            print(f"{length} {form} {'-' if gamma is None else gamma} {count}")
        print(f"total {len(reg)}")
        return EXIT_OK
    if args.form is None or args.value is None or args.length is None:
        raise UsageError("registry query needs --length, --form and --value")
    from .codes import EnumeratorClass

    if args.form == "TypeII72":
        cls = EnumeratorClass("II", args.form, alpha=args.value)
    else:
        cls = EnumeratorClass("I", args.form, beta=args.value, gamma=args.gamma)
    print(reg.is_new(cls, args.length, args.aut_order).value)
    return EXIT_OK


def _bench_cell(group: FiniteGroup, method: str, seed: Optional[int], args) -> SearchOutcome:
    target = args.target_d if args.target_d is not None else _default_target(group)
    if method == "ls":
        return linear_search(group, target=target, threads=args.threads, budget=args.budget,
                             classify=False)
    return ga_run(group, _ga_params(args, target, seed), threads=args.threads, classify=False)


def cmd_bench(args) -> int:
    groups = [_group(g) for g in args.groups]
    seeds = args.seeds if args.seeds else ([_seed(args)] if "ga" in args.methods else [])
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    summary: dict[int, dict[str, list[SearchOutcome]]] = defaultdict(lambda: defaultdict(list))
    for group in groups:
        for method in args.methods:
            for seed in (seeds if method == "ga" else [None]):
                out = _bench_cell(group, method, seed, args)
                bits = group.order
                summary[bits][method].append(out)
                writer.writerow([
                    bits, group.id, method.upper(), len(out.found), out.evaluations,
                    "" if out.first_find_evaluation is None else out.first_find_evaluation,
                    f"{out.wall_time:.3f}", "" if seed is None else seed, int(out.capped),
                ])
                sys.stdout.flush()
    for bits in sorted(summary):
        parts = [f"# summary search_space_bits={bits}"]
        for method, outs in sorted(summary[bits].items()):
            firsts = [o.first_find_evaluation for o in outs if o.first_find_evaluation is not None]
            med = statistics.median(firsts) if firsts else None
            parts.append(
                f"{method.upper()}: runs={len(outs)} with_finds={len(firsts)} "
                f"median_first_find={med} total_evaluations={sum(o.evaluations for o in outs)}"
            )
        print(" | ".join(parts))
    return EXIT_OK


def _add_ga_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pop", type=int, default=100, help="population size")
    p.add_argument("--mutation-p", type=float, default=0.1)
    p.add_argument("--crossover", choices=("single", "double", "uniform"), default="single")
    p.add_argument("--crossover-rate", type=float, default=0.9)
    p.add_argument("--elite", type=int, default=2)
    p.add_argument("--max-gen", type=int, default=1000)
    p.add_argument("--stop-after", type=int, default=1,
                   help="stop after this many distinct finds (0: run all generations)")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--registry", default=None, help="known-parameter dataset (default: shipped)")
    p.add_argument("-v", "--verbose", action="store_true")


def _add_row(p: argparse.ArgumentParser) -> None:
    p.add_argument("--hex", default=None, help="v as hex, a1 most significant")
    p.add_argument("--bits", nargs="+", default=[], metavar="BLOCK",
                   help="v as 0/1 blocks (r_A r_B ...), concatenated in order")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selfdual", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", help="run GA or linear search over a group")
    p.add_argument("--group", required=True)
    p.add_argument("--alg", choices=("ga", "ls"), default="ga")
    p.add_argument("--target-d", type=int, default=None)
    p.add_argument("--budget", type=int, default=None, help="cap on LS candidates")
    p.add_argument("--start", default=None, help="LS first candidate (hex)")
    p.add_argument("--end", default=None, help="LS last candidate (hex)")
    p.add_argument("--results", default=None, help="append finds to this results file")
    _add_ga_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check a published or found row")
    p.add_argument("--group", required=True)
    _add_row(p)
    p.add_argument("--aut-order", type=int, default=None)
    p.add_argument("--expect-d", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="solve enumerator parameters from counts or a row")
    p.add_argument("--length", type=int)
    p.add_argument("--type", choices=("I", "II"), default="I")
    p.add_argument("--A12", type=int)
    p.add_argument("--A14", type=int)
    p.add_argument("--A16", type=int)
    p.add_argument("--group", default=None)
    _add_row(p)
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("registry", help="query the known-parameter dataset")
    p.add_argument("action", choices=("query", "list", "stats"))
    p.add_argument("--length", type=int)
    p.add_argument("--form", choices=("W68_1", "W68_2", "W72_1", "W72_2", "TypeII72"))
    p.add_argument("--gamma", type=int, default=None)
    p.add_argument("--value", "--beta", "--alpha", dest="value", type=int, default=None)
    p.add_argument("--aut-order", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_registry)

    p = sub.add_parser("bench", help="GA vs LS comparison as CSV")
    p.add_argument("--groups", nargs="+", default=list(BENCH_GROUPS))
    p.add_argument("--methods", nargs="+", choices=("ga", "ls"), default=["ga", "ls"])
    p.add_argument("--seeds", nargs="+", type=int, default=None)
    p.add_argument("--target-d", type=int, default=None)
    p.add_argument("--budget", type=int, default=None, help="cap on LS candidates")
    _add_ga_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if getattr(args, "hex", None) is None and hasattr(args, "bits") and not args.bits \
            and args.command == "verify":
        parser.error("verify needs --hex or --bits")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RecordRejected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head)
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
