"""Command-line interface.

Subcommands::

    count <n> [--min-part M] [--ratio-t T]    partition counts
    generate <n> [--alg 1|2|3] [--limit K] [--descending]
    verify [--max-n N]                        self-verification battery
    tree <n> --kind partition|binary [--out PATH]
    ratios [--max-n N] [--out PATH]           CSV n,r1,r2
    bench --n 20,30,40 [--reps R] [--out PATH]

Exit codes: 0 success, 1 verification failure, 2 usage error.  All output
is plain ASCII text or CSV.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext

from .analysis import ratio_table, verify_v2_counts, verify_v3_counts, write_ratio_csv
from .bench import bench_table, write_bench_csv
from .counting import CountContext
from .errors import AscpartError
from .generate import ALGORITHMS
from .oracle import ORACLE_CAP, brute_compositions
from .ptree import MATERIALIZE_CAP, build_partition_tree, build_strict_tree, to_dot


class _LimitReached(Exception):
    pass


def _open_out(path):
    return open(path, "w", encoding="ascii") if path else nullcontext(sys.stdout)


def _cmd_count(args):
    ctx = CountContext()
    if args.ratio_t is not None:
        value = ctx.ratio_restricted_count(args.n, args.min_part, args.ratio_t)
    elif args.min_part != 1:
        value = ctx.restricted_count(args.n, args.min_part)
    else:
        value = ctx.partition_count(args.n)
    print(value)
    return 0


def _cmd_generate(args):
    out = sys.stdout
    limit = args.limit
    emitted = 0

    if args.descending:
        def consumer(a, length):
            nonlocal emitted
            out.write(" ".join(map(str, a[length:0:-1])) + "\n")
            emitted += 1
            if limit is not None and emitted >= limit:
                raise _LimitReached
    else:
        def consumer(a, length):
            nonlocal emitted
            out.write(" ".join(map(str, a[1:length + 1])) + "\n")
            emitted += 1
            if limit is not None and emitted >= limit:
                raise _LimitReached

    try:
        ALGORITHMS[args.alg](args.n, consumer)
    except _LimitReached:
        pass
    return 0


def _cmd_tree(args):
    build = build_partition_tree if args.kind == "partition" else build_strict_tree
    text = to_dot(build(args.n))
    with _open_out(args.out) as fh:
        fh.write(text)
    return 0


def _cmd_ratios(args):
    scan = ratio_table(args.max_n, CountContext())
    with _open_out(args.out) as fh:
        write_ratio_csv(scan, fh)
    return 0


def _cmd_bench(args):
    rows = bench_table(args.n, args.reps)
    with _open_out(args.out) as fh:
        write_bench_csv(rows, fh)
    return 0


def _generation_mismatch(n):
    """First (alg, index) where a generator diverges from the brute oracle."""
    expected = brute_compositions(n)
    for alg, fn in sorted(ALGORITHMS.items()):
        seen = 0

        def consumer(a, length, _n=n, _alg=alg):
            nonlocal seen
            if tuple(a[1:length + 1]) != expected[seen]:
                raise _Mismatch(f"alg {_alg}, n={_n}, composition #{seen}")
            seen += 1

        fn(n, consumer)
        if seen != len(expected):
            return f"alg {alg}, n={n}: {seen} compositions, expected {len(expected)}"
    return None


class _Mismatch(Exception):
    pass


def _cmd_verify(args):
    max_n = args.max_n
    ctx = CountContext()
    failures = 0

    def report(name, ok, detail=""):
        nonlocal failures
        line = f"{'PASS' if ok else 'FAIL'} {name}"
        if detail:
            line += f": {detail}"
        print(line)
        if not ok:
            failures += 1

    # Worked examples with known exact values.
    examples = [
        (ctx.partition_count(5), 7, "p(5)"),
        (ctx.ratio_restricted_count(15, 3, 2), 7, "double-ratio(15, 3)"),
        (ctx.ratio_restricted_count(15, 3, 3), 3, "triple-ratio(15, 3)"),
        (ctx.ratio_count(5, 2), 4, "double-ratio(5)"),
        (ctx.ratio_count(5, 3), 3, "triple-ratio(5)"),
    ]
    bad = [f"{name}={got}, want {want}" for got, want, name in examples if got != want]
    report("worked examples", not bad, "; ".join(bad))

    # Generators against the brute-force oracle.
    gen_max = min(max_n, ORACLE_CAP, 45)
    detail = None
    try:
        for n in range(1, gen_max + 1):
            detail = _generation_mismatch(n)
            if detail:
                break
    except _Mismatch as exc:
        detail = str(exc)
    report(f"generation vs brute force (n <= {gen_max})", detail is None, detail or "")

    # Counting paths agree wherever more than one is defined.
    cross_max = min(max_n, 60)
    bad = []
    for n in range(1, cross_max + 1):
        for t in (1, 2, 3, 4):
            q = n // (t + 1)
            for m in range(1, q + 1):
                want = ctx.ratio_restricted_count(n, m, t)
                if ctx.ratio_count_via_sum(n, m, t) != want:
                    bad.append(f"sum path at ({n},{m},{t})")
                if t > 1 and ctx.ratio_count_via_reduction(n, m, t) != want:
                    bad.append(f"reduction path at ({n},{m},{t})")
        if ctx.p2_closed(n) != ctx.ratio_count(n, 2):
            bad.append(f"closed form t=2 at n={n}")
        if ctx.p3_closed(n) != ctx.ratio_count(n, 3):
            bad.append(f"closed form t=3 at n={n}")
    report(f"counting cross-paths (n <= {cross_max})", not bad, "; ".join(bad[:3]))

    # Instrumented generators match the predicted operation counts.
    bad = []
    for n in range(2, max_n + 1):
        for check in (verify_v2_counts(n, ctx), verify_v3_counts(n, ctx)):
            if not check.passed:
                bad.append(f"{check.algorithm} at n={n}: "
                           f"assignments {check.actual_assignments} vs "
                           f"{check.expected_assignments}, bool evals "
                           f"{check.actual_bool_evals} vs {check.expected_bool_evals}")
    report(f"instrumented operation counts (2 <= n <= {max_n})", not bad, "; ".join(bad[:3]))

    # Tree node/leaf counts.
    tree_max = min(max_n, MATERIALIZE_CAP, 25)
    bad = []
    for n in range(1, tree_max + 1):
        p = ctx.partition_count(n)
        pt = build_partition_tree(n)
        bt = build_strict_tree(n)
        if (pt.node_count, pt.leaf_count) != (2 * p, p):
            bad.append(f"partition tree of {n}")
        if (bt.node_count, bt.leaf_count) != (2 * p - 1, p):
            bad.append(f"binary tree of {n}")
    report(f"tree identities (n <= {tree_max})", not bad, "; ".join(bad[:3]))

    # Partition inequalities up to 1000.
    ineq = ctx.check_inequalities(1000)
    ok = ineq.ok and ineq.growth_equalities == [1, 2, 3, 4, 5, 6]
    report("inequalities (n <= 1000)", ok,
           "" if ok else f"violations {ineq.growth_violations[:3]} "
                         f"{ineq.dominance_violations[:3]}, "
                         f"equalities {ineq.growth_equalities[:8]}")

    print(f"{'OK' if failures == 0 else 'FAILED'}: "
          f"{6 - failures} of 6 check groups passed")
    return 0 if failures == 0 else 1


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _int_list(text):
    try:
        values = [int(part) for part in text.split(",") if part != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from exc
    if any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("all n must be >= 1")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ascpart",
        description="Integer partitions as ascending compositions: "
                    "counting, generation, verification, benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print a partition count")
    p.add_argument("n", type=_nonnegative)
    p.add_argument("--min-part", type=_positive, default=1, metavar="M")
    p.add_argument("--ratio-t", type=_positive, default=None, metavar="T")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("generate", help="stream ascending compositions, one per line")
    p.add_argument("n", type=_positive)
    p.add_argument("--alg", type=int, choices=sorted(ALGORITHMS), default=3)
    p.add_argument("--limit", type=_positive, default=None, metavar="K")
    p.add_argument("--descending", action="store_true",
                   help="print each composition with parts in descending order")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="run the self-verification battery")
    p.add_argument("--max-n", type=int, default=60)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("tree", help="emit a tree as DOT")
    p.add_argument("n", type=_positive)
    p.add_argument("--kind", choices=("partition", "binary"), required=True)
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("ratios", help="CSV of theoretical cost ratios")
    p.add_argument("--max-n", type=int, default=1500)
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=_cmd_ratios)

    p = sub.add_parser("bench", help="time the generators and emit CSV")
    p.add_argument("--n", type=_int_list, required=True, metavar="N1,N2,...")
    p.add_argument("--reps", type=_positive, default=10)
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AscpartError as exc:
        parser.error(str(exc))  # exits 2
        return 2  # unreachable; keeps type checkers content


if __name__ == "__main__":
    sys.exit(main())
