"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 domain rejection (not a
caterpillar, labeling not antimagic), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bench, generator
from .errors import (
    InvariantViolation,
    LabelingError,
    NotACaterpillarError,
    OracleBudgetExceeded,
    OracleLimitError,
    ParseError,
)
from .invariants import all_violations
from .labeler import LabelingResult, label
from .oracle import DEFAULT_LIMIT, compare_with_algorithm
from .orientation import orient_and_label, oriented_sums, verify_oriented_sums
from .tree import Tree, parse_edge_list, serialize_edge_list
from .verifier import vertex_sums

EXIT_OK, EXIT_INPUT, EXIT_REJECTED, EXIT_INVARIANT = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def parse_labeled_edge_list(text: str) -> tuple[Tree, list[int]]:
    """Parse ``u v label`` lines, the format ``label --format tsv`` writes first.

    Parsing stops at the first blank line that follows an edge, so the sums
    section of a ``label`` output is ignored.
    """
    pairs: list[str] = []
    labels: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            if labels:
                break
            pairs.append("")
            continue
        if line.startswith("#"):
            pairs.append("")
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise ParseError(f"expected 'u v label', got {len(tokens)} fields", lineno)
        try:
            labels.append(int(tokens[2], 10))
        except ValueError:
            raise ParseError(f"label must be a base-10 integer: {tokens[2]!r}", lineno) from None
        pairs.append(f"{tokens[0]} {tokens[1]}")
    return parse_edge_list("\n".join(pairs)), labels


def format_labeling(t: Tree, labels: Sequence[int], sums: Sequence[int], fmt: str, extra: dict | None = None) -> str:
    if fmt == "tsv":
        out = [f"{u}\t{v}\t{x}" for (u, v), x in zip(t.edges, labels)]
        out.append("")
        out.extend(f"{v}\t{s}" for v, s in enumerate(sums))
        return "\n".join(out) + "\n"
    if fmt == "obj":
        obj = {
            "n": t.n,
            "m": t.m,
            "edges": [{"u": u, "v": v, "label": x} for (u, v), x in zip(t.edges, labels)],
            "sums": list(sums),
        }
        obj.update(extra or {})
        return json.dumps(obj, sort_keys=True, indent=1) + "\n"
    out = ["graph caterpillar {"]
    out.extend(f'  {v} [label="{v} ({s})"];' for v, s in enumerate(sums))
    out.extend(f'  {u} -- {v} [label="{x}"];' for (u, v), x in zip(t.edges, labels))
    out.append("}")
    return "\n".join(out) + "\n"


def _trace_lines(result: LabelingResult) -> str:
    tr = result.trace
    out = [f"# step 1: m={tr.m} p={tr.p} light={tr.light}", "# i\tlabel\tclass\tfired_k\tlight_count"]
    for i in range(1, tr.p + 1):
        cls = "E0" if tr.in_low_class(i) else "E1"
        out.append(f"{i}\t{tr.pathedge_labels[i]}\t{cls}\t{tr.fired[i] or '-'}\t{tr.light_count[i]}")
    return "\n".join(out) + "\n"


def _seed(args) -> int | None:
    return args.seed if args.step2 == "random" else None


def cmd_label(args) -> int:
    t = parse_edge_list(_read(args.input))
    result = label(t, _seed(args))
    sums = vertex_sums(t, result.labels).sums
    extra = {
        "p": result.spine.p,
        "spine": result.spine.path,
        "light": [result.spine.path[i] for i in result.classification.light],
        "heavy": [result.spine.path[i] for i in result.classification.heavy],
    }
    sys.stdout.write(format_labeling(t, result.labels, sums, args.format, extra))
    if args.trace:
        sys.stderr.write(_trace_lines(result))
    return EXIT_OK


def cmd_verify(args) -> int:
    t, labels = parse_labeled_edge_list(_read(args.input))
    try:
        report = vertex_sums(t, labels)
    except LabelingError as exc:
        print(f"not a bijection onto [1, {t.m}]: {exc}")
        return EXIT_REJECTED
    for v, s in enumerate(report.sums):
        print(f"{v}\t{s}")
    if report.distinct:
        print("antimagic: yes")
        return EXIT_OK
    for a, b, s in report.duplicates:
        print(f"duplicate: vertices {a} and {b} both sum to {s}")
    print("antimagic: no")
    return EXIT_REJECTED


def cmd_generate(args) -> int:
    t = generator.random_caterpillar(args.p, args.legs, args.seed)
    sys.stdout.write(serialize_edge_list(t))
    return EXIT_OK


def cmd_orient(args) -> int:
    t = parse_edge_list(_read(args.input))
    result = label(t, _seed(args))
    ol = orient_and_label(t, result.labels)
    sums = oriented_sums(ol)
    if not verify_oriented_sums(ol):
        raise InvariantViolation("oriented vertex sums collide")
    if args.format == "dot":
        out = ["digraph caterpillar {"]
        out.extend(f'  {v} [label="{v} ({s})"];' for v, s in enumerate(sums))
        out.extend(f'  {a} -> {b} [label="{x}"];' for (a, b), x in zip(ol.arcs, ol.labels))
        out.append("}")
        sys.stdout.write("\n".join(out) + "\n")
    elif args.format == "obj":
        obj = {
            "n": t.n,
            "arcs": [{"tail": a, "head": b, "label": x} for (a, b), x in zip(ol.arcs, ol.labels)],
            "oriented_sums": sums,
        }
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=1) + "\n")
    else:
        lines = [f"{a}\t{b}\t{x}" for (a, b), x in zip(ol.arcs, ol.labels)]
        lines.append("")
        lines.extend(f"{v}\t{s}" for v, s in enumerate(sums))
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    t = parse_edge_list(_read(args.input))
    cmp = compare_with_algorithm(t, args.oracle_limit)
    print("algorithm\t" + " ".join(map(str, cmp.algorithm)) + f"\t{'ok' if cmp.algorithm_ok else 'FAIL'}")
    found = " ".join(map(str, cmp.oracle)) if cmp.oracle is not None else "none"
    print(f"oracle\t{found}\t{'ok' if cmp.oracle_ok else 'FAIL'}")
    return EXIT_OK if cmp.agree else EXIT_INVARIANT


def selftest_instance(t: Tree, seed: int | None, oracle_limit: int) -> list[str]:
    """All checks run by ``selftest`` on one caterpillar; returns the problems found."""
    try:
        result = label(t, seed)
    except InvariantViolation as exc:
        return [str(exc)]
    problems = all_violations(t, result)
    if not verify_oriented_sums(orient_and_label(t, result.labels)):
        problems.append("oriented sums collide")
    if t.m <= oracle_limit:
        cmp = compare_with_algorithm(t, oracle_limit)
        if not cmp.agree:
            problems.append(f"oracle disagreement: algorithm_ok={cmp.algorithm_ok} oracle_ok={cmp.oracle_ok}")
    return problems


def cmd_selftest(args) -> int:
    if args.n_max < 3:
        print(f"nothing to enumerate: caterpillars have order >= 3, got n_max={args.n_max}", file=sys.stderr)
        return EXIT_INPUT
    seed = _seed(args)
    passed = failed = 0
    for n in range(3, args.n_max + 1):
        n_pass = n_fail = 0
        for t in generator.enumerate_caterpillars(n, cap=max(args.n_max, generator.ENUMERATION_CAP)):
            problems = selftest_instance(t, seed, args.oracle_limit)
            if problems:
                n_fail += 1
                print(f"FAIL n={n}: {'; '.join(problems[:3])}")
                sys.stdout.write(serialize_edge_list(t) + "\n")
            else:
                n_pass += 1
        print(f"n={n}\tpass={n_pass}\tfail={n_fail}")
        passed += n_pass
        failed += n_fail
    print(f"total\tpass={passed}\tfail={failed}")
    return EXIT_OK if failed == 0 else EXIT_INVARIANT


def cmd_bench(args) -> int:
    rows = bench.run_bench(args.sizes, args.trials, args.seed)
    print("n\ttrials\tmedian_s\tmin_s\tratio_vs_n/10")
    for r in rows:
        ratio = f"{r.ratio:.2f}" if r.ratio is not None else "-"
        print(f"{r.n}\t{r.trials}\t{r.median_s:.6f}\t{r.min_s:.6f}\t{ratio}")
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    return [int(float(x)) for x in text.split(",") if x]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="antimagic", description="Antimagic labelings of caterpillars.")
    sub = parser.add_subparsers(dest="command", required=True)

    def labeling_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--step2", choices=["det", "random"], default="det",
                       help="how step 2 picks leg labels (default: det)")
        p.add_argument("--seed", type=int, default=0, help="seed for --step2 random")

    p = sub.add_parser("label", help="label a caterpillar given as an edge list")
    p.add_argument("input", help="edge-list file, or - for stdin")
    p.add_argument("--format", choices=["tsv", "obj", "dot"], default="tsv")
    p.add_argument("--trace", action="store_true", help="dump the step 1 trace to stderr")
    labeling_flags(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a 'u v label' file for antimagicness")
    p.add_argument("input")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a random caterpillar as an edge list")
    p.add_argument("--p", type=int, required=True, help="spine length")
    p.add_argument("--legs", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("orient", help="label, then orient edges between the two colour classes")
    p.add_argument("input")
    p.add_argument("--format", choices=["tsv", "obj", "dot"], default="tsv")
    labeling_flags(p)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("oracle", help="compare the construction with brute-force search")
    p.add_argument("input")
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("selftest", help="check every caterpillar up to a given order")
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--oracle-limit", type=int, default=9, help="run the oracle when m <= this (0 disables)")
    labeling_flags(p)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="time the labeling pipeline on random caterpillars")
    p.add_argument("--sizes", type=_sizes, default=[10**4, 10**5, 10**6], help="comma-separated orders")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, OracleLimitError, OracleBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotACaterpillarError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_REJECTED
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
