"""Command line entry point.

Exit status: 0 when the computation succeeded (and any claim held), 1 when a
claim was checked and failed, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .catalog import DEFAULT_CATALOG
from .engel_sets import SET_FUNCTIONS
from .errors import GroupError
from .groupfile import resolve_group
from .structure import SubnormalChain, generated_subgroup, quotient, verify_chain
from .subsets import Subgroup
from .verify import PRODUCT_ORDER_CAP, analyze_group, run_claim, search_counterexamples
from .words import eval_word, parse_word

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, data: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


def _label_list(group, text: str) -> list[int]:
    return [group.index_of(lab) for lab in text.split(";") if lab.strip()]


def _group_list(text: str):
    return [resolve_group(d) for d in text.split(",") if d.strip()]


# --------------------------------------------------------------------------
# subcommands


def cmd_eval(args) -> int:
    group = resolve_group(args.group)
    env = {}
    for b in args.bind:
        name, sep, label = b.partition("=")
        if not sep or not name.strip():
            raise UsageError(f"--bind {b!r}: expected NAME=LABEL")
        env[name.strip()] = group.by_label(label)
    word = parse_word(args.word)
    value = eval_word(word, env, group=group)
    _emit(args, {"group": group.name, "word": args.word, "value": value.label}, value.label)
    return EXIT_OK


def cmd_sets(args) -> int:
    group = resolve_group(args.group)
    element = group.by_label(args.element)
    fn = SET_FUNCTIONS[args.set]
    result = fn(group, element, args.n) if args.set == "r_n" else fn(group, element)
    labels = result.labels()
    data = {"group": group.name, "element": element.label, "set": args.set,
            "n": args.n if args.set == "r_n" else None, "order": len(labels), "members": labels}
    _emit(args, data, "\n".join(labels))
    return EXIT_OK


def cmd_analyze(args) -> int:
    summary = analyze_group(resolve_group(args.group))
    _emit(args, summary.to_dict(), summary.to_text())
    return EXIT_OK


def _finish_report(args, report) -> int:
    if args.format == "json":
        print(report.to_json(timing=args.timing))
    else:
        print(report.to_text(failures_only=args.failures_only))
        if args.timing:
            print(f"wall time: {report.wall_time:.3f}s")
    return EXIT_OK if report.held else EXIT_FAILED


def cmd_verify(args) -> int:
    groups = _group_list(args.groups)
    if not groups:
        raise UsageError("--groups: at least one group descriptor required")
    report = run_claim(args.claim, groups, n_max=args.n_max, cap=args.cap)
    return _finish_report(args, report)


def cmd_search(args) -> int:
    text = args.catalog or ",".join(f"catalog:{n}" for n in DEFAULT_CATALOG)
    report = search_counterexamples(_group_list(text), args.claim,
                                    exhaustive=args.exhaustive, cap=args.cap, n_max=args.n_max)
    return _finish_report(args, report)


def cmd_quotient(args) -> int:
    group = resolve_group(args.group)
    kernel = generated_subgroup(group, _label_list(group, args.kernel))
    q = quotient(group, kernel)
    reps = [group.labels[r] for r in q.representatives]
    data = {
        "group": group.name,
        "kernel": kernel.labels(),
        "order": q.order,
        "abelian": q.is_abelian(),
        "cosets": [{"representative": r, "members": c.labels()} for r, c in zip(reps, q.cosets)],
        "table": [[reps[j] for j in row] for row in q.table.tolist()],
    }
    lines = [f"quotient of order {q.order} ({'abelian' if data['abelian'] else 'nonabelian'})"]
    for r, c in zip(reps, q.cosets):
        lines.append(f"  {r}N = {{{', '.join(c.labels())}}}")
    width = max(len(r) for r in reps)
    lines.append("table:")
    for row in data["table"]:
        lines.append("  " + " ".join(x.ljust(width) for x in row).rstrip())
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_chain(args) -> int:
    group = resolve_group(args.group)
    links = []
    for part in args.links.split("|"):
        part = part.strip()
        if part == "*":
            links.append(Subgroup.whole(group))
        else:
            links.append(generated_subgroup(group, _label_list(group, part)))
    try:
        chain = SubnormalChain(links)
    except ValueError as exc:
        raise UsageError(f"--links: {exc}") from None
    report = verify_chain(group, chain)
    data = {"group": group.name, **report.to_dict(), "tool_version": __version__}
    lines = []
    for s in report.steps:
        q = "abelian" if s.quotient_abelian else ("nonabelian" if s.normal else "-")
        lines.append(f"  {s.lower_order} -> {s.upper_order}: normal={s.normal} "
                     f"quotient order {s.quotient_order} {q}")
    lines.append(f"verdict: {report.verdict}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if report.verdict else EXIT_FAILED


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="engelgroups",
        description="Brute-force n-Engel and centralizer-like subgroup computations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a word")
    p.add_argument("--group", required=True, help="catalog:NAME or group file")
    p.add_argument("--word", required=True)
    p.add_argument("--bind", action="append", default=[], metavar="NAME=LABEL")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sets", parents=[common], help="compute a centralizer-like set")
    p.add_argument("--group", required=True)
    p.add_argument("--element", required=True)
    p.add_argument("--set", choices=sorted(SET_FUNCTIONS), default="r_n")
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_sets)

    p = sub.add_parser("analyze", parents=[common], help="structural summary of a group")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_analyze)

    reporting = argparse.ArgumentParser(add_help=False)
    reporting.add_argument("--n-max", type=int, default=4)
    reporting.add_argument("--cap", type=int, default=PRODUCT_ORDER_CAP,
                           help="largest direct-product order to check")
    reporting.add_argument("--timing", action="store_true", help="include wall time")
    reporting.add_argument("--failures-only", action="store_true",
                           help="text mode: list only failing instances")

    p = sub.add_parser("verify", parents=[common, reporting], help="check a claim")
    p.add_argument("--claim", required=True)
    p.add_argument("--groups", required=True, help="comma separated group descriptors")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common, reporting], help="look for counterexamples")
    p.add_argument("--claim", default="conj6.1")
    p.add_argument("--catalog", default=None,
                   help="comma separated group descriptors (default: "
                        + ",".join(DEFAULT_CATALOG) + ")")
    p.add_argument("--exhaustive", action="store_true",
                   help="check every pair instead of stopping at the first failing one")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("quotient", parents=[common], help="coset table of G/N")
    p.add_argument("--group", required=True)
    p.add_argument("--kernel", required=True, help="';'-separated labels generating N")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("chain", parents=[common], help="check a subnormal chain")
    p.add_argument("--group", required=True)
    p.add_argument("--links", required=True,
                   help="'|'-separated links, each a ';'-separated generator list; '*' is G")
    p.set_defaults(func=cmd_chain)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "n_max", 1) < 1 or getattr(args, "n", 1) < 1:
        print("error: Engel depth must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (GroupError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
