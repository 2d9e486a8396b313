"""Command-line surface: eval, enumerate, check, dot, fixtures.

Exit codes: 0 success, 1 failed checks, 2 syntax errors in the input text,
3 semantic or file errors, 4 enumeration over the configured cap.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .cayley import CayleyGraph
from .closed import ClosedExpansionMonoid
from .errors import FinverseError, ParseError, TooLarge
from .expansion import (
    ALL,
    CONNECTED,
    DEFAULT_CAP,
    ExpansionMonoid,
    parse_element_text,
)
from .fixtures import write_fixture_files
from .groups import extend_generators, load_group_json, parse_word
from .report import Report, write_outputs
from .suites import SUITE_ORDER, SUITES, SuiteConfig, run_suites
from .terms import eval_term, parse_term
from .universal import GroupModel


@dataclass
class Config:
    """Resolved command configuration."""

    group_file: str
    gens: str = "plain"  # plain | extended
    cap: int = DEFAULT_CAP
    samples: int = 10_000
    seed: int = 0
    output: str = "text"  # text | json | dot


def _family(args, group, xgens):
    extended = getattr(args, "gens", "plain") == "extended" or args.model == "Mwedge"
    gens = extend_generators(group, xgens) if extended else xgens
    cayley = CayleyGraph(group, gens)
    cap = getattr(args, "cap", DEFAULT_CAP)
    if args.model == "M":
        return ExpansionMonoid(cayley, CONNECTED, cap=cap)
    if args.model == "F":
        return ExpansionMonoid(cayley, ALL, cap=cap)
    if args.model == "Mwedge":
        return ClosedExpansionMonoid(cayley, cap=cap)
    raise FinverseError(f"model {args.model} has no graph family")


def cmd_eval(args) -> int:
    group, xgens = load_group_json(args.group_file)
    if args.model == "group":
        if args.word is not None:
            from .groups import eval_word

            gens = extend_generators(group, xgens) if args.gens == "extended" else xgens
            value = eval_word(group, gens, parse_word(args.word))
        else:
            value = eval_term(parse_term(args.term), GroupModel(group, xgens))
        print(group.element_names[value])
        return 0
    family = _family(args, group, xgens)
    if args.word is not None:
        elem = family.eval_word(parse_word(args.word))
    else:
        elem = eval_term(parse_term(args.term), family)
    print(family.element_text(elem))
    return 0


def cmd_enumerate(args) -> int:
    group, xgens = load_group_json(args.group_file)
    family = _family(args, group, xgens)
    if args.by == "graphs":
        elems = family.elements()
    else:
        elems = sorted(
            family.elements_by_words(args.max_len),
            key=lambda s: (len(s.graph.vertices), sorted(s.graph.vertices),
                           len(s.graph.edges), sorted(s.graph.edges), s.point),
        )
    print(len(elems))
    if args.list:
        for s in elems:
            print(family.element_text(s))
    return 0


def cmd_check(args) -> int:
    group, xgens = load_group_json(args.group_file)
    cfg = SuiteConfig(samples=args.samples, seed=args.seed, cap=args.cap, word_len=args.word_len)
    names = list(SUITE_ORDER) if args.suite == "all" else [args.suite]
    report = run_suites(group, xgens, names, cfg)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text())
    if args.out_dir:
        write_outputs(report, args.out_dir)
    return 0 if report.ok else 1


def cmd_dot(args) -> int:
    group, xgens = load_group_json(args.group_file)
    extended = args.gens == "extended" or args.element is not None and "@" in args.element
    gens = extend_generators(group, xgens) if extended else xgens
    cayley = CayleyGraph(group, gens)
    point = None
    if args.cayley:
        graph = cayley.full_graph()
    elif args.element is not None:
        family = ExpansionMonoid(CayleyGraph(group, gens), ALL)
        elem = parse_element_text(family, args.element)
        graph, point = elem.graph, elem.point
    else:
        path = cayley.walk(0, parse_word(args.word))
        graph, point = cayley.spanned([0, *path.edges]), path.end
    text = cayley.to_dot(graph, name=group.name, point=point)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_fixtures(args) -> int:
    for path in write_fixture_files(args.out):
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finverse",
        description="Expansions of finite groups into inverse and F-inverse monoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a word or an enriched term")
    p_eval.add_argument("group_file")
    what = p_eval.add_mutually_exclusive_group(required=True)
    what.add_argument("--word")
    what.add_argument("--term")
    p_eval.add_argument("--model", choices=["group", "M", "F", "Mwedge"], default="group")
    p_eval.add_argument("--gens", choices=["plain", "extended"], default="plain")
    p_eval.set_defaults(func=cmd_eval)

    p_enum = sub.add_parser("enumerate", help="count (and list) expansion elements")
    p_enum.add_argument("group_file")
    p_enum.add_argument("--model", choices=["M", "F", "Mwedge"], required=True)
    p_enum.add_argument("--by", choices=["graphs", "words"], default="graphs")
    p_enum.add_argument("--max-len", type=int, default=6)
    p_enum.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_enum.add_argument("--gens", choices=["plain", "extended"], default="plain")
    p_enum.add_argument("--list", action="store_true")
    p_enum.set_defaults(func=cmd_enumerate)

    p_check = sub.add_parser("check", help="run verification suites")
    p_check.add_argument("group_file")
    p_check.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    p_check.add_argument("--samples", type=int, default=10_000)
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_check.add_argument("--word-len", type=int, default=6)
    p_check.add_argument("--format", choices=["text", "json"], default="text")
    p_check.add_argument("--out-dir", help="write report.csv, report.json and summary.png here")
    p_check.set_defaults(func=cmd_check)

    p_dot = sub.add_parser("dot", help="export a graph in DOT format")
    p_dot.add_argument("group_file")
    what = p_dot.add_mutually_exclusive_group(required=True)
    what.add_argument("--cayley", action="store_true")
    what.add_argument("--element", help="an element literal like (V={e0}; E={}; g=e0)")
    what.add_argument("--word")
    p_dot.add_argument("--gens", choices=["plain", "extended"], default="plain")
    p_dot.add_argument("--out")
    p_dot.set_defaults(func=cmd_dot)

    p_fix = sub.add_parser("fixtures", help="write the built-in group files")
    p_fix.add_argument("--out", default="fixtures")
    p_fix.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (FinverseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
