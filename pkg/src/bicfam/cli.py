"""Command-line front end.

Subcommands: closure, mul, inv, leq, green, sigma, classify, eggbox, verify.
Families are given as generator lists and closed automatically unless
--no-close asks for validation instead.  Exit codes: 0 success, 1 check
failure, 2 usage or parse error, 3 contract violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import oracle
from .classify import classify, report_dict
from .family import OmegaFamily, close, format_family, from_members, is_closed, parse_family
from .natset import SetParseError, format_set
from .semigroup import (SemigroupCtx, Triple, Zero, format_element,
                        inverse, parse_element, sigma_image)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CONTRACT = 3


@dataclass(frozen=True)
class EggBox:
    """Truncated egg-box layout: one grid per family member, rows sharing
    the left index, columns sharing the right index; zero kept apart."""

    classes: tuple[tuple[int, tuple[tuple[Triple, ...], ...]], ...]
    has_zero: bool


def build_eggbox(ctx: SemigroupCtx, max_index: int) -> EggBox:
    classes = []
    for f, s in enumerate(ctx.family.members):
        if s.is_empty():
            continue
        grid = tuple(tuple(Triple(i, j, f) for j in range(max_index + 1))
                     for i in range(max_index + 1))
        classes.append((f, grid))
    return EggBox(tuple(classes), ctx.has_zero)


def eggbox_text(ctx: SemigroupCtx, box: EggBox) -> str:
    lines = []
    for f, grid in box.classes:
        lines.append(f"D-class for {format_set(ctx.family.members[f])}:")
        cells = [[format_element(ctx, e) for e in row] for row in grid]
        width = max(len(c) for row in cells for c in row)
        for row in cells:
            lines.append("  " + " ".join(c.ljust(width) for c in row))
    if box.has_zero:
        lines.append("zero: 0")
    return "\n".join(lines)


def eggbox_dot(ctx: SemigroupCtx, box: EggBox) -> str:
    lines = ["digraph eggbox {", "  rankdir=TB;", "  node [shape=box];"]
    for f, grid in box.classes:
        lines.append(f"  subgraph cluster_{f} {{")
        lines.append(f'    label="D-class {format_set(ctx.family.members[f])}";')
        for row in grid:
            for e in row:
                lines.append(f'    n{f}_{e.i}_{e.j} [label="({e.i},{e.j},F{f})"];')
        for row in grid:
            names = "; ".join(f"n{f}_{e.i}_{e.j}" for e in row)
            lines.append(f"    {{ rank=same; {names}; }}")
        for i in range(len(grid) - 1):
            for j in range(len(grid[i])):
                lines.append(f"    n{f}_{i}_{j} -> n{f}_{i + 1}_{j} [style=invis];")
        lines.append("  }")
    if box.has_zero:
        lines.append('  zero [label="0", shape=circle];')
    lines.append("}")
    return "\n".join(lines)


def _load_family(args) -> OmegaFamily:
    generators = parse_family(args.family)
    if args.no_close:
        if not is_closed(generators):
            raise ContractViolation(
                "the supplied sets are not closed under shifted intersections")
        return from_members(generators)
    return close(generators)


class ContractViolation(Exception):
    pass


def _emit(args, text: str, payload) -> None:
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _cmd_closure(args) -> int:
    fam = _load_family(args)
    text = "\n".join([f"members ({len(fam)}):"]
                     + [f"  {format_set(m)}" for m in fam.members]
                     + [f"has_empty: {str(fam.has_empty).lower()}"])
    _emit(args, text, {"members": [format_set(m) for m in fam.members],
                       "has_empty": fam.has_empty})
    return EXIT_OK


def _cmd_mul(args) -> int:
    ctx = SemigroupCtx(_load_family(args))
    a = parse_element(ctx, args.a)
    b = parse_element(ctx, args.b)
    out = format_element(ctx, ctx.multiply(a, b))
    _emit(args, out, {"result": out})
    return EXIT_OK


def _cmd_inv(args) -> int:
    ctx = SemigroupCtx(_load_family(args))
    out = format_element(ctx, inverse(parse_element(ctx, args.a)))
    _emit(args, out, {"result": out})
    return EXIT_OK


def _cmd_leq(args) -> int:
    ctx = SemigroupCtx(_load_family(args))
    got = ctx.natural_leq(parse_element(ctx, args.a), parse_element(ctx, args.b))
    _emit(args, str(got).lower(), {"result": got})
    return EXIT_OK


def _cmd_green(args) -> int:
    ctx = SemigroupCtx(_load_family(args))
    got = ctx.green(args.relation,
                    parse_element(ctx, args.a), parse_element(ctx, args.b))
    _emit(args, str(got).lower(), {"result": got})
    return EXIT_OK


def _cmd_sigma(args) -> int:
    ctx = SemigroupCtx(_load_family(args))
    e = parse_element(ctx, args.a)
    if isinstance(e, Zero):
        raise ContractViolation("the congruence image is undefined for the zero element")
    _emit(args, str(sigma_image(e)), {"result": sigma_image(e)})
    return EXIT_OK


def _cmd_classify(args) -> int:
    ctx = SemigroupCtx(_load_family(args))
    report = report_dict(ctx, classify(ctx))
    text_lines = []
    for key, value in report.items():
        if isinstance(value, list):
            value = ", ".join(value)
        elif isinstance(value, bool):
            value = str(value).lower()
        elif value is None:
            value = "none"
        text_lines.append(f"{key}: {value}")
    _emit(args, "\n".join(text_lines), report)
    return EXIT_OK


def _cmd_eggbox(args) -> int:
    ctx = SemigroupCtx(_load_family(args))
    box = build_eggbox(ctx, args.max)
    print(eggbox_text(ctx, box))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(eggbox_dot(ctx, box) + "\n")
        print(f"wrote {args.dot}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.family:
        ctx = SemigroupCtx(_load_family(args))
        reports = oracle.run_all(ctx, args.max)
    else:
        reports = []
        for name, ctx in oracle.default_corpus():
            print(f"family {name}: {format_family(ctx.family)}")
            reports.extend(oracle.run_all(ctx, args.max))
        reports.append(oracle.check_shift_dichotomy(3, 4))
    ok = True
    for report in reports:
        print(report.summary())
        if not report.passed:
            ok = False
            print(f"  first failure: {report.failures[0]}")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bicfam",
        description="Algebra of bicyclic-monoid extensions over closed"
                    " families of eventually periodic sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family_required=True):
        p.add_argument("--family", required=family_required,
                       help="comma-separated generator set expressions")
        p.add_argument("--no-close", action="store_true",
                       help="require the generators to already be closed")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("closure", help="close a generator list and print the family")
    common(p)
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("mul", help="multiply two elements")
    common(p)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_mul)

    p = sub.add_parser("inv", help="invert an element")
    common(p)
    p.add_argument("a")
    p.set_defaults(func=_cmd_inv)

    p = sub.add_parser("leq", help="natural partial order test")
    common(p)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_leq)

    p = sub.add_parser("green", help="Green relation test")
    common(p)
    p.add_argument("relation", choices=("R", "L", "H", "D", "J"))
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_green)

    p = sub.add_parser("sigma", help="group-congruence image of an element")
    common(p)
    p.add_argument("a")
    p.set_defaults(func=_cmd_sigma)

    p = sub.add_parser("classify", help="full structural report")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("eggbox", help="egg-box diagram of a truncation")
    common(p)
    p.add_argument("--max", type=int, default=2, help="largest index shown")
    p.add_argument("--dot", help="also write a DOT graph to this path")
    p.set_defaults(func=_cmd_eggbox)

    p = sub.add_parser("verify", help="run the brute-force checks")
    common(p, family_required=False)
    p.add_argument("--max", type=int, default=3, help="index window size")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except SetParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ContractViolation as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONTRACT
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
