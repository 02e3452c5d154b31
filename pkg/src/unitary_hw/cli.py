"""Command line: classify | oracle | scan | hasse.

Algebras are given as ``su P Q`` or ``so* N``.  Coordinates use the
comma syntax ``9,4,3,3,2,1,1,0``; put ``--`` before a list that starts with
a minus sign so argparse does not read it as an option.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .errors import LimitExceededError, UHWError
from .hasse import build_hasse, mark_str, to_dot
from .numeric import Parameter, SOStar, SU, format_coords, parse_coords, parse_half
from .report import (
    DEFAULT_LIMIT,
    ClassificationResult,
    classify,
    oracle_table,
    scan_so,
    scan_su,
    to_json,
)
from .su import SuUnitaryItem

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3

SO_NAMES = ("so*", "sostar", "so")


class CliError(Exception):
    pass


def parse_algebra(tokens: Sequence[str]):
    """Consume an algebra name and its sizes from the front of ``tokens``; return (algebra, rest)."""
    if not tokens:
        raise CliError("missing algebra: expected 'su P Q' or 'so* N'")
    kind = tokens[0].lower()
    try:
        if kind == "su":
            if len(tokens) < 3:
                raise CliError("su needs two integers P Q")
            p, q = int(tokens[1]), int(tokens[2])
            if p > q:
                raise CliError(f"su({p},{q}): p <= q is assumed throughout; write su {q} {p} instead")
            return SU(p, q), list(tokens[3:])
        if kind in SO_NAMES:
            if len(tokens) < 2:
                raise CliError("so* needs an integer N")
            return SOStar(int(tokens[1])), list(tokens[2:])
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    raise CliError(f"unknown algebra {tokens[0]!r}: expected 'su' or 'so*'")


def parse_parameter(tokens: Sequence[str]) -> Parameter:
    alg, rest = parse_algebra(tokens)
    if len(rest) != 1:
        raise CliError("expected one comma-separated coordinate list after the algebra")
    coords = parse_coords(rest[0])
    if len(coords) != alg.rank:
        raise CliError(f"{alg} needs {alg.rank} coordinates, got {len(coords)}")
    return Parameter(alg, coords)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _item_line(item, explain: bool) -> str:
    if isinstance(item, SuUnitaryItem):
        line = str(item.split)
        if explain:
            prof = f"p'={item.profile.p_prime} q'={item.profile.q_prime}"
            form = f"  [{item.form}]" if item.form is not None else ""
            line += f"  {prof}{form}"
        return line
    line = str(item.arrangement)
    if explain:
        extra = f"  a={item.a}" if item.a is not None else ""
        line += f"  {item.profile}  [{item.tag}]  flips={item.arrangement.flips} parity={item.parity_used}{extra}"
    return line


def render_result(res: ClassificationResult, explain: bool) -> str:
    out = [
        f"{res.algebra}  dominant = {res.input}  ({res.integrality.value})",
        f"conjugates: {res.conjugate_count}",
        f"unitary: {len(res.items)}",
    ]
    out += ["  " + _item_line(it, explain) for it in res.items]
    if res.theorem_run:
        out.append(f"oracle agrees: {'yes' if res.oracle_agrees else 'NO'}")
    notes = res.diagnostics if explain else [d for d in res.diagnostics if d.startswith("mismatch")]
    if notes:
        out.append("diagnostics:")
        out += ["  " + d for d in notes]
    return "\n".join(out) + "\n"


def cmd_classify(args) -> int:
    param = parse_parameter(args.target)
    res = classify(param, limit=args.limit, theorem=not args.no_theorem)
    if args.format == "json":
        _emit(to_json(res), args.output)
    elif args.format == "text":
        _emit(render_result(res, args.explain), args.output)
    else:
        raise CliError("classify supports --format text or json")
    return EXIT_OK if res.oracle_agrees else EXIT_MISMATCH


def cmd_oracle(args) -> int:
    if args.format == "json":
        return cmd_classify(args)
    param = parse_parameter(args.target)
    rows = oracle_table(param, limit=args.limit)
    if args.format != "text":
        raise CliError("oracle supports --format text or json")
    lines = [f"{param.algebra}  conjugates: {len(rows)}  unitary: {sum(r.unitary for r in rows)}"]
    for r in rows:
        prof = r.profile
        if hasattr(prof, "p_prime"):
            ptxt = f"p'={prof.p_prime} q'={prof.q_prime}"
        else:
            ptxt = str(prof)
        lines.append(f"  {'U' if r.unitary else '.'}  {r.arrangement}  {ptxt}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_scan(args) -> int:
    family = args.family.lower()
    if family == "su":
        rep = scan_su(args.max_rank, args.span, limit=args.limit, jobs=args.jobs)
    elif family in SO_NAMES:
        rep = scan_so(args.max_n, parse_half(args.bound), limit=args.limit, jobs=args.jobs)
    else:
        raise CliError(f"unknown family {args.family!r}: expected 'su' or 'so*'")
    if args.format == "json" or args.output:
        _emit(to_json(rep), args.output)
    if args.format == "text":
        summary = (
            f"{rep.range}: {rep.instances_checked} instances, "
            f"{len(rep.mismatches)} mismatches, {rep.metadata.get('elapsed_ms', 0)} ms\n"
        )
        for m in rep.mismatches:
            summary += f"  {m.dom.algebra} {format_coords(m.dom.coords)}\n"
        sys.stdout.write(summary)
    return EXIT_OK if rep.agrees else EXIT_MISMATCH


def cmd_hasse(args) -> int:
    alg, rest = parse_algebra(args.target)
    if rest:
        raise CliError("hasse takes only an algebra")
    diagram = build_hasse(alg)
    if args.format == "dot":
        _emit(to_dot(diagram), args.output)
    elif args.format == "json":
        _emit(to_json(diagram), args.output)
    else:
        lines = [f"{alg}  nodes: {len(diagram.nodes)}  covers: {len(diagram.covers)}"]
        for k, nd in enumerate(diagram.nodes):
            flag = "U" if nd.unitary else "."
            lines.append(f"  {k:>3} {flag} {nd.arrangement}  Y={nd.young}  {mark_str(nd.mark)}".rstrip())
        lines.append("covers (lower -> higher):")
        lines += [f"  {a} -> {b}" for a, b in diagram.covers]
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitary-hw",
        description="Unitary highest weight parameters for su(p,q) and so*(2n) at integral infinitesimal character.",
        epilog="Put -- before a coordinate list that starts with '-', e.g. classify su 1 1 -- -1,3",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--output", "-o", metavar="PATH", help="write to PATH instead of stdout")
    common.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="maximum enumeration size")

    p = sub.add_parser("classify", parents=[common], help="unitary conjugates of a parameter")
    p.add_argument("target", nargs="+", metavar="ALGEBRA... COORDS")
    p.add_argument("--no-theorem", action="store_true", help="oracle path only")
    p.add_argument("--explain", action="store_true", help="show clause tags, profiles and notes")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("oracle", parents=[common], help="all conjugates with unitarity verdicts")
    p.add_argument("target", nargs="+", metavar="ALGEBRA... COORDS")
    p.set_defaults(func=cmd_oracle, explain=True, no_theorem=True)

    p = sub.add_parser("scan", parents=[common], help="theorem-vs-oracle sweep over a range")
    p.add_argument("family", help="su or so*")
    p.add_argument("--max-rank", type=int, default=6, help="su: largest p+q")
    p.add_argument("--span", type=int, default=6, help="su: largest first coordinate (last is 0)")
    p.add_argument("--max-n", type=int, default=5, help="so*: largest n")
    p.add_argument("--bound", default="6", help="so*: largest absolute coordinate, e.g. 13/2")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram of the conjugates of rho")
    p.add_argument("target", nargs="+", metavar="ALGEBRA")
    p.set_defaults(func=cmd_hasse)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (CliError, UHWError, ValueError, LimitExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
