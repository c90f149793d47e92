"""Command-line front end.

Output is line-oriented ``key=value`` records.  Exit status: 0 on success
(or a verification that holds), 1 when a counterexample was found, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from . import census, families
from .graph import Graph, GraphError, from_edge_list
from .graph6 import decode as graph6_decode

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

THEOREM_NAMES = {name.lower().replace("_", "-"): name for name in census.THEOREMS}


class InputError(ValueError):
    pass


# input


def looks_like_graph6(text: str) -> bool:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        return False
    line = lines[0].strip()
    if line.startswith(">>graph6<<"):
        return True
    return " " not in line and 63 <= ord(line[0]) <= 126


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <order>`` followed by ``u v`` lines; '#' starts a comment line."""
    order: Optional[int] = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if order is None:
            if len(fields) != 2 or fields[0] != "n" or not fields[1].isdigit():
                raise InputError(f"line {lineno}: expected 'n <order>', got {line!r}")
            order = int(fields[1])
            continue
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise InputError(f"line {lineno}: expected 'u v' with vertex ids, got {line!r}")
        u, v = int(fields[0]), int(fields[1])
        if u >= order or v >= order:
            raise InputError(f"line {lineno}: vertex id out of range 0..{order - 1}")
        if u == v:
            raise InputError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InputError(f"line {lineno}: duplicate edge {key[0]} {key[1]}")
        seen.add(key)
        edges.append(key)
    if order is None:
        raise InputError("missing 'n <order>' header")
    return from_edge_list(order, edges)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    if fmt == "auto":
        fmt = "graph6" if looks_like_graph6(text) else "edgelist"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise InputError(f"graph6 input must be one line, got {len(lines)}")
        try:
            return graph6_decode(lines[0])
        except GraphError as exc:
            raise InputError(f"line 1: {exc}") from exc
    return parse_edge_list(text)


def format_edge_list(G: Graph, comment: Optional[str] = None) -> str:
    out = [f"# {comment}"] if comment else []
    out.append(f"n {G.order}")
    out.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(out) + "\n"


def _read(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _graph6_stream(path: str):
    text = _read(path)
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            yield graph6_decode(line)
        except GraphError as exc:
            raise InputError(f"line {lineno}: {exc}") from exc


def _parse_params(items: Sequence[str]) -> dict[str, int]:
    params: dict[str, int] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise InputError(f"parameter {item!r} is not key=value")
        try:
            params[key] = int(value)
        except ValueError:
            raise InputError(f"parameter {key} needs an integer, got {value!r}") from None
    return params


# commands


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def cmd_analyze(args, out: TextIO) -> int:
    G = parse_graph(_read(args.path), args.format)
    report = census.invariant_report(G)
    for key, value in report.records():
        out.write(f"{key}={value}\n")
    out.write("status=ok\n")
    return EXIT_OK


def cmd_gen(args, out: TextIO) -> int:
    fid = args.family.upper()
    if fid not in families.FAMILY_IDS or fid in ("BLOWUP", "PRODUCT"):
        raise InputError(f"unknown family {args.family!r}")
    spec = families.FamilySpec(fid, _parse_params(args.params))
    G = families.build(spec)
    out.write(format_edge_list(G, spec.label()))
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    tid = THEOREM_NAMES.get(args.theorem.lower().replace("_", "-"))
    if tid is None:
        raise InputError(
            f"unknown theorem {args.theorem!r}; choose from {', '.join(sorted(THEOREM_NAMES))}"
        )
    bound = args.factor_max if tid in ("CARTESIAN", "FACTORS") else args.max_n
    source = _graph6_stream(args.source) if args.source else None
    verdict = census.verify(tid, bound, jobs=args.jobs, source=source)
    out.write(f"theorem={verdict.theorem_id}\n")
    out.write(f"max_order={verdict.max_order}\n")
    out.write(f"graphs_checked={verdict.graphs_checked}\n")
    for code in verdict.witnesses:
        out.write(f"witness={code}\n")
    for code in verdict.counterexamples:
        out.write(f"counterexample={code}\n")
    out.write(
        f"holds={_fmt(verdict.holds)} witnesses={len(verdict.witnesses)} "
        f"counterexamples={len(verdict.counterexamples)}\n"
    )
    return EXIT_OK if verdict.holds else EXIT_COUNTEREXAMPLE


def cmd_census(args, out: TextIO) -> int:
    flt = census.CensusFilter(
        max_order=args.max_n,
        connected=args.connected,
        triangle_free=args.triangle_free,
        nonbipartite=args.nonbipartite,
        bipartite=args.bipartite,
        min_girth=args.girth_min,
        max_girth=args.girth_max,
        split_only=args.split,
    )
    codes = census.census_codes(flt, args.predicate, jobs=args.jobs)
    for code in codes:
        out.write(code + "\n")
    sys.stderr.write(f"count={len(codes)}\n")
    return EXIT_OK


# parser


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wedgraphs",
        description="Edge domination invariants, graph families and bounded theorem checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = sub.add_parser("analyze", help="invariant report for one graph")
    p.add_argument("path", nargs="?", help="input file (default: stdin)")
    p.add_argument("--format", choices=("auto", "edgelist", "graph6"), default="auto")
    common(p)
    p.set_defaults(run=cmd_analyze)

    p = sub.add_parser("gen", help="build a named graph or family member")
    p.add_argument("family", help="e.g. hstar, h3, f11, g21, complete, biclique")
    p.add_argument("params", nargs="*", help="key=value integers, e.g. n=2")
    common(p)
    p.set_defaults(run=cmd_gen)

    p = sub.add_parser("verify", help="check a characterisation up to a bound")
    p.add_argument("theorem", help=", ".join(sorted(THEOREM_NAMES)))
    p.add_argument("--max-n", type=_positive, default=7)
    p.add_argument("--factor-max", type=_positive, default=4)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--source", help="graph6 lines to check instead of the census ('-' for stdin)")
    common(p)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("census", help="list graph classes as canonical graph6")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--nonbipartite", action="store_true")
    p.add_argument("--triangle-free", action="store_true")
    p.add_argument("--girth-min", type=int)
    p.add_argument("--girth-max", type=int)
    p.add_argument("--split", action="store_true")
    p.add_argument("--predicate", choices=sorted(census.PREDICATES))
    p.add_argument("--jobs", type=_positive, default=1)
    common(p)
    p.set_defaults(run=cmd_census)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.output:
            out = open(args.output, "w", encoding="ascii")
        try:
            return args.run(args, out)
        finally:
            if out is not sys.stdout:
                out.close()
    except (InputError, GraphError, census.CensusError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
