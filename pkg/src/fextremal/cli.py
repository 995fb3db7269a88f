"""Command-line entry point.

Exit codes: 0 success, 2 usage or parse error, 3 invalid tree,
4 route disagreement, 5 unwritable output path.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .enumeration import ENUM_CEILING, EnumFilter, generate_free_trees
from .errors import (
    DomainError,
    FExtremalError,
    InvalidAlpha,
    InvalidTree,
    ParseError,
    RouteDisagreement,
)
from .graph import DegreeSpec, path_tree
from .indices import INDICES
from .io import read_tree, write_tree_stream
from .tables import ERRATA, ROUTES, build_table, export_trees, format_table, run_routes
from .transform import extremalize

EXIT_OK, EXIT_USAGE, EXIT_TREE, EXIT_DISAGREE, EXIT_WRITE = 0, 2, 3, 4, 5


def _fmt_value(v) -> str:
    return str(v) if isinstance(v, int) else f"{v:.12f}"


def cmd_compute(args, out) -> int:
    tree = read_tree(args.input)
    fn = INDICES[args.index]
    if args.index in ("m1alpha", "r0alpha"):
        if args.alpha is None:
            raise DomainError(f"--alpha is required for index {args.index}")
        alpha = int(args.alpha) if float(args.alpha).is_integer() else float(args.alpha)
        value = fn(tree, alpha)
    else:
        value = fn(tree)
    print(_fmt_value(value), file=out)
    return EXIT_OK


def cmd_extremal(args, out) -> int:
    routes = ROUTES if args.route == "all" else (args.route,)
    res = run_routes(args.n, args.delta, routes=routes, ceiling=args.enum_ceiling)
    summary = {}
    if res.closed is not None:
        c = res.closed
        summary["closed"] = {"f": c.f_value, "spec": str(c.spec), "case": c.case_tag, "x": c.x}
    if res.ilp is not None:
        summary["ilp"] = {"f": res.ilp.objective, "spec": str(res.summary()["ilp"][1][0]),
                          "nonzero": res.ilp.nonzero()}
    if res.enum is not None:
        e = res.enum
        summary["enum"] = {"f": e.f_max, "spec": ",".join(str(s) for s in e.winning_specs),
                           "count": sum(e.counts)}
    notes = []
    printed = ERRATA.get((args.delta, args.n), {})
    if "f_value" in printed:
        f = next(iter(summary.values()))["f"]
        notes.append(f"ERRATUM: published table prints F={printed['f_value']} for n={args.n}, "
                     f"delta={args.delta}; the degree spec gives F={f}")
    if "tree_count" in printed and res.enum is not None:
        notes.append(f"ERRATUM: published table prints #T={printed['tree_count']} for n={args.n}, "
                     f"delta={args.delta}; enumeration finds {sum(res.enum.counts)}")
    if args.trace:
        steps: list = []
        final = extremalize(path_tree(args.n), args.delta, trace=steps)
        _write_lines(args.trace, [json.dumps(s) for s in steps])
        summary["transform"] = {"f": steps[-1]["f_after"] if steps else None, "moves": len(steps),
                                "max_degree": final.max_degree}
    if args.format == "json":
        print(json.dumps({"n": args.n, "delta": args.delta, "routes": summary, "notes": notes}), file=out)
        return EXIT_OK
    print(f"n={args.n} delta={args.delta}", file=out)
    for route, info in summary.items():
        parts = [f"{route}: F={info['f']}"]
        for key, val in info.items():
            if key == "f" or val is None:
                continue
            if isinstance(val, dict):
                val = " ".join(f"{k}={v}" for k, v in val.items())
            parts.append(f"{key}={val}")
        print(" ".join(parts), file=out)
    if len(routes) > 1:
        print("agreement: all routes agree", file=out)
    for note in notes:
        print(note, file=out)
    return EXIT_OK


def _write_lines(path: str, lines: list[str]) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _WriteError(f"cannot write {path}: {exc.strerror}") from None


class _WriteError(Exception):
    pass


def cmd_table(args, out) -> int:
    rows = build_table(args.delta, args.n_min, args.n_max, ceiling=args.enum_ceiling)
    text = format_table(rows, args.format)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise _WriteError(f"cannot write {args.out}: {exc.strerror}") from None
    else:
        out.write(text)
    return EXIT_OK


def cmd_export(args, out) -> int:
    try:
        paths = export_trees(args.n, args.delta, args.format, args.out, ceiling=args.enum_ceiling)
    except OSError as exc:
        raise _WriteError(f"cannot write to {args.out}: {exc.strerror}") from None
    for p in paths:
        print(p, file=out)
    return EXIT_OK


def cmd_trees(args, out) -> int:
    spec = DegreeSpec.parse(args.spec) if args.spec else None
    flt = EnumFilter(max_degree=args.delta, degree_spec=spec)
    write_tree_stream(generate_free_trees(args.n, flt, ceiling=args.enum_ceiling), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fextremal", description="Degree-based indices and F-maximal trees.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate an index on a tree file")
    c.add_argument("input", help="edge-list or JSON tree file")
    c.add_argument("--index", choices=sorted(INDICES), default="f")
    c.add_argument("--alpha", type=float)
    c.set_defaults(func=cmd_compute)

    e = sub.add_parser("extremal", help="F-maximal degree structure by one or all routes")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--delta", type=int, required=True)
    e.add_argument("--route", choices=(*ROUTES, "all"), default="all")
    e.add_argument("--format", choices=("text", "json"), default="text")
    e.add_argument("--trace", help="write the edge-shift trace from the path P_n as JSON lines ('-' for stdout)")
    e.add_argument("--enum-ceiling", type=int, default=ENUM_CEILING)
    e.set_defaults(func=cmd_extremal)

    t = sub.add_parser("table", help="reproduce a table of extremal trees")
    t.add_argument("--delta", type=int, required=True)
    t.add_argument("--n-min", type=int, default=4)
    t.add_argument("--n-max", type=int, default=20)
    t.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    t.add_argument("--out")
    t.add_argument("--enum-ceiling", type=int, default=ENUM_CEILING)
    t.set_defaults(func=cmd_table)

    x = sub.add_parser("export", help="write extremal trees as DOT or JSON files")
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--delta", type=int, required=True)
    x.add_argument("--format", choices=("dot", "json"), default="dot")
    x.add_argument("--out", required=True, help="output directory")
    x.add_argument("--enum-ceiling", type=int, default=ENUM_CEILING)
    x.set_defaults(func=cmd_export)

    g = sub.add_parser("trees", help="stream all free trees on n vertices as JSON lines")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--delta", type=int)
    g.add_argument("--spec", help="exact degree spec, e.g. 4^3,3^1,1^9")
    g.add_argument("--enum-ceiling", type=int, default=ENUM_CEILING)
    g.set_defaults(func=cmd_trees)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except InvalidTree as exc:
        print(f"error: invalid tree: {exc}", file=sys.stderr)
        return EXIT_TREE
    except RouteDisagreement as exc:
        print(f"error: routes disagree: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except _WriteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WRITE
    except (ParseError, DomainError, InvalidAlpha, FExtremalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
