"""Three-route extremal results, table reproduction and tree export.

Each order ``n`` is solved by the closed form, the integer program and
exhaustive enumeration; any disagreement raises :class:`RouteDisagreement`.
Values printed in the published tables that contradict the mathematics are
kept in :data:`ERRATA` and surfaced next to the corrected value.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path

from .enumeration import ENUM_CEILING, MaxFReport, max_f_search, max_f_search_many
from .errors import DomainError, RouteDisagreement
from .extremal import ExtremalSpec, extremal_spec
from .graph import DegreeSpec, Tree, degree_spec
from .ilp import IlpSolution, build_instance, solve
from .io import to_dot, tree_to_json
from .transform import construct_extremal

# (delta, n) -> {column: value as printed in the published table}
ERRATA: dict[tuple[int, int], dict[str, int]] = {
    (5, 11): {"tree_count": 1},
    (5, 14): {"f_value": 326},
    (4, 15): {"tree_count": 6},
}

ROUTES = ("closed", "ilp", "enum")


def erratum_note(delta: int, n: int, row: dict) -> str:
    """``column: printed X, computed Y`` for every erratum of this row."""
    printed = ERRATA.get((delta, n), {})
    return "; ".join(f"{col}: printed {val}, computed {row[col]}" for col, val in printed.items())


def ilp_route(n: int, delta: int) -> IlpSolution:
    if n == 2:
        return IlpSolution(2, 1, {1: 2}, {(1, 1): 1}, 2)
    return solve(build_instance(n, min(delta, n - 1)))


@dataclass
class RouteResults:
    n: int
    delta: int
    closed: ExtremalSpec | None = None
    ilp: IlpSolution | None = None
    enum: MaxFReport | None = None

    def summary(self) -> dict[str, tuple[int, list[DegreeSpec]]]:
        out = {}
        if self.closed is not None:
            out["closed"] = (self.closed.f_value, [self.closed.spec])
        if self.ilp is not None:
            out["ilp"] = (self.ilp.objective, [degree_spec(self.ilp.degree_sequence())])
        if self.enum is not None:
            out["enum"] = (self.enum.f_max, list(self.enum.winning_specs))
        return out

    def check(self) -> None:
        got = self.summary()
        if len(set((f, tuple(specs)) for f, specs in got.values())) > 1:
            detail = ", ".join(f"{r}: F={f} specs={[str(s) for s in specs]}" for r, (f, specs) in got.items())
            raise RouteDisagreement(f"n={self.n}, delta={self.delta}: {detail}")


def run_routes(
    n: int,
    delta: int,
    routes=ROUTES,
    ceiling: int = ENUM_CEILING,
    k: int | None = 10,
    enum_report: MaxFReport | None = None,
) -> RouteResults:
    """Compute the requested routes for ``(n, delta)`` and check that they agree."""
    if n < 2 or delta < 2:
        raise DomainError(f"need n >= 2 and delta >= 2, got n={n}, delta={delta}")
    res = RouteResults(n, delta)
    if "closed" in routes:
        res.closed = extremal_spec(n, delta)
    if "ilp" in routes:
        res.ilp = ilp_route(n, delta)
    if "enum" in routes:
        res.enum = enum_report or max_f_search(n, delta, k=k, ceiling=ceiling)
    res.check()
    return res


@dataclass
class TableRow:
    n: int
    degree_spec: DegreeSpec
    tree_count: int
    nonzero_ilp_vars: dict[str, int]
    f_value: int
    erratum: str = ""

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "degree_spec": str(self.degree_spec),
            "tree_count": self.tree_count,
            "ilp_nonzero": dict(self.nonzero_ilp_vars),
            "f_value": self.f_value,
            "erratum": self.erratum,
        }


def build_table(delta: int, n_min: int, n_max: int, ceiling: int = ENUM_CEILING) -> list[TableRow]:
    """Rows ``n, D(T), #T, nonzero ILP variables, F`` for ``n_min <= n <= n_max``."""
    if n_min < 2 or n_max < n_min:
        raise DomainError(f"bad range {n_min}..{n_max}")
    if n_max > ceiling:
        raise DomainError(f"n_max={n_max} exceeds the enumeration ceiling {ceiling}")
    ns = list(range(n_min, n_max + 1))
    reports = max_f_search_many(ns, delta, k=1, ceiling=ceiling)
    rows = []
    for n, rep in zip(ns, reports):
        res = run_routes(n, delta, ceiling=ceiling, enum_report=rep)
        (spec,) = rep.winning_specs
        row = TableRow(n, spec, rep.counts[0], res.ilp.nonzero(), res.closed.f_value)
        row.erratum = erratum_note(delta, n, {"f_value": row.f_value, "tree_count": row.tree_count})
        rows.append(row)
    return rows


def _ilp_text(vars_: dict[str, int]) -> str:
    return " ".join(f"{k}={v}" for k, v in vars_.items())


def format_table(rows: list[TableRow], fmt: str = "csv") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "degree_spec", "tree_count", "ilp_nonzero", "f_value", "erratum"])
        for r in rows:
            w.writerow([r.n, str(r.degree_spec), r.tree_count, _ilp_text(r.nonzero_ilp_vars), r.f_value, r.erratum])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps([r.as_dict() for r in rows], indent=1) + "\n"
    if fmt == "md":
        lines = ["| n | D(T) | #T | Non-zero variables | F | Erratum |", "|---|---|---|---|---|---|"]
        for r in rows:
            spec = "[" + ", ".join(f"{x}^{c}" for x, c in r.degree_spec.entries) + "]"
            lines.append(f"| {r.n} | {spec} | {r.tree_count} | {_ilp_text(r.nonzero_ilp_vars)} | {r.f_value} | {r.erratum} |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")


def parse_csv_table(text: str) -> list[dict]:
    """Read back :func:`format_table` CSV output as plain dicts."""
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        vars_ = dict(item.split("=") for item in rec["ilp_nonzero"].split())
        out.append(
            {
                "n": int(rec["n"]),
                "degree_spec": DegreeSpec.parse(rec["degree_spec"]),
                "tree_count": int(rec["tree_count"]),
                "ilp_nonzero": {k: int(v) for k, v in vars_.items()},
                "f_value": int(rec["f_value"]),
                "erratum": rec["erratum"],
            }
        )
    return out


def extremal_representatives(n: int, delta: int, ceiling: int = ENUM_CEILING) -> list[Tree]:
    """All non-isomorphic F-maximal trees if ``n`` is enumerable, else one constructed tree."""
    if n <= ceiling:
        rep = max_f_search(n, delta, k=None, ceiling=ceiling)
        return [t for reps in rep.representatives for t in reps]
    return [construct_extremal(n, delta)]


def export_trees(n: int, delta: int, fmt: str, out_dir: str | Path, ceiling: int = ENUM_CEILING) -> list[Path]:
    """Write one file per extremal representative; returns the written paths."""
    if fmt not in ("dot", "json"):
        raise ValueError(f"unknown export format {fmt!r}")
    trees = extremal_representatives(n, delta, ceiling)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for k, t in enumerate(trees, 1):
        name = f"tree_n{n}_delta{delta}_{k:02d}"
        p = out / f"{name}.{fmt}"
        p.write_text(to_dot(t, name) if fmt == "dot" else tree_to_json(t) + "\n", encoding="utf-8")
        paths.append(p)
    return paths
