"""Text, JSON and DOT serialization of trees."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, TextIO

from .errors import ParseError
from .graph import Tree, validate_tree


def parse_edge_list(text: str) -> Tree:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty edge-list input")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise ParseError(f"malformed edge list: {exc}") from None
    return validate_tree(n, edges)


def parse_json_tree(text: str | dict) -> Tree:
    """Parse ``{"n": int, "edges": [[u, v], ...]}``."""
    try:
        data = json.loads(text) if isinstance(text, str) else text
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"malformed JSON tree: {exc}") from None
    return validate_tree(n, edges)


def parse_tree(text: str) -> Tree:
    """Edge-list or JSON, decided by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_json_tree(text)
    return parse_edge_list(text)


def read_tree(path: str | Path) -> Tree:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_tree(text)


def format_edge_list(t: Tree) -> str:
    return "\n".join([str(t.n)] + [f"{u} {v}" for u, v in t.edges]) + "\n"


def tree_to_dict(t: Tree) -> dict:
    return {"n": t.n, "edges": [[u, v] for u, v in t.edges]}


def tree_to_json(t: Tree) -> str:
    return json.dumps(tree_to_dict(t))


def write_tree_stream(trees: Iterable[Tree], fh: TextIO) -> int:
    """Write one JSON tree per line; returns the number written."""
    count = 0
    for t in trees:
        fh.write(tree_to_json(t))
        fh.write("\n")
        count += 1
    return count


def read_tree_stream(fh: Iterable[str]):
    for line in fh:
        if line.strip():
            yield parse_json_tree(line)


def to_dot(t: Tree, name: str = "T") -> str:
    """Undirected DOT graph with unlabeled point-shaped nodes."""
    out = [f"graph {name} {{", '  node [shape=point, width=0.12, label=""];']
    out += [f"  {v};" for v in range(t.n)]
    out += [f"  {u} -- {v};" for u, v in t.edges]
    out.append("}")
    return "\n".join(out) + "\n"
