"""Edge-shift moves, extremalization and direct construction of extremal trees.

The edge shift deletes ``vw`` and adds ``uw``: the subtree hanging at ``w``
moves from ``v`` to ``u``.  With ``d(u) >= d(v) >= 2`` the F-index grows by
``(d(u)+1)^3 - d(u)^3 + (d(v)-1)^3 - d(v)^3 > 0``.  Repeating the move between
the largest and the smallest middle-degree vertex drives any tree to the
closed-form extremal degree structure.
"""
from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import (
    DegreeBoundViolated,
    DomainError,
    EdgeMissing,
    EdgePresent,
    NotRealizable,
    WouldDisconnect,
)
from .extremal import extremal_spec
from .graph import Tree, expand, is_tree_degree_sequence
from .indices import f_index


def middle_degree_vertices(t: Tree, delta: int) -> tuple[int, ...]:
    """Vertices with ``1 < d(v) < delta``, by non-increasing degree then id."""
    deg = t.degree
    if t.max_degree > delta:
        raise DegreeBoundViolated(f"tree has max degree {t.max_degree} > {delta}")
    mid = [v for v in range(t.n) if 1 < deg[v] < delta]
    mid.sort(key=lambda v: (-deg[v], v))
    return tuple(mid)


def f_delta(d_u: int, d_v: int) -> int:
    """F-index change of an edge shift from ``v`` (degree d_v) to ``u`` (degree d_u)."""
    if d_v < 2 or d_u < d_v:
        raise DomainError(f"need d_u >= d_v >= 2, got ({d_u}, {d_v})")
    return (d_u + 1) ** 3 - d_u**3 + (d_v - 1) ** 3 - d_v**3


def _side(adj: Sequence, start: int, blocked: int) -> set[int]:
    """Vertices reachable from ``start`` without passing through ``blocked``."""
    seen = {start, blocked}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    seen.discard(blocked)
    return seen


def edge_shift(t: Tree, u: int, v: int, w: int) -> Tree:
    """Delete edge ``vw``, add edge ``uw``.

    Raises :class:`EdgeMissing` if ``vw`` is not an edge, :class:`EdgePresent`
    if ``uw`` already is, and :class:`WouldDisconnect` if ``u`` lies on ``w``'s
    side of ``vw`` (the result would contain a cycle and lose connectivity).
    """
    if not t.has_edge(v, w):
        raise EdgeMissing(f"({v}, {w}) is not an edge")
    if u == w:
        raise DomainError("u and w must differ")
    if t.has_edge(u, w):
        raise EdgePresent(f"({u}, {w}) is already an edge")
    if u in _side(t.adjacency, w, v):
        raise WouldDisconnect(f"vertex {u} lies in the component of {w} after deleting ({v}, {w})")
    key = (min(v, w), max(v, w))
    edges = [(u, w) if (min(a, b), max(a, b)) == key else (a, b) for a, b in t.edges]
    return Tree(t.n, edges, check=False)


def _toward(adj: list[set[int]], src: int, dst: int) -> int:
    """First vertex after ``src`` on the path from ``src`` to ``dst``."""
    prev = {dst: dst}
    q = deque([dst])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                if y == src:
                    return x
                q.append(y)
    raise ValueError("vertices are not connected")


def extremalize(t: Tree, delta: int, trace: list | None = None) -> Tree:
    """Apply F-increasing edge shifts until at most one middle-degree vertex remains.

    ``u`` is the middle vertex of largest degree, ``v`` the remaining middle
    vertex of smallest degree (ties: smallest id), ``w`` the smallest neighbour
    of ``v`` not on the path towards ``u``.  When ``trace`` is a list, one dict
    per move (``step, u, v, w, f_before, f_after``) is appended to it.
    """
    if t.max_degree > delta:
        raise DegreeBoundViolated(f"tree has max degree {t.max_degree} > {delta}")
    n = t.n
    if n <= 2:
        return t
    delta = min(delta, n - 1)
    adj = [set(nb) for nb in t.adjacency]
    deg = list(t.degree)
    mid = {v for v in range(n) if 1 < deg[v] < delta}
    f = f_index(t)
    step = 0
    while len(mid) > 1:
        u = min(mid, key=lambda x: (-deg[x], x))
        v = min((x for x in mid if x != u), key=lambda x: (deg[x], x))
        block = _toward(adj, v, u)
        w = min(x for x in adj[v] if x != block)
        gain = f_delta(deg[u], deg[v])
        adj[v].discard(w)
        adj[w].discard(v)
        adj[u].add(w)
        adj[w].add(u)
        deg[u] += 1
        deg[v] -= 1
        for x in (u, v):
            if 1 < deg[x] < delta:
                mid.add(x)
            else:
                mid.discard(x)
        step += 1
        if trace is not None:
            trace.append({"step": step, "u": u, "v": v, "w": w, "f_before": f, "f_after": f + gain})
        f += gain
    edges = [(a, b) for a in range(n) for b in sorted(adj[a]) if a < b]
    return Tree(n, edges, check=False)


def realize_degree_sequence(seq: Sequence[int]) -> Tree:
    """Breadth-first greedy tree with the given degree multiset.

    Degrees are assigned in non-increasing order to vertices in BFS order, and
    each new vertex hangs from the oldest vertex that still has a free slot.
    """
    if not is_tree_degree_sequence(seq):
        raise NotRealizable(f"{list(seq)} is not the degree sequence of a tree")
    degs = sorted(seq, reverse=True)
    n = len(degs)
    if n <= 1:
        return Tree(1, [], check=False)
    edges = []
    slots = deque([[0, degs[0]]])
    for v in range(1, n):
        while slots[0][1] == 0:
            slots.popleft()
        head = slots[0]
        edges.append((head[0], v))
        head[1] -= 1
        if degs[v] > 1:
            slots.append([v, degs[v] - 1])
    return Tree(n, edges, check=False)


def construct_extremal(n: int, delta: int) -> Tree:
    """An F-maximal tree with ``n`` vertices and max degree <= ``delta``.

    Degree-``delta`` vertices are filled breadth first; the residual vertex of
    degree ``x`` (if any) is the last internal vertex to be filled.
    """
    return realize_degree_sequence(expand(extremal_spec(n, delta).spec))
