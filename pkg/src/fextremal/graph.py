"""Trees, degree sequences, degree specs and canonical forms.

Vertices are the dense integers ``0 .. n-1``.  A :class:`Tree` is immutable;
every transformation in the package returns a new instance.
"""
from __future__ import annotations

import heapq
import random
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    HasCycle,
    InconsistentTotal,
    NotConnected,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
    WrongEdgeCount,
)

Edge = tuple[int, int]
DegreeSequence = tuple[int, ...]


class Tree:
    """Labeled tree on vertices ``0 .. n-1``.

    Build instances through :func:`validate_tree` (or ``Tree(n, edges)``, which
    validates as well).  ``check=False`` is reserved for generators that
    produce trees by construction.
    """

    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], *, check: bool = True):
        norm = tuple((int(a), int(b)) for a, b in edges)
        if check:
            _check_tree(n, norm)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", norm)

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    def __reduce__(self):
        return (_unpickle_tree, (self.n, self.edges))

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={list(self.edges)!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.n == other.n and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self.n, self._edge_set))

    @cached_property
    def _edge_set(self) -> frozenset:
        return frozenset((min(e), max(e)) for e in self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(nb)) for nb in adj)

    @cached_property
    def degree(self) -> tuple[int, ...]:
        """Degree of each vertex, indexed by vertex id."""
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)

    @property
    def max_degree(self) -> int:
        return max(self.degree, default=0)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self._edge_set

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the tree with vertex ``v`` renamed to ``perm[v]``."""
        return Tree(self.n, [(perm[a], perm[b]) for a, b in self.edges], check=False)


def _unpickle_tree(n, edges):
    return Tree(n, edges, check=False)


def _check_tree(n: int, edges: Sequence[Edge]) -> None:
    if n < 1:
        raise VertexOutOfRange(f"a tree needs at least one vertex, got n={n}")
    seen = set()
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise VertexOutOfRange(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        if a == b:
            raise SelfLoop(f"self-loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice")
        seen.add(key)
    m = len(edges)
    if m < n - 1:
        raise WrongEdgeCount(f"{m} edges for {n} vertices; a tree has {n - 1}")
    if m > n - 1:
        raise HasCycle(f"{m} edges for {n} vertices force a cycle")
    # exactly n-1 edges: connected <=> acyclic
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen_v = [False] * n
    seen_v[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen_v[w]:
                seen_v[w] = True
                count += 1
                stack.append(w)
    if count != n:
        raise NotConnected(f"only {count} of {n} vertices reachable from vertex 0")


def validate_tree(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate an edge list and return the corresponding :class:`Tree`.

    Raises
    ------
    VertexOutOfRange, SelfLoop, DuplicateEdge
        Malformed edges.
    WrongEdgeCount
        Fewer than ``n - 1`` edges.
    HasCycle
        More than ``n - 1`` edges.
    NotConnected
        Exactly ``n - 1`` edges that do not connect all vertices (hence a cycle
        somewhere else).
    """
    return Tree(n, edges)


def path_tree(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)], check=False)


def star_tree(n: int) -> Tree:
    return Tree(n, [(0, i) for i in range(1, n)], check=False)


# --------------------------------------------------------------------------
# degree sequences and specs


def degrees(t: Tree) -> DegreeSequence:
    """Non-increasing degree sequence (empty for the one-vertex tree)."""
    if t.n == 1:
        return ()
    return tuple(sorted(t.degree, reverse=True))


def is_tree_degree_sequence(seq: Sequence[int]) -> bool:
    n = len(seq)
    if n == 0:
        return True  # the single-vertex tree
    if n == 1:
        return False
    return all(d >= 1 for d in seq) and sum(seq) == 2 * (n - 1)


@dataclass(frozen=True)
class DegreeSpec:
    """Compact multiset notation ``[x1^n1, ..., xt^nt]`` with ``x1 > ... > xt``."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        entries = tuple((int(x), int(c)) for x, c in self.entries)
        object.__setattr__(self, "entries", entries)
        prev = None
        for x, c in entries:
            if x < 1 or c < 1:
                raise ValueError(f"degree and count must be positive, got {x}^{c}")
            if prev is not None and x >= prev:
                raise ValueError("degrees must be strictly decreasing")
            prev = x

    def __str__(self) -> str:
        return ",".join(f"{x}^{c}" for x, c in self.entries)

    @property
    def n(self) -> int:
        return sum(c for _, c in self.entries)

    @property
    def max_degree(self) -> int:
        return self.entries[0][0] if self.entries else 0

    def count(self, degree: int) -> int:
        return dict(self.entries).get(degree, 0)

    def power_sum(self, k: int) -> int:
        """Exact ``sum d**k`` over the expanded sequence."""
        return sum(c * x**k for x, c in self.entries)

    @classmethod
    def parse(cls, text: str) -> "DegreeSpec":
        """Parse the text form ``4^3,3^1,1^9`` (``[`` / ``]`` and spaces allowed)."""
        body = text.strip().strip("[]").replace(" ", "")
        if not body:
            return cls(())
        entries = []
        try:
            for term in body.split(","):
                x, _, c = term.partition("^")
                entries.append((int(x), int(c) if c else 1))
            return cls(tuple(entries))
        except ValueError as exc:
            raise ParseError(f"bad degree spec {text!r}: {exc}") from None


def degree_spec(seq: Iterable[int]) -> DegreeSpec:
    counts = Counter(seq)
    return DegreeSpec(tuple(sorted(counts.items(), reverse=True)))


def expand(spec: DegreeSpec, n: int | None = None) -> DegreeSequence:
    if n is not None and spec.n != n:
        raise InconsistentTotal(f"spec {spec} has {spec.n} vertices, expected {n}")
    return tuple(x for x, c in spec.entries for _ in range(c))


# --------------------------------------------------------------------------
# canonical form


def centers(t: Tree) -> tuple[int, ...]:
    """One or two central vertices, found by repeatedly stripping leaves."""
    n = t.n
    if n <= 2:
        return tuple(range(n))
    deg = list(t.degree)
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    adj = t.adjacency
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def rooted_code(t: Tree, root: int) -> bytes:
    """AHU encoding of ``t`` rooted at ``root``: ``(`` children sorted ``)``."""
    adj = t.adjacency
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for v in order:
        for w in adj[v]:
            if parent[w] == -1:
                parent[w] = v
                order.append(w)
    kids: list[list[bytes]] = [[] for _ in range(t.n)]
    code = b""
    for v in reversed(order):
        ch = kids[v]
        ch.sort()
        code = b"(" + b"".join(ch) + b")"
        if v != root:
            kids[parent[v]].append(code)
    return code


def canonical_code(t: Tree) -> bytes:
    """Isomorphism-invariant byte string; equal iff the trees are isomorphic."""
    return min(rooted_code(t, c) for c in centers(t))


def edge_type_counts(t: Tree) -> dict[tuple[int, int], int]:
    """``{(i, j): m_ij}`` with ``i <= j``, nonzero entries only, sorted by key."""
    deg = t.degree
    counts = Counter()
    for a, b in t.edges:
        i, j = deg[a], deg[b]
        counts[(i, j) if i <= j else (j, i)] += 1
    return dict(sorted(counts.items()))


# --------------------------------------------------------------------------
# Pruefer codes and random trees


def from_prufer(seq: Sequence[int]) -> Tree:
    """Decode a Pruefer sequence of length ``n - 2`` over ``0 .. n-1``."""
    n = len(seq) + 2
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, edges, check=False)


def to_prufer(t: Tree) -> list[int]:
    n = t.n
    adj = [set(nb) for nb in t.adjacency]
    leaves = [v for v in range(n) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (nb,) = adj[leaf]
        seq.append(nb)
        adj[nb].discard(leaf)
        if len(adj[nb]) == 1:
            heapq.heappush(leaves, nb)
    return seq


def random_tree(n: int, rng: random.Random | None = None, max_degree: int | None = None) -> Tree:
    """Random labeled tree on ``n`` vertices.

    Without a degree bound the tree is uniform over labeled trees (random
    Pruefer code).  With a bound, vertices are attached one at a time to a
    uniformly chosen vertex that still has room, then labels are shuffled.
    """
    rng = rng or random.Random()
    if n <= 2:
        return Tree(n, [(0, 1)] if n == 2 else [], check=False)
    if max_degree is None:
        return from_prufer([rng.randrange(n) for _ in range(n - 2)])
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2 for n > 2")
    deg = [0] * n
    open_ = [0]
    edges = []
    for v in range(1, n):
        i = rng.randrange(len(open_))
        u = open_[i]
        edges.append((u, v))
        deg[u] += 1
        deg[v] = 1
        if deg[u] == max_degree:
            open_[i] = open_[-1]
            open_.pop()
        open_.append(v)
    perm = list(range(n))
    rng.shuffle(perm)
    return Tree(n, [(perm[a], perm[b]) for a, b in edges], check=False)

