"""Isomorphism-free generation of free trees and exhaustive extremal search.

Free trees are produced as canonical level sequences (root at a center,
level 0) in reverse lexicographic order with the successor rule of Wright,
Richmond, Odlyzko and McKay, which runs in constant amortized time per tree.
"""
from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .errors import DomainError, NotRealizable
from .graph import DegreeSpec, Tree, degree_spec, expand, is_tree_degree_sequence

ENUM_CEILING = 24


@dataclass(frozen=True)
class EnumFilter:
    max_degree: int | None = None
    degree_spec: DegreeSpec | None = None

    def __post_init__(self):
        if self.degree_spec is not None and not is_tree_degree_sequence(expand(self.degree_spec)):
            raise NotRealizable(f"{self.degree_spec} is not a tree degree spec")


@dataclass
class MaxFReport:
    n: int
    delta: int
    f_max: int
    winning_specs: list[DegreeSpec]
    counts: list[int]
    representatives: list[list[Tree]] = field(default_factory=list)
    mode: str = "max"
    alpha: int = 3

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "f_max": self.f_max,
            "specs": [str(s) for s in self.winning_specs],
            "counts": self.counts,
            "representatives": [
                [[list(e) for e in t.edges] for t in reps] for reps in self.representatives
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


# --------------------------------------------------------------------------
# level sequences


def _next_rooted(L: list[int], p: int) -> list[int] | None:
    """Successor of rooted level sequence ``L`` obtained by decrementing at ``p``."""
    if p == 0:
        return None
    lp = L[p] - 1
    q = p - 1
    while L[q] != lp:
        q -= 1
    out = L[:p]
    shift = p - q
    for i in range(p, len(L)):
        out.append(out[i - shift])
    return out


def _first_subtree_end(L: list[int]) -> int:
    """Index where the root's second subtree starts (``len(L)`` if none)."""
    for i in range(2, len(L)):
        if L[i] == 1:
            return i
    return len(L)


def _canonical_free(L: list[int]) -> list[int] | None:
    """Smallest-step advance of ``L`` to a level sequence that is a canonical free tree.

    The root's first subtree must not be taller than the rest of the tree; on
    equal heights it must not be larger, and on equal sizes it must not be
    lexicographically larger.
    """
    n = len(L)
    while True:
        m = _first_subtree_end(L)
        left_h = max(L[1:m]) - 1
        rest_h = max(L[m:], default=0)
        ok = rest_h >= left_h
        if ok and rest_h == left_h:
            n_left, n_rest = m - 1, n - m + 1
            if n_left > n_rest:
                ok = False
            elif n_left == n_rest and [v - 1 for v in L[1:m]] > [0] + L[m:]:
                ok = False
        if ok:
            return L
        p = m - 1
        tall = L[p] > 2
        L = _next_rooted(L, p)
        if L is None:
            return None
        if tall:
            m2 = _first_subtree_end(L)
            h = max(L[1:m2])
            L[n - h:] = range(1, h + 1)


def level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """One canonical level sequence per free tree on ``n`` vertices."""
    if n < 1:
        return
    if n <= 2:
        yield tuple(range(n))
        return
    L = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while True:
        L = _canonical_free(L)
        if L is None:
            return
        yield tuple(L)
        p = n - 1
        while L[p] == 1:
            p -= 1
        L = _next_rooted(L, p)
        if L is None:
            return


def level_parents(L) -> list[int]:
    last = [0] * (len(L) + 1)
    parents = [0] * len(L)
    for i in range(1, len(L)):
        lv = L[i]
        parents[i] = last[lv - 1]
        last[lv] = i
    return parents


def level_degrees(L) -> list[int]:
    n = len(L)
    deg = [1] * n
    deg[0] = 0
    last = [0] * (n + 1)
    for i in range(1, n):
        lv = L[i]
        deg[last[lv - 1]] += 1
        last[lv] = i
    return deg


def level_tree(L) -> Tree:
    parents = level_parents(L)
    return Tree(len(L), [(parents[i], i) for i in range(1, len(L))], check=False)


# --------------------------------------------------------------------------
# generation and search


def _check_n(n: int, ceiling: int) -> None:
    if n < 1 or n > ceiling:
        raise DomainError(f"n={n} outside the enumeration range 1..{ceiling}")


def _filtered_levels(n: int, max_degree: int | None, spec_key: tuple | None):
    """Yield ``(level_sequence, sorted_degrees)`` passing the filters."""
    for L in level_sequences(n):
        deg = level_degrees(L)
        if max_degree is not None and max(deg) > max_degree:
            continue
        if spec_key is not None:
            key = tuple(sorted(deg, reverse=True))
            if key != spec_key:
                continue
        yield L, deg


def generate_free_trees(
    n: int, filter: EnumFilter | None = None, ceiling: int = ENUM_CEILING
) -> Iterator[Tree]:
    """Yield one tree per isomorphism class on ``n`` vertices that passes ``filter``."""
    _check_n(n, ceiling)
    filter = filter or EnumFilter()
    max_deg = filter.max_degree
    spec_key = None
    if filter.degree_spec is not None:
        spec_key = expand(filter.degree_spec)
        if len(spec_key) != n and n > 1:
            return
        bound = filter.degree_spec.max_degree
        max_deg = bound if max_deg is None else min(max_deg, bound)
    for L, _ in _filtered_levels(n, max_deg, spec_key):
        yield level_tree(L)


def count_with_spec(n: int, spec: DegreeSpec, ceiling: int = ENUM_CEILING) -> int:
    """Number of non-isomorphic trees with exactly the degree multiset ``spec``."""
    seq = expand(spec)
    if len(seq) != n or not is_tree_degree_sequence(seq):
        raise NotRealizable(f"{spec} is not a tree degree spec on {n} vertices")
    _check_n(n, ceiling)
    return sum(1 for _ in _filtered_levels(n, spec.max_degree, seq))


def extremal_search(
    n: int,
    delta: int | None = None,
    alpha: int = 3,
    maximize: bool = True,
    k: int | None = 10,
    ceiling: int = ENUM_CEILING,
) -> MaxFReport:
    """Exhaustive optimum of ``sum d(v)**alpha`` over free trees with max degree <= ``delta``.

    ``k`` caps the representatives kept per winning degree spec (``None``
    keeps all).
    """
    _check_n(n, ceiling)
    if delta is not None and delta < 1:
        raise DomainError(f"delta must be positive, got {delta}")
    if n == 1:
        t = Tree(1, [], check=False)
        return MaxFReport(1, 0, 0, [DegreeSpec(())], [1], [[t]], "max" if maximize else "min", alpha)
    sign = 1 if maximize else -1
    best = None
    counts: Counter = Counter()
    reps: dict[tuple, list] = {}
    for L, deg in _filtered_levels(n, delta, None):
        val = sum(d**alpha for d in deg)
        if best is not None and sign * val < sign * best:
            continue
        key = tuple(sorted(deg, reverse=True))
        if best is None or sign * val > sign * best:
            best = val
            counts.clear()
            reps.clear()
        counts[key] += 1
        bucket = reps.setdefault(key, [])
        if k is None or len(bucket) < k:
            bucket.append(L)
    if best is None:
        raise DomainError(f"no tree on {n} vertices has max degree <= {delta}")
    keys = sorted(counts, reverse=True)
    return MaxFReport(
        n=n,
        delta=n - 1 if delta is None else min(delta, n - 1),
        f_max=best,
        winning_specs=[degree_spec(key) for key in keys],
        counts=[counts[key] for key in keys],
        representatives=[[level_tree(L) for L in reps[key]] for key in keys],
        mode="max" if maximize else "min",
        alpha=alpha,
    )


def max_f_search(n: int, delta: int, k: int | None = 10, ceiling: int = ENUM_CEILING) -> MaxFReport:
    """Maximal F-index over all free trees with ``n`` vertices and max degree <= ``delta``."""
    return extremal_search(n, delta, 3, True, k, ceiling)


def min_f_search(n: int, k: int | None = 10, ceiling: int = ENUM_CEILING) -> MaxFReport:
    """Minimal F-index over all free trees on ``n`` vertices."""
    return extremal_search(n, None, 3, False, k, ceiling)


def worker_count() -> int:
    """Parallelism cap from ``FEXTREMAL_THREADS`` (default: number of cores)."""
    raw = os.environ.get("FEXTREMAL_THREADS")
    cores = os.cpu_count() or 1
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return cores


def _search_job(args):
    n, delta, k, ceiling = args
    return max_f_search(n, delta, k, ceiling)


def max_f_search_many(ns, delta: int, k: int | None = 10, ceiling: int = ENUM_CEILING) -> list[MaxFReport]:
    """:func:`max_f_search` for several orders; independent orders run in parallel.

    Results come back in the order of ``ns`` whatever the worker count.
    """
    jobs = [(n, delta, k, ceiling) for n in ns]
    workers = min(worker_count(), len(jobs))
    if workers <= 1:
        return [_search_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_search_job, jobs))
