"""Independent oracles used to freeze expected values.

Nothing here imports the generator or the closed form: free-tree counts come
from decoding every Pruefer sequence and deduplicating with a separate
canonical form (minimum over all roots of a bit-packed rooted encoding), and
F maxima come from brute force over integer degree sequences.
"""
from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _prufer_decode(seq, n, adj, deg_out):
    deg = np.ones(n, np.int64)
    for v in seq:
        deg[v] += 1
    for i in range(n):
        deg_out[i] = 0
    for v in seq:
        leaf = 0
        while deg[leaf] != 1:
            leaf += 1
        adj[leaf, deg_out[leaf]] = v
        deg_out[leaf] += 1
        adj[v, deg_out[v]] = leaf
        deg_out[v] += 1
        deg[leaf] = 0
        deg[v] -= 1
    a = -1
    for i in range(n):
        if deg[i] == 1:
            if a < 0:
                a = i
            else:
                adj[a, deg_out[a]] = i
                deg_out[a] += 1
                adj[i, deg_out[i]] = a
                deg_out[i] += 1
                break


@njit(cache=True)
def _rooted_value(root, n, adj, deg, order, parent, val, ln, kv, kl):
    for i in range(n):
        parent[i] = -1
    order[0] = root
    parent[root] = root
    head, tail = 0, 1
    while head < tail:
        v = order[head]
        head += 1
        for k in range(deg[v]):
            w = adj[v, k]
            if parent[w] == -1:
                parent[w] = v
                order[tail] = w
                tail += 1
    for idx in range(n - 1, -1, -1):
        v = order[idx]
        m = 0
        for k in range(deg[v]):
            w = adj[v, k]
            if parent[w] == v and w != v:
                kv[m] = val[w]
                kl[m] = ln[w]
                m += 1
        # insertion sort children by (length, value)
        for i in range(1, m):
            a, b = kv[i], kl[i]
            j = i - 1
            while j >= 0 and (kl[j] > b or (kl[j] == b and kv[j] > a)):
                kv[j + 1] = kv[j]
                kl[j + 1] = kl[j]
                j -= 1
            kv[j + 1] = a
            kl[j + 1] = b
        code = 1
        total = 1
        for i in range(m):
            code = (code << kl[i]) | kv[i]
            total += kl[i]
        val[v] = code << 1
        ln[v] = total + 1
    return val[root]


@njit(cache=True)
def _all_codes(n):
    total = n ** (n - 2)
    out = np.empty(total, np.int64)
    seq = np.zeros(n - 2, np.int64)
    adj = np.empty((n, n), np.int64)
    deg = np.empty(n, np.int64)
    work = [np.empty(n, np.int64) for _ in range(6)]
    order, parent, val, ln, kv, kl = work[0], work[1], work[2], work[3], work[4], work[5]
    for idx in range(total):
        r = idx
        for i in range(n - 2):
            seq[i] = r % n
            r //= n
        _prufer_decode(seq, n, adj, deg)
        best = _rooted_value(0, n, adj, deg, order, parent, val, ln, kv, kl)
        for root in range(1, n):
            c = _rooted_value(root, n, adj, deg, order, parent, val, ln, kv, kl)
            if c < best:
                best = c
        out[idx] = best
    return out


def prufer_class_count(n: int) -> int:
    """Number of unlabeled trees on ``n`` vertices by exhaustive Pruefer decoding."""
    if n <= 2:
        return 1
    return int(np.unique(_all_codes(n)).size)


def degree_sequences(n: int, max_degree: int):
    """All non-increasing sequences of ``n`` degrees in ``[1, max_degree]`` summing to 2(n-1)."""
    target = 2 * (n - 1)

    def rec(prefix, remaining_sum, remaining_len, cap):
        if remaining_len == 0:
            if remaining_sum == 0:
                yield tuple(prefix)
            return
        lo = max(1, remaining_sum - cap * (remaining_len - 1))
        for d in range(min(cap, remaining_sum - (remaining_len - 1)), lo - 1, -1):
            prefix.append(d)
            yield from rec(prefix, remaining_sum - d, remaining_len - 1, d)
            prefix.pop()

    yield from rec([], target, n, max_degree)


def brute_force_f_max(n: int, max_degree: int):
    """``(F_max, [maximizing sequences])`` over every tree degree sequence.

    Any positive sequence summing to 2(n-1) is realized by some tree, so this
    is the maximum over all trees with max degree <= ``max_degree``.
    """
    best, arg = None, []
    for seq in degree_sequences(n, max_degree):
        f = sum(d**3 for d in seq)
        if best is None or f > best:
            best, arg = f, [seq]
        elif f == best:
            arg.append(seq)
    return best, arg
