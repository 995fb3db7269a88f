"""Degree-based topological indices of trees.

Integer exponents are evaluated in exact integer arithmetic; any other
exponent falls back to floating point.
"""
from __future__ import annotations

import math
from numbers import Real

from .errors import InvalidAlpha
from .graph import Tree


def _exact_exponent(alpha) -> int | None:
    if isinstance(alpha, bool):
        return None
    if isinstance(alpha, int):
        return alpha if alpha >= 0 else None
    if isinstance(alpha, Real) and float(alpha).is_integer() and alpha >= 0:
        return int(alpha)
    return None


def _check_alpha(alpha) -> None:
    if alpha == 0 or alpha == 1:
        raise InvalidAlpha(f"alpha must differ from 0 and 1, got {alpha}")


def f_index(t: Tree) -> int:
    """Forgotten index: sum of cubed vertex degrees."""
    return sum(d * d * d for d in t.degree)


def first_zagreb(t: Tree) -> int:
    return sum(d * d for d in t.degree)


def second_zagreb(t: Tree) -> int:
    deg = t.degree
    return sum(deg[a] * deg[b] for a, b in t.edges)


def general_first_zagreb(t: Tree, alpha: float) -> int | float:
    """Sum of ``d(v) ** alpha`` over all vertices.

    Exact integer for non-negative integer ``alpha``, float otherwise.
    ``alpha`` in {0, 1} raises :class:`InvalidAlpha`.
    """
    _check_alpha(alpha)
    k = _exact_exponent(alpha)
    if k is not None:
        return sum(d**k for d in t.degree if d)
    a = float(alpha)
    return math.fsum(d**a for d in t.degree if d)


# identical computation under its other name
zeroth_order_general_randic = general_first_zagreb


def general_first_zagreb_edge_form(t: Tree, alpha: float) -> int | float:
    """Edge-sum form ``sum over uv of d(u)**(alpha-1) + d(v)**(alpha-1)``.

    Agrees with :func:`general_first_zagreb` on every tree with at least one edge
    (each vertex of degree d contributes d terms of ``d**(alpha-1)``).
    """
    _check_alpha(alpha)
    deg = t.degree
    k = _exact_exponent(alpha)
    if k is not None:
        k -= 1
        return sum(deg[a] ** k + deg[b] ** k for a, b in t.edges)
    a1 = float(alpha) - 1.0
    return math.fsum(deg[a] ** a1 + deg[b] ** a1 for a, b in t.edges)


def randic_index(t: Tree) -> float:
    deg = t.degree
    return math.fsum(1.0 / math.sqrt(deg[a] * deg[b]) for a, b in t.edges)


INDICES = {
    "f": f_index,
    "m1": first_zagreb,
    "m2": second_zagreb,
    "m1alpha": general_first_zagreb,
    "r0alpha": zeroth_order_general_randic,
    "randic": randic_index,
}
