"""Closed-form F-maximal trees under a maximum-degree bound.

For ``n`` vertices and degree bound ``delta`` the maximal trees consist of
degree-``delta`` vertices and leaves, plus at most one vertex of residual
degree ``2 <= x <= delta - 1``.  Which case applies depends only on
``(n - 2) mod (delta - 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph import DegreeSpec

CASE_I = "I"
CASE_II = "II"


@dataclass(frozen=True)
class ExtremalSpec:
    n: int
    delta: int  # effective bound after clamping to n - 1
    case_tag: str
    x: int | None
    n_delta: int
    n_one: int
    f_value: int
    spec: DegreeSpec


def _check(n: int, delta: int) -> int:
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if delta < 2:
        raise DomainError(f"delta must be at least 2, got {delta}")
    return min(delta, n - 1)


def residue_degree(n: int, delta: int) -> int | None:
    """The residual degree ``x`` of case II, or ``None`` in case I.

    ``x`` is the unique value in ``[2, delta - 1]`` congruent to ``n - 1``
    modulo ``delta - 1``; the one missing residue class is case I.
    """
    if (n - 2) % (delta - 1) == 0:
        return None
    return 2 + (n - 3) % (delta - 1)


def extremal_spec(n: int, delta: int) -> ExtremalSpec:
    """Degree structure of the F-maximal trees with ``n`` vertices, max degree <= ``delta``.

    ``delta >= n - 1`` is clamped to ``n - 1`` (the star).
    """
    d = _check(n, delta)
    if n == 2:
        return ExtremalSpec(2, 1, CASE_I, None, 0, 2, 2, DegreeSpec(((1, 2),)))
    x = residue_degree(n, d)
    if x is None:
        n_delta = (n - 2) // (d - 1)
        n_one = (n * (d - 2) + 2) // (d - 1)
        f = d**3 * n_delta + n_one
        spec = DegreeSpec(((d, n_delta), (1, n_one)))
        return ExtremalSpec(n, d, CASE_I, None, n_delta, n_one, f, spec)
    n_delta = (n - 1 - x) // (d - 1)
    n_one = ((n - 1) * (d - 2) + x) // (d - 1)
    f = d**3 * n_delta + x**3 + n_one
    entries = [(d, n_delta), (x, 1), (1, n_one)]
    return ExtremalSpec(n, d, CASE_II, x, n_delta, n_one, f, DegreeSpec(tuple(entries)))


def f_max_formula(n: int, delta: int) -> int:
    """Maximal F-index over trees with ``n`` vertices and max degree <= ``delta``."""
    d = _check(n, delta)
    if n == 2:
        return 2
    x = residue_degree(n, d)
    if x is None:
        return d * (d + 1) * (n - 2) + 2 * (n - 1)
    return (d * d + d + 2) * (n - 1) - (d * d + d + 1) * x + x**3


def molecular_extremal_spec(n: int) -> ExtremalSpec:
    """F-maximal molecular tree (max degree 4).

    For ``n <= 5`` this is the star; from ``n = 6`` on it is the bounded case
    with ``delta = 4``, F = 22n - 42 or 22(n - 1) - 21x + x^3.
    """
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if n <= 5:
        return extremal_spec(n, n - 1 if n > 2 else 2)
    return extremal_spec(n, 4)
