"""Integer program over degree-class counts ``n_i`` and edge-type counts ``m_ij``.

maximize   sum_i i^3 n_i
subject to sum_i n_i = n                                   (vertices)
           sum_i i n_i = 2(n - 1)                          (handshake)
           sum_{i=2}^{delta-1} n_i <= 1                    (one middle vertex)
           sum_{j != i} m_ij + 2 m_ii = i n_i, all i       (per-class handshake)
           0 <= n_i <= n - 1,  0 <= m_ij <= n - 1

The exact solver enumerates the O(delta) degree vectors allowed by the
middle-vertex row.  :func:`branch_and_bound` is an independent LP-based check.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linprog

from .errors import DomainError, Infeasible, NotRealizable
from .graph import Tree, is_tree_degree_sequence
from .transform import realize_degree_sequence


@dataclass(frozen=True)
class Constraint:
    coeffs: dict  # variable -> coefficient
    sense: str  # "==" or "<="
    rhs: int
    name: str = ""


@dataclass(frozen=True)
class IlpInstance:
    n: int
    delta: int

    @property
    def n_vars(self) -> list[tuple]:
        return [("n", i) for i in range(1, self.delta + 1)]

    @property
    def m_vars(self) -> list[tuple]:
        d = self.delta
        return [("m", i, j) for i in range(1, d + 1) for j in range(i, d + 1)]

    @property
    def variables(self) -> list[tuple]:
        return self.n_vars + self.m_vars

    @property
    def objective(self) -> dict:
        return {("n", i): i**3 for i in range(1, self.delta + 1)}

    def upper_bound(self, var: tuple) -> int:
        return self.n - 1

    def constraints(self) -> list[Constraint]:
        n, d = self.n, self.delta
        rows = [
            Constraint({("n", i): 1 for i in range(1, d + 1)}, "==", n, "vertices"),
            Constraint({("n", i): i for i in range(1, d + 1)}, "==", 2 * (n - 1), "handshake"),
        ]
        if d >= 3:
            rows.append(Constraint({("n", i): 1 for i in range(2, d)}, "<=", 1, "middle"))
        for i in range(1, d + 1):
            row = {("n", i): -i}
            for j in range(1, d + 1):
                key = ("m", min(i, j), max(i, j))
                row[key] = 2 if i == j else 1
            rows.append(Constraint(row, "==", 0, f"class{i}"))
        return rows

    def to_arrays(self):
        """Dense ``(c, A_eq, b_eq, A_ub, b_ub, upper)`` in variable order."""
        vars_ = self.variables
        index = {v: k for k, v in enumerate(vars_)}
        c = np.zeros(len(vars_))
        for v, coef in self.objective.items():
            c[index[v]] = coef
        eq, beq, ub, bub = [], [], [], []
        for row in self.constraints():
            a = np.zeros(len(vars_))
            for v, coef in row.coeffs.items():
                a[index[v]] = coef
            if row.sense == "==":
                eq.append(a)
                beq.append(row.rhs)
            else:
                ub.append(a)
                bub.append(row.rhs)
        upper = np.array([self.upper_bound(v) for v in vars_], dtype=float)
        A_ub = np.array(ub) if ub else None
        b_ub = np.array(bub, dtype=float) if ub else None
        return c, np.array(eq), np.array(beq, dtype=float), A_ub, b_ub, upper


@dataclass(frozen=True)
class IlpSolution:
    n: int
    delta: int
    ni: dict = field(default_factory=dict)  # degree -> count, nonzero only
    mij: dict = field(default_factory=dict)  # (i, j) with i <= j -> count, nonzero only
    objective: int = 0

    def nonzero(self) -> dict[str, int]:
        """Nonzero variables named ``n4`` / ``m1_4`` in degree order."""
        out = {f"n{i}": c for i, c in sorted(self.ni.items()) if c}
        out.update({f"m{i}_{j}": c for (i, j), c in sorted(self.mij.items()) if c})
        return out

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(i for i, c in sorted(self.ni.items(), reverse=True) for _ in range(c))

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "delta": self.delta,
                "ni": {str(i): c for i, c in sorted(self.ni.items())},
                "mij": {f"{i},{j}": c for (i, j), c in sorted(self.mij.items())},
                "objective": self.objective,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "IlpSolution":
        data = json.loads(text)
        mij = {}
        for key, c in data.get("mij", {}).items():
            i, j = (int(s) for s in key.split(","))
            mij[(min(i, j), max(i, j))] = int(c)
        return cls(
            int(data["n"]),
            int(data["delta"]),
            {int(i): int(c) for i, c in data.get("ni", {}).items()},
            mij,
            int(data["objective"]),
        )


def build_instance(n: int, delta: int) -> IlpInstance:
    if n < 3:
        raise DomainError(f"need n >= 3, got {n}")
    if not 2 <= delta <= n - 1:
        raise DomainError(f"need 2 <= delta <= n - 1, got delta={delta}, n={n}")
    return IlpInstance(n, delta)


def _complete_edges(n_one: int, n_delta: int, delta: int, x: int | None) -> dict:
    """Edge-type counts for degree vector ``[delta^n_delta, x^1?, 1^n_one]``.

    Leaves go to degree-``delta`` vertices first.  The non-leaf vertices form a
    skeleton tree; the middle vertex takes as many skeleton edges as it can, so
    that ``m_{1,delta}`` is as large as a tree realization allows.
    """
    m: dict = {}

    def add(i, j, c):
        if c:
            key = (min(i, j), max(i, j))
            m[key] = m.get(key, 0) + c

    k = n_delta + (1 if x is not None else 0)  # skeleton size
    if x is None:
        add(1, delta, n_one)
        add(delta, delta, k - 1)
        return m
    to_delta = min(x, k - 1)
    add(x, delta, to_delta)
    add(1, x, x - to_delta)
    add(delta, delta, (k - 1) - to_delta)
    add(1, delta, n_one - (x - to_delta))
    return m


def _candidates(n: int, delta: int):
    """Degree vectors allowed by the vertex, handshake and middle-vertex rows."""
    yield None, n - 2
    for x in range(2, delta):
        yield x, n - 1 - x


def solve(inst: IlpInstance) -> IlpSolution:
    """Exact optimum; ties prefer no middle vertex, then the smallest one."""
    n, d = inst.n, inst.delta
    best = None
    for x, rem in _candidates(n, d):
        if rem < 0 or rem % (d - 1):
            continue
        n_delta = rem // (d - 1)
        n_one = n - n_delta - (0 if x is None else 1)
        if n_one < 0 or n_delta > n - 1 or n_one > n - 1:
            continue
        if x is not None and n_delta == 0:
            continue
        obj = d**3 * n_delta + n_one + (x**3 if x is not None else 0)
        if best is None or obj > best[0]:
            best = (obj, x, n_delta, n_one)
    if best is None:
        raise Infeasible(f"no feasible degree vector for n={n}, delta={d}")
    obj, x, n_delta, n_one = best
    ni = {1: n_one, d: n_delta}
    if x is not None:
        ni[x] = 1
    ni = {i: c for i, c in sorted(ni.items()) if c}
    return IlpSolution(n, d, ni, _complete_edges(n_one, n_delta, d, x), obj)


def _value(sol: IlpSolution, var: tuple) -> int:
    if var[0] == "n":
        return sol.ni.get(var[1], 0)
    return sol.mij.get((var[1], var[2]), 0)


def verify_solution(inst: IlpInstance, sol: IlpSolution) -> bool:
    """True iff ``sol`` satisfies every row and bound and its objective is consistent."""
    d = inst.delta
    if any(not 1 <= i <= d for i in sol.ni):
        return False
    if any(not 1 <= i <= j <= d for i, j in sol.mij):
        return False
    for var in inst.variables:
        if not 0 <= _value(sol, var) <= inst.upper_bound(var):
            return False
    for row in inst.constraints():
        lhs = sum(coef * _value(sol, v) for v, coef in row.coeffs.items())
        if row.sense == "==" and lhs != row.rhs:
            return False
        if row.sense == "<=" and lhs > row.rhs:
            return False
    return sol.objective == sum(coef * _value(sol, v) for v, coef in inst.objective.items())


def realize_solution(sol: IlpSolution) -> Tree:
    """A tree whose degree multiset is ``sol.ni``.

    The edge-type counts of the result may differ from ``sol.mij``: the
    program does not model connectivity, so only the degree vector is used.
    """
    seq = sol.degree_sequence()
    if len(seq) != sol.n or not is_tree_degree_sequence(seq):
        raise NotRealizable(f"degree vector {sol.ni} is not realizable by a tree on {sol.n} vertices")
    return realize_degree_sequence(seq)


def branch_and_bound(inst: IlpInstance, tol: float = 1e-7, max_nodes: int = 200_000) -> IlpSolution:
    """Generic depth-first LP branch and bound over all variables.

    Relaxations are solved with HiGHS through :func:`scipy.optimize.linprog`.
    The objective has integer coefficients, so a node is pruned once
    ``floor(bound) <= incumbent``.
    """
    c, A_eq, b_eq, A_ub, b_ub, upper = inst.to_arrays()
    nvar = len(c)
    n_count = inst.delta  # degree-count variables come first and are branched on first
    best_val, best_x = -math.inf, None
    root_bound = math.inf
    stack = [(np.zeros(nvar), upper.copy())]
    nodes = 0
    while stack:
        lo, hi = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            raise RuntimeError(f"branch and bound exceeded {max_nodes} nodes")
        res = linprog(-c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=b_eq,
                      bounds=np.column_stack([lo, hi]), method="highs")
        if res.status != 0:
            continue
        bound = -res.fun
        if nodes == 1:
            root_bound = math.floor(bound + tol)
        if math.floor(bound + tol) <= best_val:
            continue
        x = res.x
        frac = np.abs(x - np.round(x))
        k = int(np.argmax(frac[:n_count]))
        if frac[k] <= tol:
            k = int(np.argmax(frac))
        if frac[k] <= tol:
            xi = np.round(x).astype(np.int64)
            val = int(round(float(c @ xi)))
            if val > best_val:
                best_val, best_x = val, xi
            if best_val >= root_bound:
                break
            continue
        down_hi = hi.copy()
        down_hi[k] = math.floor(x[k])
        up_lo = lo.copy()
        up_lo[k] = math.ceil(x[k])
        stack.append((lo, down_hi))
        stack.append((up_lo, hi))
    if best_x is None:
        raise Infeasible(f"no integer point for n={inst.n}, delta={inst.delta}")
    ni, mij = {}, {}
    for var, val in zip(inst.variables, best_x.tolist()):
        if val:
            if var[0] == "n":
                ni[var[1]] = val
            else:
                mij[(var[1], var[2])] = val
    return IlpSolution(inst.n, inst.delta, ni, mij, best_val)
