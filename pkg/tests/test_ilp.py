import itertools
import random

import pytest

from fextremal.errors import DomainError
from fextremal.extremal import extremal_spec, f_max_formula
from fextremal.graph import canonical_code, degrees, path_tree
from fextremal.ilp import (
    IlpSolution,
    branch_and_bound,
    build_instance,
    realize_solution,
    solve,
    verify_solution,
)
from fextremal.indices import f_index

TABLE_12 = IlpSolution(12, 4, {1: 8, 2: 1, 4: 3}, {(1, 4): 8, (2, 4): 2, (4, 4): 1}, 208)


def test_instance_shape_molecular():
    inst = build_instance(20, 4)
    assert inst.objective == {("n", 1): 1, ("n", 2): 8, ("n", 3): 27, ("n", 4): 64}
    assert len(inst.n_vars) == 4 and len(inst.m_vars) == 10
    rows = {r.name: r for r in inst.constraints()}
    assert rows["vertices"].rhs == 20 and rows["handshake"].rhs == 38
    assert rows["middle"].coeffs == {("n", 2): 1, ("n", 3): 1} and rows["middle"].sense == "<="
    assert rows["class2"].coeffs[("m", 2, 2)] == 2 and rows["class2"].coeffs[("n", 2)] == -2
    assert all(inst.upper_bound(v) == 19 for v in inst.variables)


def test_instance_arrays():
    c, A_eq, b_eq, A_ub, b_ub, upper = build_instance(10, 3).to_arrays()
    assert c.shape == (3 + 6,)
    assert A_eq.shape == (2 + 3, 9) and A_ub.shape == (1, 9)
    assert (upper == 9).all()


def test_no_middle_row_for_paths():
    rows = [r.name for r in build_instance(7, 2).constraints()]
    assert "middle" not in rows


@pytest.mark.parametrize("n, delta", [(2, 2), (5, 1), (5, 5), (5, 7)])
def test_instance_domain(n, delta):
    with pytest.raises(DomainError):
        build_instance(n, delta)


def test_solve_examples():
    sol = solve(build_instance(12, 4))
    assert sol == TABLE_12
    assert sol.nonzero() == {"n1": 8, "n2": 1, "n4": 3, "m1_4": 8, "m2_4": 2, "m4_4": 1}
    sol = solve(build_instance(5, 4))
    assert sol.ni == {1: 4, 4: 1} and sol.mij == {(1, 4): 4} and sol.objective == 68
    sol = solve(build_instance(19, 5))
    assert sol.objective == 522 and sol.ni == {1: 14, 2: 1, 5: 4}


def test_small_instance_brute_force():
    # n=3, delta=2: the degree counts are forced to n1=2, n2=1.  The rows do not
    # encode connectivity, so besides m12=2 (P3) the edge counts also admit
    # m11=1, m22=1 (an edge plus a loop), which no tree realizes.
    inst = build_instance(3, 2)
    feasible = []
    for vals in itertools.product(range(3), repeat=len(inst.variables)):
        ni = {v[1]: x for v, x in zip(inst.variables, vals) if v[0] == "n" and x}
        mij = {(v[1], v[2]): x for v, x in zip(inst.variables, vals) if v[0] == "m" and x}
        obj = sum(i**3 * c for i, c in ni.items())
        cand = IlpSolution(3, 2, ni, mij, obj)
        if verify_solution(inst, cand):
            feasible.append(cand)
    assert {tuple(sorted(f.ni.items())) for f in feasible} == {((1, 2), (2, 1))}
    assert sorted(tuple(sorted(f.mij.items())) for f in feasible) == [
        (((1, 1), 1), ((2, 2), 1)),
        (((1, 2), 2),),
    ]
    assert solve(inst) in feasible and solve(inst).mij == {(1, 2): 2}
    assert canonical_code(realize_solution(solve(inst))) == canonical_code(path_tree(3))


def test_verify_examples():
    inst = build_instance(12, 4)
    assert verify_solution(inst, TABLE_12)
    bad = IlpSolution(12, 4, TABLE_12.ni, {**TABLE_12.mij, (2, 4): 3}, 208)
    assert not verify_solution(inst, bad)
    assert not verify_solution(inst, IlpSolution(12, 4, {}, {}, 0))
    wrong_obj = IlpSolution(12, 4, TABLE_12.ni, TABLE_12.mij, 209)
    assert not verify_solution(inst, wrong_obj)


def test_realize_example():
    t = realize_solution(TABLE_12)
    assert t.n == 12 and degrees(t) == (4, 4, 4, 2) + (1,) * 8 and f_index(t) == 208


def test_large_molecular_instance():
    sol = solve(build_instance(1000, 4))
    t = realize_solution(sol)
    # 999 = 3 * 332 + 3, so the middle vertex has degree 3
    assert sol.ni == {1: 667, 3: 1, 4: 332}
    assert f_index(t) == sol.objective == f_max_formula(1000, 4) == 21942


def test_json_round_trip():
    sol = solve(build_instance(17, 5))
    assert IlpSolution.from_json(sol.to_json()) == sol


def test_solve_grid_matches_closed_form():
    rng = random.Random(7)
    for delta in range(2, 21):
        for n in range(delta + 1, 2001):
            inst = build_instance(n, delta)
            sol = solve(inst)
            spec = extremal_spec(n, delta)
            assert sol.objective == spec.f_value
            assert dict(spec.spec.entries) == sol.ni
            if rng.random() < 0.02:
                assert verify_solution(inst, sol)


def test_solutions_verify_small():
    for delta in range(2, 9):
        for n in range(delta + 1, 80):
            inst = build_instance(n, delta)
            assert verify_solution(inst, solve(inst))


def test_branch_and_bound_agrees():
    for delta in range(2, 9):
        for n in range(delta + 1, 61, 3):
            inst = build_instance(n, delta)
            bb = branch_and_bound(inst)
            assert verify_solution(inst, bb)
            assert bb.objective == solve(inst).objective
