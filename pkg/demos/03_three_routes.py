"""
Three independent routes to the same optimum
============================================

The closed form, the integer program over degree-class counts, and an
exhaustive search over all free trees should agree on the maximal F-index and
on the maximizing degree spec.
"""
# %%
from fextremal.ilp import branch_and_bound, build_instance
from fextremal.tables import run_routes

# %%
res = run_routes(13, 4)
print("closed form :", res.closed.f_value, res.closed.spec)
print("integer LP  :", res.ilp.objective, res.ilp.nonzero())
print("enumeration :", res.enum.f_max, [str(s) for s in res.enum.winning_specs], res.enum.counts)

# %%
# The structured solver is checked against a plain LP branch and bound.
inst = build_instance(13, 4)
print("branch and bound:", branch_and_bound(inst).objective)

# %%
# One representative of each non-isomorphic extremal tree, as edge lists.
for t in res.enum.representatives[0]:
    print(list(t.edges))
