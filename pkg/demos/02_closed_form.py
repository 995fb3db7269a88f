"""
F-maximal degree sequences from the closed form
===============================================

With the maximum degree capped at ``delta``, an F-maximal tree has as many
degree-``delta`` vertices as possible, at most one vertex of intermediate
degree ``x``, and leaves everywhere else.
"""
# %%
from fextremal.extremal import extremal_spec, f_max_formula, molecular_extremal_spec

# %%
# The residue of ``n - 2`` modulo ``delta - 1`` decides whether a middle
# vertex is needed.
for n in range(8, 14):
    s = extremal_spec(n, 4)
    print(f"n={n:>2}  case {s.case_tag:<2}  x={s.x}  spec [{s.spec}]  F={s.f_value}")

# %%
# Molecular trees (max degree 4) follow ``22n - 42`` whenever no middle vertex
# is needed.
for n in (11, 14, 17, 20):
    print(n, molecular_extremal_spec(n).f_value, 22 * n - 42)

# %%
# The formula is instant even for huge orders.
print(f_max_formula(10**9, 10**4))
