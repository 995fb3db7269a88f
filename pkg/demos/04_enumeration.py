"""
Counting free trees
===================

The generator walks canonical level sequences of free trees, one per
isomorphism class.  Filters on maximum degree or an exact degree spec are
applied while walking.
"""
# %%
import time

from fextremal.enumeration import EnumFilter, count_with_spec, generate_free_trees
from fextremal.graph import DegreeSpec

# %%
for n in range(1, 16):
    t0 = time.perf_counter()
    total = sum(1 for _ in generate_free_trees(n))
    molecular = sum(1 for _ in generate_free_trees(n, EnumFilter(max_degree=4)))
    print(f"n={n:>2}  trees={total:>6}  max degree <= 4: {molecular:>5}  ({time.perf_counter() - t0:.2f}s)")

# %%
# How many ways can the F-maximal degree spec be realized?
for n, spec in [(13, "4^3,3^1,1^9"), (15, "4^4,2^1,1^10"), (18, "4^5,2^1,1^12")]:
    print(n, spec, count_with_spec(n, DegreeSpec.parse(spec)))
