"""
Growing a path into an extremal tree
====================================

Moving a branch from a lower-degree vertex to a higher-degree one raises F
because cubes are convex.  Repeating the move until at most one
middle-degree vertex is left gives an F-maximal tree.
"""
# %%
from fextremal.extremal import extremal_spec
from fextremal.graph import degree_spec, degrees, path_tree
from fextremal.indices import f_index
from fextremal.transform import extremalize, f_delta

# %%
trace = []
t = extremalize(path_tree(12), 4, trace)
for st in trace:
    print(f"step {st['step']:>2}: move {st['w']} from {st['v']} to {st['u']}   "
          f"F {st['f_before']} -> {st['f_after']}")

# %%
print("final spec", degree_spec(degrees(t)), "F =", f_index(t))
print("closed form", extremal_spec(12, 4).spec, "F =", extremal_spec(12, 4).f_value)

# %%
# The gain of a single move only depends on the two degrees involved.
for du, dv in [(2, 2), (3, 2), (5, 3)]:
    print(f"f_delta({du}, {dv}) = {f_delta(du, dv)}")
