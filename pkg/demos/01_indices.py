"""
Degree-based indices on small trees
===================================

Every index in the package is a function of vertex degrees, so the star and
the path sit at opposite ends of each scale.  This script evaluates them side
by side.
"""
# %%
from fextremal.graph import path_tree, star_tree, validate_tree
from fextremal.indices import (
    f_index,
    first_zagreb,
    general_first_zagreb,
    randic_index,
    second_zagreb,
)

# %%
# A star, a path and a "broom" (a path with a bunch of leaves at one end).
trees = {
    "star S6": star_tree(6),
    "path P6": path_tree(6),
    "broom": validate_tree(6, [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5)]),
}

print(f"{'tree':<10}{'F':>6}{'M1':>6}{'M2':>6}{'R':>10}{'M1^-1/2':>10}")
for name, t in trees.items():
    print(f"{name:<10}{f_index(t):>6}{first_zagreb(t):>6}{second_zagreb(t):>6}"
          f"{randic_index(t):>10.5f}{general_first_zagreb(t, -0.5):>10.5f}")

# %%
# For integer exponents the general first Zagreb index stays an exact
# integer, even when the values get big.
big = path_tree(100_000)
print(general_first_zagreb(big, 7), "=", 2 + (100_000 - 2) * 2**7)
