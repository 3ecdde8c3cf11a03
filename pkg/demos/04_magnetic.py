"""
Two-colorings and magnetic point groups
=======================================

A perfect two-coloring exists exactly when 2 ramifies, i.e. n is a power of 2.
Then the point group is grey; otherwise only black-and-white groups occur.
"""

# %%
from cyclocolor import CLASS_NUMBER_ONE, context
from cyclocolor.magnetic import classify, format_symbol, two_coloring, BLACK_AND_WHITE

for n in CLASS_NUMBER_ONE[:12]:
    c = classify(context(n))
    print(f"n={n:3d}  N={context(n).N:3d}  {c.verdict:16s}  min norm above 2: {c.min_norm_above_2}")

# %%
m = two_coloring(context(8))
print("two-coloring of Z[xi_8]:", m)
print(classify(context(8)).symbol)

# %%
for choice in ("rotations", "mirror-1", "mirror-2"):
    print(choice, format_symbol(10, BLACK_AND_WHITE, choice))
