"""
H and K for the n=15 and n=16 reference rows
============================================

Each row is one principal ideal; analyze() returns the color symmetry group H
and the color fixing group K.
"""

# %%
import time

from cyclocolor import analyze, context, parse_generator
from cyclocolor.tables import reference_rows

for n in (15, 16):
    ctx = context(n)
    t0 = time.perf_counter()
    print(f"n = {n}")
    for row in reference_rows(n):
        r = analyze(ctx, parse_generator(row.generator_text, ctx))
        flag = "" if (r.ell, r.H_descriptor, r.K_descriptor) == (row.ell, row.H_text, row.K_text) else "  <-- differs"
        print(f"  {r.ell:4d}  {r.H_descriptor:14s}  {r.K_descriptor:14s}  {row.generator_text}{flag}")
    print(f"  ({time.perf_counter() - t0:.2f} s)\n")

# %%
# the fast and per-coset computations of K agree
from cyclocolor import build_model, fixing_group_fast, fixing_group_by_cosets

m = build_model(context(15), parse_generator("1-x^3", context(15)))
print(fixing_group_fast(m).K_descriptor, "|", fixing_group_by_cosets(m).K_descriptor)
