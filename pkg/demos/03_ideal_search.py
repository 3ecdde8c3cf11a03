"""
Finding principal ideals by a coefficient box search
====================================================

Small-coefficient elements are screened by a floating point norm, then
identified exactly by the Hermite normal form of their multiplication matrix.
"""

# %%
from collections import Counter

from cyclocolor import analyze, context, enumerate_ideals

ctx = context(16)
catalog = enumerate_ideals(ctx, max_norm=64, coeff_bound=1)
print(len(catalog), "ideals of norm <= 64 in Z[xi_16]")
print(Counter(e.norm for e in catalog))

# %%
for e in catalog[:8]:
    r = analyze(ctx, e.sample_generator)
    print(f"{e.norm:4d}  {str(e.sample_generator):18s}  {r.H_descriptor:14s}  {r.K_descriptor}")

# %%
# associates give the same ideal
from cyclocolor.idealsearch import ideal_key
from cyclocolor import parse_generator

a = parse_generator("1-x", ctx)
print(ideal_key(a) == ideal_key(a * parse_generator("-x^5", ctx)))
