"""
Colored cut-and-project patches
===============================

Points of Z[xi_n] whose internal image lies in a ball are kept and colored by
their coset. Writes SVG files to the current directory.
"""

# %%
from cyclocolor import context, parse_generator, build_model
from cyclocolor.render import ProjectionSetup, cut_and_project, emit_svg

jobs = [(4, "1+x", 0.5), (5, "1-x", 1.0), (8, "1+x", 1.0), (12, "2+x", 1.0)]
for n, gen, window in jobs:
    ctx = context(n)
    model = build_model(ctx, parse_generator(gen, ctx))
    patch = cut_and_project(ProjectionSetup(ctx, window, 8.0), model)
    out = f"patch_n{n}.svg"
    emit_svg(patch, out)
    print(f"{out}: {len(patch)} points, {len(patch.colors())} of {model.ell} colors")
