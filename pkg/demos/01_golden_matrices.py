"""
Multiplication matrices and the perfect-coloring test
=====================================================

An ideal <alpha> of Z[xi_n] is a sublattice with basis matrix S = mult_matrix(alpha).
A coloring by its cosets is perfect exactly when S^-1 B S is an integer matrix.
"""

# %%
from cyclocolor import context, parse_generator, mult_matrix, reflection_matrix, rotation_matrix
from cyclocolor.intlat import divides, determinant

m5 = context(5)
S5 = mult_matrix(parse_generator("1-x", m5))
B5 = reflection_matrix(m5)
print("S_5 =\n", S5)
print("B_5 =\n", B5)

# %%
# the index of the sublattice is |det S|, also the number of colors
print("det S_5 =", determinant(S5))

# the reflection maps the ideal onto itself: perfect
print("S_5^-1 B_5 S_5 integral:", divides(S5, B5.dot(S5)))

# %%
m7 = context(7)
S7 = mult_matrix(parse_generator("1-x-x^3", m7))
B7 = reflection_matrix(m7)
print("det S_7 =", determinant(S7))
print("S_7^-1 B_7 S_7 integral:", divides(S7, B7.dot(S7)))

# rotations always preserve a principal ideal
A7 = rotation_matrix(m7)
print("S_7^-1 A_7 S_7 integral:", divides(S7, A7.dot(S7)))
