# %% [markdown]
# # Ternary products on symbolic hypermatrices
#
# Entries can be exact polynomials over named atoms, so product formulas can
# be read off directly.

# %%
from hypermatrix import (
    bm_product3,
    bm_product3_background,
    general_bm_product,
    generate_labeled,
    kronecker_delta,
    transpose_k,
)

A, B, C = (generate_labeled([2, 2, 2], p) for p in "abc")
P = bm_product3(A, B, C)
print("entry (0,0,0):", P[0, 0, 0])

# %% [markdown]
# The cyclic transpose moves the last index to the front; three applications
# return an order-3 hypermatrix to itself.

# %%
print("A^T at (0,0,1):", A.T[0, 0, 1])
print("three transposes give A back:", transpose_k(A, 3) == A)

# %% [markdown]
# With the delta as background the product collapses to the plain one, while a
# generic background mixes in every index combination.

# %%
T = generate_labeled([2, 2, 2], "t")
print(bm_product3_background(A, B, C, kronecker_delta(2)) == P)
print("generic background, entry (0,0,0):")
print(" ", bm_product3_background(A, B, C, T)[0, 0, 0])

# %% [markdown]
# The general product reduces to the matrix product for two operands.

# %%
M, N = generate_labeled([2, 2], "m"), generate_labeled([2, 2], "n")
print(general_bm_product(M, N))
