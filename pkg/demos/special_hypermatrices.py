# %% [markdown]
# # Delta, permutation, diagonal and orthogonal hypermatrices

# %%
import math

import numpy as np

from hypermatrix import bm_product3, entry_pow, generate_labeled, generate_sym_matrix, transpose_k
from hypermatrix.special import (
    diagonal_from_matrix,
    kronecker_delta,
    orthogonal_2x2x2,
    orthogonal_3x3x3,
    orthogonality_product,
    permutation_hypermatrix,
    slice_permute,
)

D = kronecker_delta(3)
print("delta reproduces itself:", bm_product3(D, transpose_k(D, 2), transpose_k(D, 1)) == D)

# %% [markdown]
# Swapping the first two row slices of a symbolic hypermatrix with a product.

# %%
A = generate_labeled([3, 3, 3], "a")
print(permutation_hypermatrix([1, 0, 2]).tolist())
swapped = slice_permute(A, [1, 0, 2], "row")
print("row 0 now holds", swapped[0, 0, 0], swapped[0, 1, 2])

# %% [markdown]
# Diagonal hypermatrices behave like diagonal matrices: the triple product
# cubes the entries.

# %%
Dg = diagonal_from_matrix(generate_sym_matrix(2, "lambda"))
print(bm_product3(Dg.T, transpose_k(Dg, 2), Dg) == entry_pow(Dg, 3))

# %% [markdown]
# Two orthogonal families, checked numerically.

# %%
for Q in (orthogonal_2x2x2(math.e / math.pi), orthogonal_3x3x3(math.e / math.pi, math.pi / math.e)):
    n = Q.shape[0]
    dev = np.max(np.abs(orthogonality_product(Q).array - kronecker_delta(n).array))
    print(f"{n}x{n}x{n}: max deviation from delta {dev:.2e}")
