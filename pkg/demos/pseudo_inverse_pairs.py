# %% [markdown]
# # A least-squares inverse pair
#
# For a pair (A, B) we look for (R1, R2) undoing M -> M(A, B).  Taking logs
# turns the entrywise conditions into a linear system, solved by a Jacobi SVD
# pseudo-inverse.  For this pair no exact inverse exists and the residual map
# stays away from the identity.

# %%
import numpy as np

from hypermatrix import Hypermatrix
from hypermatrix.linsolve import pseudo_inverse_pairs, reconstruction_map

A1 = Hypermatrix([
    [[0.1631135370902057, 0.11600112072013125], [0.9823708115400902, 0.39605960486710756]],
    [[0.061860929755424676, 0.2325542810173995], [0.39111210957450926, 0.2019809359102137]],
])
A2 = Hypermatrix([
    [[0.15508921433883183, 0.17820377184410963], [0.48648171594508205, 0.01568017636082064]],
    [[0.8250247759993575, 0.1938307874191597], [0.23867299119274843, 0.3935578730402869]],
])

result = pseudo_inverse_pairs(A1, A2)
print("log system:", result.matrix.shape)
print(f"residual {result.residual:.4f}, normal residual {result.normal_residual:.1e}")
print(f"distance of the round trip from identity {result.reconstruction_error:.4f}")

# %%
np.set_printoptions(precision=3, suppress=True)
print(reconstruction_map(A1, A2, result.R1, result.R2).real)
