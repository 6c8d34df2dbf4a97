# %% [markdown]
# # How many hypermatrices do the composition powers of one seed span?
#
# Every bracketing of an odd number of copies of a seed gives a product.  For a
# generic seed these products fill the whole space.

# %%
import math

import numpy as np

from hypermatrix import Hypermatrix
from hypermatrix.cayley import composition_count, span_rank
from hypermatrix.special import orthogonal_2x2x2

print("compositions per order:", {n: composition_count(n) for n in range(1, 12, 2)})

# %%
rng = np.random.default_rng(3)
for n, max_order in ((2, 7), (3, 9)):
    seed = Hypermatrix(rng.uniform(0.1, 1.0, size=(n, n, n)))
    print(f"random {n}x{n}x{n}: span rank {span_rank(seed, max_order)} of {n ** 3}")

print("orthogonal seed:", span_rank(orthogonal_2x2x2(math.e / math.pi), 7))
