"""Dense hypermatrix algebra built around the Bhattacharya-Mesner product."""
from .cayley import (
    CompositionList,
    composition_count,
    composition_list,
    fuss_catalan,
    span_matrix,
    span_rank,
)
from .core import (
    Hypermatrix,
    create,
    delinearize,
    generate_labeled,
    generate_sym3,
    generate_sym_matrix,
    linearize,
    ones,
    scalar_kind,
    vectorize,
    zeros,
)
from .errors import *  # noqa: F401,F403
from .expr import Expression, Monomial, atom, constant, parse
from .linsolve import (
    AffineConstraint,
    PinvPairResult,
    constraint_formator,
    numerical_rank,
    pseudo_inverse_pairs,
    reconstruction_map,
    singular_values,
    svd,
    svd_pinv,
)
from .ops import (
    base_pow,
    bm_product3,
    bm_product3_background,
    cyclic_transpose,
    entry_pow,
    general_bm_product,
    hm_add,
    hm_hadamard,
    hm_scale,
    transpose_k,
)
from .special import (
    Permutation,
    diagonal_from_matrix,
    direct_slice_permute,
    involutions,
    kronecker_delta,
    orthogonal_2x2x2,
    orthogonal_3x3x3,
    orthogonality_product,
    permutation_hypermatrix,
    permutation_hypermatrix_constructive,
    slice_permute,
)

__version__ = "0.1.0"
