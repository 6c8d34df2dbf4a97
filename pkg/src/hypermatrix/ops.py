"""Bhattacharya-Mesner algebra: entrywise operations, cyclic transposes and products.

Products are evaluated by looping over the contraction index in ascending
order and accumulating whole broadcast slabs, so the same code path serves
float, complex, exact rational and symbolic entries, and float results are
reproducible bit for bit.
"""
from __future__ import annotations

import numbers

import numpy as np

from .core import Hypermatrix, as_hypermatrix, require_same_shape
from .errors import DimensionError, UnsupportedScalarError
from .expr import Expression

__all__ = [
    "hm_add",
    "hm_scale",
    "hm_hadamard",
    "entry_pow",
    "base_pow",
    "cyclic_transpose",
    "transpose_k",
    "bm_product3",
    "bm_product3_background",
    "general_bm_product",
]


def _map(arr: np.ndarray, fn) -> np.ndarray:
    out = np.empty(arr.shape, dtype=object)
    out.ravel()[:] = [fn(v) for v in arr.ravel()]
    return out


def hm_add(A, B) -> Hypermatrix:
    A, B = as_hypermatrix(A), as_hypermatrix(B)
    require_same_shape(A, B, "addition")
    return Hypermatrix(A.array + B.array)


def hm_hadamard(A, B) -> Hypermatrix:
    """Entrywise product of two hypermatrices of the same shape."""
    A, B = as_hypermatrix(A), as_hypermatrix(B)
    require_same_shape(A, B, "Hadamard product")
    return Hypermatrix(A.array * B.array)


def hm_scale(A, s) -> Hypermatrix:
    A = as_hypermatrix(A)
    if isinstance(s, Expression) or A.dtype == object:
        return Hypermatrix(_map(A.array, lambda v: s * v))
    return Hypermatrix(s * A.array)


def entry_pow(A, s) -> Hypermatrix:
    """Raise every entry to the power ``s``.

    Symbolic entries accept only non-negative integer exponents.
    """
    A = as_hypermatrix(A)
    if A.dtype == object:
        return Hypermatrix(_map(A.array, lambda v: v ** s))
    return Hypermatrix(np.power(A.array, s))


def base_pow(s, A) -> Hypermatrix:
    """Hypermatrix of entries ``s ** a``; numeric scalars only."""
    A = as_hypermatrix(A)
    if isinstance(s, Expression) or not isinstance(s, numbers.Number):
        raise UnsupportedScalarError(f"base must be a numeric scalar, got {s!r}")
    if A.dtype == object:
        if any(isinstance(v, Expression) for v in A.array.ravel()):
            raise UnsupportedScalarError("base_pow is undefined for symbolic entries")
        return Hypermatrix(_map(A.array, lambda v: s ** v))
    return Hypermatrix(np.power(s, A.array))


def cyclic_transpose(A) -> Hypermatrix:
    """Rotate indices: ``result[i0, ..., il] = A[il, i0, ..., i(l-1)]``."""
    A = as_hypermatrix(A)
    if A.order < 2:
        raise UnsupportedScalarError("cyclic transpose needs order >= 2")
    axes = tuple(range(1, A.order)) + (0,)
    return Hypermatrix(np.transpose(A.array, axes))


def transpose_k(A, t: int) -> Hypermatrix:
    A = as_hypermatrix(A)
    for _ in range(t % A.order):
        A = cyclic_transpose(A)
    return A


def _require_order(H, order, name):
    if H.order != order:
        raise DimensionError(f"{name} must have order {order}, got shape {list(H.shape)}")


def _check_equal(pairs):
    for label, a, b in pairs:
        if a != b:
            raise DimensionError(f"dimension mismatch: {label} ({a} != {b})")


def bm_product3(A, B, C) -> Hypermatrix:
    """Ternary product of order-3 hypermatrices.

    For ``A`` m x k x p, ``B`` m x n x k and ``C`` k x n x p the result is
    m x n x p with ``result[i, j, c] = sum_t A[i, t, c] * B[i, j, t] * C[t, j, c]``.
    """
    A, B, C = map(as_hypermatrix, (A, B, C))
    for H, name in ((A, "A"), (B, "B"), (C, "C")):
        _require_order(H, 3, name)
    _check_equal([
        ("A rows vs B rows", A.shape[0], B.shape[0]),
        ("B columns vs C columns", B.shape[1], C.shape[1]),
        ("C depth vs A depth", C.shape[2], A.shape[2]),
        ("A columns vs B depth", A.shape[1], B.shape[2]),
        ("B depth vs C rows", B.shape[2], C.shape[0]),
    ])
    a, b, c = A.array, B.array, C.array
    acc = None
    for t in range(A.shape[1]):
        term = a[:, t, :][:, None, :] * b[:, :, t][:, :, None] * c[t, :, :][None, :, :]
        acc = term if acc is None else acc + term
    return Hypermatrix(acc)


def bm_product3_background(A, B, C, T) -> Hypermatrix:
    """Ternary product weighted by a background hypermatrix ``T``.

    ``result[i, j, c] = sum_{u, v, w} A[i, u, c] * B[i, j, v] * C[w, j, c] * T[u, v, w]``
    with ``T`` of shape l x l x l; summation runs over ``u``, then ``v``, then ``w``.
    """
    A, B, C, T = map(as_hypermatrix, (A, B, C, T))
    for H, name in ((A, "A"), (B, "B"), (C, "C"), (T, "T")):
        _require_order(H, 3, name)
    l = A.shape[1]
    _check_equal([
        ("A rows vs B rows", A.shape[0], B.shape[0]),
        ("B columns vs C columns", B.shape[1], C.shape[1]),
        ("C depth vs A depth", C.shape[2], A.shape[2]),
        ("A columns vs B depth", l, B.shape[2]),
        ("B depth vs C rows", B.shape[2], C.shape[0]),
        ("A columns vs background rows", l, T.shape[0]),
        ("A columns vs background columns", l, T.shape[1]),
        ("A columns vs background depth", l, T.shape[2]),
    ])
    a, b, c, w = A.array, B.array, C.array, T.array
    acc = None
    for u in range(l):
        for v in range(l):
            for x in range(l):
                term = (a[:, u, :][:, None, :] * b[:, :, v][:, :, None]
                        * c[x, :, :][None, :, :] * w[u, v, x])
                acc = term if acc is None else acc + term
    return Hypermatrix(acc)


def general_bm_product(*args) -> Hypermatrix:
    """Product of ``l`` hypermatrices of order ``l``.

    Output dimension ``d`` is operand ``d``'s dimension ``d``; the contraction
    runs over operand 0's dimension 1.  Operand ``s`` is read with index
    position ``(s + 1) mod l`` replaced by the contraction index, so ``l = 2``
    is the matrix product and ``l = 3`` agrees with :func:`bm_product3`.
    """
    if len(args) < 2:
        raise DimensionError("The number of operands must be >= 2")
    ops = [as_hypermatrix(H) for H in args]
    l = len(ops)
    for s, H in enumerate(ops):
        if H.order != l:
            raise DimensionError(
                f"with {l} operands every operand must have order {l}; "
                f"operand {s} has shape {list(H.shape)}"
            )
    out = [ops[d].shape[d] for d in range(l)]
    K = ops[0].shape[1]
    for s, H in enumerate(ops):
        r = (s + 1) % l
        expected = list(out)
        expected[r] = K
        if list(H.shape) != expected:
            raise DimensionError(
                f"operand {s} has shape {list(H.shape)}, expected {expected}"
            )
    acc = None
    for t in range(K):
        term = None
        for s, H in enumerate(ops):
            r = (s + 1) % l
            piece = np.expand_dims(np.take(H.array, t, axis=r), r)
            term = piece if term is None else term * piece
        acc = term if acc is None else acc + term
    return Hypermatrix(acc)
