"""Kronecker delta, permutation, diagonal and orthogonal hypermatrices."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import permutations as _all_perms
from typing import Iterator

import numpy as np

from .core import Hypermatrix, as_hypermatrix, ones
from .errors import DimensionError, DomainError, PermutationError, ShapeError
from .ops import bm_product3, cyclic_transpose, transpose_k

__all__ = [
    "Permutation",
    "involutions",
    "kronecker_delta",
    "permutation_hypermatrix",
    "permutation_hypermatrix_constructive",
    "slice_permute",
    "direct_slice_permute",
    "diagonal_from_matrix",
    "orthogonal_2x2x2",
    "orthogonal_3x3x3",
    "orthogonality_product",
]

AXES = ("row", "column", "depth")


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{0, ..., n-1}`` given by its list of images."""

    image: tuple

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if not image or sorted(image) != list(range(len(image))):
            raise PermutationError(f"{list(self.image)} is not a permutation of 0..{len(image) - 1}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition ``(self * other)(i) = self(other(i))``."""
        if self.n != other.n:
            raise PermutationError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.image[j] for j in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    @property
    def is_involution(self) -> bool:
        return all(self.image[j] == i for i, j in enumerate(self.image))


def involutions(n: int) -> Iterator[Permutation]:
    """All involutions on ``n`` points, in lexicographic order of images."""
    for p in _all_perms(range(n)):
        if all(p[j] == i for i, j in enumerate(p)):
            yield Permutation(p)


def _as_perm(sigma) -> Permutation:
    return sigma if isinstance(sigma, Permutation) else Permutation(tuple(sigma))


def kronecker_delta(n: int) -> Hypermatrix:
    """The ``n x n x n`` hypermatrix with ones exactly where ``i == j == k``."""
    if n < 1:
        raise ShapeError(f"Kronecker delta size must be >= 1, got {n}")
    arr = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        arr[i, i, i] = 1
    return Hypermatrix(arr)


def permutation_hypermatrix(sigma) -> Hypermatrix:
    """0/1 hypermatrix with ``P[i, j, k] = 1`` iff ``k == sigma(j)``."""
    sigma = _as_perm(sigma)
    n = sigma.n
    arr = np.zeros((n, n, n), dtype=np.int64)
    for j in range(n):
        arr[:, j, sigma(j)] = 1
    return Hypermatrix(arr)


def permutation_hypermatrix_constructive(sigma) -> Hypermatrix:
    """Same hypermatrix built by products: identity pattern, row shuffle, two rotations."""
    sigma = _as_perm(sigma)
    n = sigma.n
    U = ones(n, n, n)
    pattern = cyclic_transpose(bm_product3(U, U, kronecker_delta(n)))
    shuffled = Hypermatrix(np.stack([pattern.array[sigma(i)] for i in range(n)]))
    return transpose_k(shuffled, 2)


def slice_permute(A, sigma, axis: str) -> Hypermatrix:
    """Permute the row, column or depth slices of ``A`` via products with ``P_sigma``.

    Each pattern carries a factor ``[sigma(sigma(i)) == i]``, so only
    involutions are accepted.  Decompose other permutations into
    transpositions and apply them one at a time.
    """
    A = as_hypermatrix(A)
    sigma = _as_perm(sigma)
    if not sigma.is_involution:
        raise PermutationError(
            f"{list(sigma.image)} is not an involution; express the permutation as a "
            "product of transpositions and apply each in turn"
        )
    if A.shape != (sigma.n,) * 3:
        raise DimensionError(f"expected a {sigma.n}x{sigma.n}x{sigma.n} hypermatrix, got {list(A.shape)}")
    P = permutation_hypermatrix(sigma)
    Pt, Ptt = transpose_k(P, 1), transpose_k(P, 2)
    if axis == "row":
        return bm_product3(Pt, Ptt, A)
    if axis == "column":
        return bm_product3(A, P, Pt)
    if axis == "depth":
        return bm_product3(P, A, Ptt)
    raise ValueError(f"axis must be one of {AXES}, got {axis!r}")


def direct_slice_permute(A, sigma, axis: str) -> Hypermatrix:
    """Reference slice permutation by fancy indexing: ``result[i] = A[sigma(i)]`` along ``axis``."""
    A = as_hypermatrix(A)
    sigma = _as_perm(sigma)
    return Hypermatrix(np.take(A.array, list(sigma.image), axis=AXES.index(axis)))


def diagonal_from_matrix(M) -> Hypermatrix:
    """Diagonal hypermatrix ``D[i, j, k] = [j == k] * M[min(i, k), max(i, k)]``.

    Only the upper triangle of the square matrix ``M`` is read.
    """
    M = as_hypermatrix(M)
    if M.order != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {list(M.shape)}")
    n = M.shape[0]
    m = M.array
    arr = np.empty((n, n, n), dtype=object)
    zero = m[0, 0] * 0
    for i, j, k in np.ndindex(n, n, n):
        arr[i, j, k] = m[min(i, k), max(i, k)] if j == k else zero
    return Hypermatrix(arr)


def _check_angle(name, value):
    if not 0.0 < value < math.pi / 2:
        raise DomainError(f"{name}={value!r} must lie strictly inside (0, pi/2)")


def orthogonal_2x2x2(theta: float) -> Hypermatrix:
    _check_angle("theta", theta)
    c = math.cos(theta) ** (2 / 3)
    s = math.sin(theta) ** (2 / 3)
    return Hypermatrix([[[c, s], [s, c]], [[-s, c], [s, s]]])


def orthogonal_3x3x3(t1: float, t2: float) -> Hypermatrix:
    """Two-parameter family of complex 3 x 3 x 3 orthogonal hypermatrices."""
    _check_angle("t1", t1)
    _check_angle("t2", t2)
    c1 = math.cos(t1) ** (2 / 3)
    s1 = math.sin(t1) ** (2 / 3)
    c2 = math.cos(t2) ** (2 / 3)
    s2 = math.sin(t2) ** (2 / 3)
    w = cmath.exp(-2j * math.pi / 3)
    wb = cmath.exp(2j * math.pi / 3)
    return Hypermatrix(np.array([
        [[c1, s1 * c2, 0], [s1 * c2, s1 * s2, 0], [s1 * s2, w * c1, 0]],
        [[s1 * s2, c1, w * s1 * c2], [wb * c1, s1 * c2, s1 * s2], [s1 * c2, s1 * s2, c1]],
        [[0, s1 * s2, c1], [0, c1, s1 * c2], [0, wb * s1 * c2, s1 * s2]],
    ], dtype=np.complex128))


def orthogonality_product(Q) -> Hypermatrix:
    """``Q(Q^{T^2}, Q^T)``; equals the Kronecker delta when ``Q`` is orthogonal."""
    Q = as_hypermatrix(Q)
    return bm_product3(Q, transpose_k(Q, 2), transpose_k(Q, 1))

