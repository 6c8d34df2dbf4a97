"""Composition powers of a single hypermatrix and the dimension of their span.

A composition of order ``n`` is any bracketing of ``n`` copies of the seed
under the ternary product; there are ``binom(3m, m) / (2m + 1)`` of them for
``n = 2m + 1`` (Fuss-Catalan numbers).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .core import Hypermatrix, as_hypermatrix
from .errors import DimensionError, OddOrderError, UnsupportedScalarError
from .linsolve import numerical_rank
from .ops import bm_product3

__all__ = [
    "CompositionList",
    "composition_list",
    "composition_count",
    "fuss_catalan",
    "span_matrix",
    "span_rank",
]


@dataclass(frozen=True)
class CompositionList:
    order: int
    items: tuple

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]


def _check_order(n: int) -> None:
    if n < 1 or n % 2 == 0:
        raise OddOrderError(f"composition order must be a positive odd integer, got {n}")


def _splits(n: int):
    """Order triples ``(i, j, n - i - j)`` with odd ``i, j``, in enumeration order."""
    for i in range(1, n, 2):
        for j in range(1, n - i, 2):
            yield i, j, n - i - j


def composition_list(A, n: int, _cache: dict | None = None) -> CompositionList:
    """Every ternary-product composition of ``n`` copies of ``A``.

    Ordering is deterministic: ascending ``i``, then ``j``, then the nested
    operand lists in order.  Duplicates are kept.
    """
    _check_order(n)
    A = as_hypermatrix(A)
    if A.order != 3:
        raise DimensionError(f"seed must have order 3, got shape {list(A.shape)}")
    cache = {} if _cache is None else _cache
    if n not in cache:
        if n == 1:
            items = [A]
        else:
            items = []
            for i, j, k in _splits(n):
                first = composition_list(A, i, cache).items
                second = composition_list(A, j, cache).items
                third = composition_list(A, k, cache).items
                items += [bm_product3(g1, g2, g3) for g1 in first for g2 in second for g3 in third]
        cache[n] = CompositionList(n, tuple(items))
    return cache[n]


@lru_cache(maxsize=None)
def composition_count(n: int) -> int:
    """Length of :func:`composition_list` for order ``n``, by the same recursion."""
    _check_order(n)
    if n == 1:
        return 1
    return sum(composition_count(i) * composition_count(j) * composition_count(k)
               for i, j, k in _splits(n))


def fuss_catalan(m: int) -> int:
    return comb(3 * m, m) // (2 * m + 1)


def span_matrix(A, max_order: int) -> np.ndarray:
    """Rows are the vectorized compositions of orders ``1, 3, ..., max_order``."""
    _check_order(max_order)
    A = as_hypermatrix(A)
    if A.dtype == object:
        raise UnsupportedScalarError("span computations need a numeric (real or complex) seed")
    cache: dict = {}
    rows = []
    for n in range(1, max_order + 1, 2):
        rows += [h.array.ravel() for h in composition_list(A, n, cache)]
    return np.array(rows, dtype=np.complex128 if A.dtype.kind == "c" else np.float64)


def span_rank(A, max_order: int, tol: float = 1e-10) -> int:
    """Numerical rank of :func:`span_matrix` with cutoff ``tol * sigma_max``."""
    return numerical_rank(span_matrix(A, max_order), tol)
