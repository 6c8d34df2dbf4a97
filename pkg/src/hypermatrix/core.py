"""Dense hypermatrix storage, shapes, flat indexing and labeled generators.

Entries are held in a read-only numpy array whose C-order flattening is the
canonical vectorization: the last index varies fastest.  Three storage
classes are used and chosen automatically from the entries:

* ``float64`` for real floats,
* ``complex128`` for complex floats,
* ``object`` for exact scalars (``int``, :class:`~fractions.Fraction`) and
  symbolic :class:`~hypermatrix.expr.Expression` entries.
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError, LabelError, ShapeError
from .expr import Expression, atom

__all__ = [
    "Hypermatrix",
    "as_hypermatrix",
    "check_shape",
    "create",
    "zeros",
    "ones",
    "generate_labeled",
    "generate_sym_matrix",
    "generate_sym3",
    "vectorize",
    "linearize",
    "delinearize",
    "scalar_kind",
]

MAX_LABEL_DIM = 10


def check_shape(shape) -> tuple[int, ...]:
    try:
        dims = tuple(int(d) for d in shape)
    except TypeError:
        raise ShapeError(f"shape must be a sequence of integers, got {shape!r}") from None
    if not dims:
        raise ShapeError("shape must have at least one dimension")
    if any(d < 1 for d in dims):
        raise ShapeError(f"every dimension must be >= 1, got {list(dims)}")
    return dims


def _exact(value):
    # numpy integer scalars would silently overflow in object arrays
    if isinstance(value, (bool, np.bool_)):
        return int(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


def _normalize(arr: np.ndarray) -> np.ndarray:
    kind = arr.dtype.kind
    if kind == "f":
        return arr.astype(np.float64, copy=False)
    if kind == "c":
        return arr.astype(np.complex128, copy=False)
    if kind in "iub":
        out = np.empty(arr.shape, dtype=object)
        out.ravel()[:] = [int(v) for v in arr.ravel().tolist()]
        return out
    if kind != "O":
        raise TypeError(f"unsupported entry dtype {arr.dtype}")

    flat = arr.ravel()
    has_expr = has_complex = has_float = False
    for v in flat:
        if isinstance(v, Expression):
            has_expr = True
        elif isinstance(v, (numbers.Rational, np.bool_)):
            pass
        elif isinstance(v, numbers.Real):
            has_float = True
        elif isinstance(v, numbers.Complex):
            has_complex = True
        else:
            raise TypeError(f"unsupported scalar {v!r} of type {type(v).__name__}")
    if has_expr:
        if has_float or has_complex:
            raise TypeError("cannot mix floating-point scalars with symbolic expressions")
        return arr
    if has_complex:
        return arr.astype(np.complex128)
    if has_float:
        return arr.astype(np.float64)
    out = np.empty(arr.shape, dtype=object)
    out.ravel()[:] = [_exact(v) for v in flat]
    return out


def _nested_shape(data) -> tuple[int, ...]:
    dims = []
    node = data
    while isinstance(node, (list, tuple)):
        if not node:
            raise ShapeError("nested lists must be non-empty")
        dims.append(len(node))
        node = node[0]
    return tuple(dims)


def _flatten_nested(data, dims, depth=0, out=None):
    if out is None:
        out = []
    if depth == len(dims):
        if isinstance(data, (list, tuple)):
            raise ShapeError("nested lists are ragged (too deep)")
        out.append(data)
        return out
    if not isinstance(data, (list, tuple)) or len(data) != dims[depth]:
        raise ShapeError(f"nested lists are ragged at depth {depth}")
    for item in data:
        _flatten_nested(item, dims, depth + 1, out)
    return out


class Hypermatrix:
    """An immutable dense hypermatrix of arbitrary order.

    Build one from nested lists, a numpy array, or another hypermatrix::

        >>> H = Hypermatrix([[[1, 0], [0, 0]], [[0, 0], [0, 1]]])
        >>> H.shape, H[1, 1, 1]
        ((2, 2, 2), 1)
    """

    __slots__ = ("_data",)

    def __init__(self, data):
        if isinstance(data, Hypermatrix):
            self._data = data._data
            return
        if isinstance(data, np.ndarray):
            arr = data
            if arr.ndim == 0:
                raise ShapeError("a hypermatrix needs order >= 1")
            check_shape(arr.shape)
        else:
            dims = _nested_shape(data)
            check_shape(dims)
            flat = _flatten_nested(data, dims)
            arr = np.empty(len(flat), dtype=object)
            arr[:] = flat
            arr = arr.reshape(dims)
        arr = np.array(_normalize(arr), copy=True, order="C")
        arr.flags.writeable = False
        self._data = arr

    @classmethod
    def from_flat(cls, shape: Sequence[int], entries: Iterable) -> "Hypermatrix":
        dims = check_shape(shape)
        flat = list(entries)
        count = int(np.prod(dims))
        if len(flat) != count:
            raise ShapeError(f"shape {list(dims)} needs {count} entries, got {len(flat)}")
        arr = np.empty(count, dtype=object)
        arr[:] = flat
        return cls(arr.reshape(dims))

    # -- basic accessors --------------------------------------------------

    @property
    def array(self) -> np.ndarray:
        """The read-only entry array."""
        return self._data

    @property
    def shape(self) -> tuple[int, ...]:
        return self._data.shape

    @property
    def order(self) -> int:
        return self._data.ndim

    @property
    def size(self) -> int:
        return self._data.size

    @property
    def dtype(self):
        return self._data.dtype

    def __getitem__(self, index):
        if not isinstance(index, tuple):
            index = (index,)
        if len(index) != self.order or not all(isinstance(i, (int, np.integer)) for i in index):
            raise IndexError(f"expected {self.order} integer indices, got {index!r}")
        for i, n in zip(index, self.shape):
            if not 0 <= i < n:
                raise IndexError(f"index {tuple(index)} out of range for shape {list(self.shape)}")
        return self._data[index]

    def entries(self) -> list:
        """Entries in canonical (last-index-fastest) order."""
        return self._data.ravel().tolist()

    def tolist(self) -> list:
        return self._data.tolist()

    def __iter__(self):
        raise TypeError("iterate over H.entries() or H.array instead")

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return all(a == b for a, b in zip(self._data.ravel(), other._data.ravel()))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return f"Hypermatrix({_render(self.tolist())!r})"

    def __str__(self):
        return str(_render(self.tolist()))

    # -- operator sugar; the functions in hypermatrix.ops are canonical ---

    def __add__(self, other):
        from .ops import hm_add
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        return hm_add(self, other)

    def __sub__(self, other):
        from .ops import hm_add, hm_scale
        if not isinstance(other, Hypermatrix):
            return NotImplemented
        return hm_add(self, hm_scale(other, -1))

    def __neg__(self):
        from .ops import hm_scale
        return hm_scale(self, -1)

    def __mul__(self, other):
        from .ops import hm_hadamard, hm_scale
        if isinstance(other, Hypermatrix):
            return hm_hadamard(self, other)
        return hm_scale(self, other)

    def __rmul__(self, other):
        from .ops import hm_scale
        return hm_scale(self, other)

    def transpose(self, times: int = 1) -> "Hypermatrix":
        """Cyclic transpose applied ``times`` times (mod the order)."""
        from .ops import transpose_k
        return transpose_k(self, times)

    @property
    def T(self) -> "Hypermatrix":
        return self.transpose(1)

    def __call__(self, *others: "Hypermatrix") -> "Hypermatrix":
        """``A(B, C)`` is the product of ``A`` with ``B`` and ``C``."""
        from .ops import general_bm_product
        return general_bm_product(self, *others)

    def evaluate(self, bindings) -> "Hypermatrix":
        """Numeric hypermatrix obtained by substituting values for atoms."""
        out = np.empty(self.shape, dtype=np.complex128)
        flat = out.ravel()
        for n, v in enumerate(self._data.ravel()):
            flat[n] = v.evaluate(bindings) if isinstance(v, Expression) else complex(v)
        return Hypermatrix(out)


def _render(node):
    if isinstance(node, list):
        return [_render(x) for x in node]
    if isinstance(node, (Expression, Fraction)):
        return _Str(str(node))
    return node


class _Str(str):
    def __repr__(self):
        return str(self)


def as_hypermatrix(value) -> Hypermatrix:
    return value if isinstance(value, Hypermatrix) else Hypermatrix(value)


def scalar_kind(H: Hypermatrix) -> str:
    """One of ``'rational'``, ``'real'``, ``'complex'``, ``'expression'``."""
    kind = H.dtype.kind
    if kind == "f":
        return "real"
    if kind == "c":
        return "complex"
    if any(isinstance(v, Expression) for v in H.array.ravel()):
        return "expression"
    return "rational"


def create(shape: Sequence[int], fill) -> Hypermatrix:
    """Hypermatrix of the given shape with every entry equal to ``fill``."""
    dims = check_shape(shape)
    arr = np.empty(dims, dtype=object)
    arr.fill(fill)
    return Hypermatrix(arr)


def zeros(*dims: int) -> Hypermatrix:
    return create(dims, 0)


def ones(*dims: int) -> Hypermatrix:
    return create(dims, 1)


def _check_labels(dims, prefix):
    if not isinstance(prefix, str) or not prefix:
        raise LabelError("label prefix must be a non-empty string")
    if any(d > MAX_LABEL_DIM for d in dims):
        raise LabelError(
            f"labeled generation concatenates single digits; dimensions {list(dims)} "
            f"exceed {MAX_LABEL_DIM}"
        )


def generate_labeled(shape: Sequence[int], prefix: str) -> Hypermatrix:
    """Symbolic hypermatrix whose entry ``(i0, ..., il)`` is the atom ``prefix i0...il``.

    >>> generate_labeled([2, 2], "m")
    Hypermatrix([[m00, m01], [m10, m11]])
    """
    dims = check_shape(shape)
    _check_labels(dims, prefix)
    return Hypermatrix.from_flat(
        dims, (atom(prefix + "".join(map(str, idx))) for idx in np.ndindex(*dims))
    )


def generate_sym_matrix(n: int, prefix: str) -> Hypermatrix:
    """Symbolic symmetric ``n x n`` matrix labeled by ``prefix min(i,j) max(i,j)``."""
    dims = check_shape([n, n])
    _check_labels(dims, prefix)
    return Hypermatrix.from_flat(
        dims, (atom(f"{prefix}{min(i, j)}{max(i, j)}") for i, j in np.ndindex(n, n))
    )


def _sym3_label(i, j, k):
    lo, hi = min(i, j, k), max(i, j, k)
    mid = i + j + k - lo - hi
    if i == j or i == k or j == k:
        return f"{lo}{mid}{hi}"
    # cyclic rotations of the sorted triple share one label, the other three another
    if (i == lo and k == hi) or (k == lo and j == hi) or (i == hi and j == lo):
        return f"{lo}{mid}{hi}"
    return f"{mid}{lo}{hi}"


def generate_sym3(n: int, prefix: str) -> Hypermatrix:
    """Symbolic ``n x n x n`` hypermatrix invariant under cyclic index rotation."""
    dims = check_shape([n, n, n])
    _check_labels(dims, prefix)
    return Hypermatrix.from_flat(
        dims, (atom(prefix + _sym3_label(*idx)) for idx in np.ndindex(n, n, n))
    )


def vectorize(A: Hypermatrix) -> list:
    """Entries of ``A`` in canonical order, last index fastest."""
    return as_hypermatrix(A).entries()


def linearize(shape: Sequence[int], index: Sequence[int]) -> int:
    dims = check_shape(shape)
    index = tuple(index)
    if len(index) != len(dims):
        raise IndexError(f"index {index} has wrong length for shape {list(dims)}")
    flat = 0
    for i, n in zip(index, dims):
        if not 0 <= i < n:
            raise IndexError(f"index {index} out of range for shape {list(dims)}")
        flat = flat * n + i
    return flat


def delinearize(shape: Sequence[int], flat: int) -> tuple[int, ...]:
    dims = check_shape(shape)
    count = int(np.prod(dims))
    if not 0 <= flat < count:
        raise IndexError(f"flat index {flat} out of range for shape {list(dims)}")
    index = []
    for n in reversed(dims):
        flat, r = divmod(flat, n)
        index.append(r)
    return tuple(reversed(index))


def require_same_shape(A: Hypermatrix, B: Hypermatrix, what: str) -> None:
    if A.shape != B.shape:
        raise DimensionError(
            f"{what}: shapes {list(A.shape)} and {list(B.shape)} must match"
        )
