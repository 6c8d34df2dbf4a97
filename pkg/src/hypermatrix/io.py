"""Self-describing JSON documents for hypermatrices.

A document looks like::

    {"order": 3, "dims": [2, 2, 2], "scalar_kind": "rational",
     "entries": [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]]}

Entry encoding by ``scalar_kind``:

``rational``    text ``"p/q"`` (or ``"p"`` for integers)
``real``        JSON number, written with round-trip-exact ``repr``
``complex``     ``{"re": <number>, "im": <number>}``
``expression``  canonical expression text, e.g. ``"a000*b000 + 2*c"``
"""
from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction

import numpy as np

from .core import Hypermatrix, scalar_kind
from .errors import HypermatrixError, ParseError
from .expr import Expression, constant, parse

__all__ = ["DocumentError", "to_document", "from_document", "dumps", "loads", "load", "save"]

KINDS = ("rational", "real", "complex", "expression")


class DocumentError(HypermatrixError, ValueError):
    """A hypermatrix document is malformed."""


def _encode(kind, v):
    if kind == "rational":
        return str(Fraction(v))
    if kind == "real":
        return float(v)
    if kind == "complex":
        v = complex(v)
        return {"re": v.real, "im": v.imag}
    return str(v if isinstance(v, Expression) else constant(v))


def to_document(H: Hypermatrix) -> dict:
    kind = scalar_kind(H)
    flat = [_encode(kind, v) for v in H.array.ravel()]
    nested = np.empty(len(flat), dtype=object)
    nested[:] = flat
    return {
        "order": H.order,
        "dims": list(H.shape),
        "scalar_kind": kind,
        "entries": nested.reshape(H.shape).tolist(),
    }


def _number(v, where):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise DocumentError(f"{where}: expected a JSON number, got {v!r}")
    return float(v)


def _decode(kind, v, where):
    if kind == "rational":
        if not isinstance(v, str):
            raise DocumentError(f"{where}: rational entries are 'p/q' strings, got {v!r}")
        try:
            q = Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"{where}: bad rational {v!r}") from None
        return q.numerator if q.denominator == 1 else q
    if kind == "real":
        return _number(v, where)
    if kind == "complex":
        if not isinstance(v, dict) or set(v) != {"re", "im"}:
            raise DocumentError(f"{where}: complex entries are {{'re': x, 'im': y}}, got {v!r}")
        return complex(_number(v["re"], where), _number(v["im"], where))
    if not isinstance(v, str):
        raise DocumentError(f"{where}: expression entries are strings, got {v!r}")
    try:
        return parse(v)
    except ParseError as exc:
        raise DocumentError(f"{where}: {exc}") from None


def _walk(node, dims, depth, kind, out, path):
    if depth == len(dims):
        out.append(_decode(kind, node, f"entry {path}"))
        return
    if not isinstance(node, list) or len(node) != dims[depth]:
        raise DocumentError(
            f"entries at {path or '[]'} must be a list of length {dims[depth]}"
        )
    for i, item in enumerate(node):
        _walk(item, dims, depth + 1, kind, out, path + f"[{i}]")


def from_document(doc) -> Hypermatrix:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    missing = {"order", "dims", "scalar_kind", "entries"} - set(doc)
    if missing:
        raise DocumentError(f"document is missing fields {sorted(missing)}")
    order, dims, kind = doc["order"], doc["dims"], doc["scalar_kind"]
    if kind not in KINDS:
        raise DocumentError(f"scalar_kind must be one of {KINDS}, got {kind!r}")
    if (not isinstance(dims, list) or not dims
            or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in dims)):
        raise DocumentError(f"dims must be a non-empty list of positive integers, got {dims!r}")
    if order != len(dims):
        raise DocumentError(f"order {order!r} does not match {len(dims)} dims")
    flat: list = []
    _walk(doc["entries"], dims, 0, kind, flat, "")
    if kind == "real":
        return Hypermatrix(np.array(flat, dtype=np.float64).reshape(dims))
    if kind == "complex":
        return Hypermatrix(np.array(flat, dtype=np.complex128).reshape(dims))
    return Hypermatrix.from_flat(dims, flat)


def dumps(H: Hypermatrix) -> str:
    return json.dumps(to_document(H))


def loads(text: str) -> Hypermatrix:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def load(path) -> Hypermatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return loads(text)
    except DocumentError as exc:
        raise DocumentError(f"{path}: {exc}") from None


def write_text_atomic(path, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".hm-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save(H: Hypermatrix, path) -> None:
    write_text_atomic(path, dumps(H) + "\n")

