"""Command-line front end: ``python -m hypermatrix <command> ...``.

Every command reads and writes hypermatrix JSON documents (see
:mod:`hypermatrix.io`).  Results go to ``--out`` or standard output.
Exit status: 0 on success, 1 on domain or dimension errors (and failed
verifications), 2 on malformed input files or usage errors.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

import numpy as np

from . import io
from .cayley import composition_count, span_rank
from .core import Hypermatrix, create, generate_labeled, generate_sym3, generate_sym_matrix, vectorize
from .errors import HypermatrixError, ParseError
from .expr import parse
from .linsolve import pseudo_inverse_pairs
from .ops import (
    bm_product3,
    bm_product3_background,
    entry_pow,
    general_bm_product,
    hm_add,
    hm_hadamard,
    hm_scale,
    transpose_k,
)
from .special import (
    AXES,
    diagonal_from_matrix,
    direct_slice_permute,
    involutions,
    kronecker_delta,
    orthogonal_2x2x2,
    orthogonal_3x3x3,
    orthogonality_product,
    permutation_hypermatrix,
    slice_permute,
)

GENERATORS = ("labeled", "sym3", "delta", "ones", "zeros", "perm", "diag", "ortho22", "ortho333")
CHECKS = ("delta-identity", "diagonal-identity", "orthogonality", "slice-action")


class _Failure(Exception):
    """A verification check did not pass."""


def parse_scalar(text: str):
    """Read a scalar from the command line: integer, ``p/q``, float, complex, or expression."""
    for convert in (int, Fraction, float, complex):
        try:
            value = convert(text)
        except (ValueError, ZeroDivisionError):
            continue
        if isinstance(value, Fraction) and value.denominator == 1:
            value = value.numerator
        return value
    try:
        return parse(text)
    except ParseError:
        raise argparse.ArgumentTypeError(f"cannot read scalar {text!r}") from None


class _Output:
    """Collects output text and writes it only after the command succeeded."""

    def __init__(self, path):
        self.path = path
        self.parts: list[str] = []

    def emit(self, text: str) -> None:
        self.parts.append(text if text.endswith("\n") else text + "\n")

    def document(self, H: Hypermatrix) -> None:
        self.emit(io.dumps(H))

    def flush(self, stdout) -> None:
        text = "".join(self.parts)
        if self.path:
            io.write_text_atomic(self.path, text)
        else:
            stdout.write(text)


# -- commands --------------------------------------------------------------


def _gen(args, out):
    kind = args.kind
    if kind == "labeled":
        H = generate_labeled(_need(args, "dims"), args.prefix)
    elif kind == "sym3":
        H = generate_sym3(_need(args, "n"), args.prefix)
    elif kind == "delta":
        H = kronecker_delta(_need(args, "n"))
    elif kind in ("ones", "zeros"):
        H = create(_need(args, "dims"), 1 if kind == "ones" else 0)
    elif kind == "perm":
        H = permutation_hypermatrix(_need(args, "sigma"))
    elif kind == "diag":
        if args.matrix:
            M = io.load(args.matrix)
        else:
            M = generate_sym_matrix(_need(args, "n"), args.prefix)
        H = diagonal_from_matrix(M)
    elif kind == "ortho22":
        H = orthogonal_2x2x2(_need(args, "theta"))
    else:
        H = orthogonal_3x3x3(_need(args, "t1"), _need(args, "t2"))
    out.document(H)


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise _UsageError(f"gen {args.kind} requires --{name}")
    return value


class _UsageError(Exception):
    pass


def _unary(fn):
    def run(args, out):
        out.document(fn(io.load(args.input), args))
    return run


def _nary(fn):
    def run(args, out):
        out.document(fn(*[io.load(p) for p in args.inputs]))
    return run


def _vectorize(args, out):
    H = io.load(args.input)
    entries = vectorize(H)
    out.document(Hypermatrix.from_flat([len(entries)], entries))


def _ch_count(args, out):
    out.emit(str(composition_count(args.order)))


def _ch_rank(args, out):
    out.emit(str(span_rank(io.load(args.input), args.max_order, args.tol)))


def _pinv_pairs(args, out):
    A, B = io.load(args.inputs[0]), io.load(args.inputs[1])
    result = pseudo_inverse_pairs(A, B)
    out.emit(f"residual {result.residual!r}")
    out.emit(f"reconstruction-error {result.reconstruction_error!r}")
    if args.out_pair:
        io.write_text_atomic(args.out_pair[0], io.dumps(result.R1) + "\n")
        io.write_text_atomic(args.out_pair[1], io.dumps(result.R2) + "\n")
    else:
        out.document(result.R1)
        out.document(result.R2)


def _verify(args, out):
    check = args.check
    failures = 0
    if check == "delta-identity":
        for n in ([args.n] if args.n else [2, 3, 4]):
            D = kronecker_delta(n)
            ok = bm_product3(D, transpose_k(D, 2), transpose_k(D, 1)) == D
            failures += not ok
            out.emit(f"{'PASS' if ok else 'FAIL'} delta-identity n={n}")
    elif check == "diagonal-identity":
        for n in ([args.n] if args.n else [2, 3]):
            D = diagonal_from_matrix(generate_sym_matrix(n, "lambda"))
            ok = bm_product3(transpose_k(D, 1), transpose_k(D, 2), D) == entry_pow(D, 3)
            failures += not ok
            out.emit(f"{'PASS' if ok else 'FAIL'} diagonal-identity n={n}")
    elif check == "orthogonality":
        if not args.input:
            raise _UsageError("verify orthogonality needs an input hypermatrix file")
        Q = io.load(args.input)
        if Q.order != 3 or len(set(Q.shape)) != 1:
            raise HypermatrixError(f"expected a cubic order-3 hypermatrix, got {list(Q.shape)}")
        prod = orthogonality_product(Q).array.astype(np.complex128)
        dev = float(np.max(np.abs(prod - kronecker_delta(Q.shape[0]).array.astype(np.complex128))))
        ok = dev <= float(args.tol)
        failures += not ok
        sign = "≤" if ok else ">"
        out.emit(f"{'PASS' if ok else 'FAIL'} max-deviation {sign} {args.tol}")
        out.emit(f"observed {dev!r}")
    else:
        for n in ([args.n] if args.n else [1, 2, 3, 4]):
            A = generate_labeled([n, n, n], "a")
            bad = sum(
                slice_permute(A, s, axis) != direct_slice_permute(A, s, axis)
                for s in involutions(n) for axis in AXES
            )
            failures += bad
            out.emit(f"{'PASS' if not bad else 'FAIL'} slice-action n={n}")
    if failures:
        raise _Failure()


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypermatrix", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the result here instead of standard output")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate a special hypermatrix")
    g.add_argument("kind", choices=GENERATORS)
    g.add_argument("--dims", type=int, nargs="+")
    g.add_argument("--n", type=int)
    g.add_argument("--prefix", default="a")
    g.add_argument("--sigma", type=int, nargs="+")
    g.add_argument("--matrix", help="matrix document for 'gen diag'")
    g.add_argument("--theta", type=float)
    g.add_argument("--t1", type=float)
    g.add_argument("--t2", type=float)
    g.set_defaults(run=_gen)

    for name, fn in (("add", hm_add), ("hadamard", hm_hadamard)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("inputs", nargs=2)
        p.set_defaults(run=_nary(fn))

    p = sub.add_parser("scale", parents=[common])
    p.add_argument("input")
    p.add_argument("--by", type=parse_scalar, required=True)
    p.set_defaults(run=_unary(lambda H, a: hm_scale(H, a.by)))

    p = sub.add_parser("transpose", parents=[common])
    p.add_argument("input")
    p.add_argument("--times", type=int, default=1)
    p.set_defaults(run=_unary(lambda H, a: transpose_k(H, a.times)))

    p = sub.add_parser("product", parents=[common])
    p.add_argument("inputs", nargs=3)
    p.set_defaults(run=_nary(bm_product3))

    p = sub.add_parser("product-bg", parents=[common])
    p.add_argument("inputs", nargs=4, metavar="A B C T")
    p.set_defaults(run=_nary(bm_product3_background))

    p = sub.add_parser("gproduct", parents=[common])
    p.add_argument("inputs", nargs="+")
    p.set_defaults(run=_nary(general_bm_product))

    p = sub.add_parser("vectorize", parents=[common])
    p.add_argument("input")
    p.set_defaults(run=_vectorize)

    p = sub.add_parser("ch-count", parents=[common])
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(run=_ch_count)

    p = sub.add_parser("ch-rank", parents=[common])
    p.add_argument("input")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(run=_ch_rank)

    p = sub.add_parser("pinv-pairs", help="pseudo-inverse pair; --out takes two paths (R1 R2)")
    p.add_argument("inputs", nargs=2)
    p.add_argument("--out", dest="out_pair", nargs=2, metavar=("R1", "R2"))
    p.set_defaults(run=_pinv_pairs, out=None)

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("check", choices=CHECKS)
    p.add_argument("input", nargs="?")
    p.add_argument("--n", type=int)
    p.add_argument("--tol", default="1e-9")
    p.set_defaults(run=_verify)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Output(getattr(args, "out", None))
    try:
        args.run(args, out)
    except _Failure:
        out.path = None
        out.flush(stdout)
        return 1
    except _UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except io.DocumentError as exc:
        print(f"error: malformed input: {exc}", file=stderr)
        return 2
    except (HypermatrixError, TypeError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    out.flush(stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
