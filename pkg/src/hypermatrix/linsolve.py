"""Affine constraint formatting, Jacobi SVD pseudo-inverse, and pseudo-inverse pairs.

Dense matrices are plain 2-D ``complex128`` numpy arrays.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import Hypermatrix, as_hypermatrix
from .errors import DimensionError, SingularSliceError, UnknownVariableError
from .ops import bm_product3

__all__ = [
    "AffineConstraint",
    "constraint_formator",
    "svd",
    "singular_values",
    "numerical_rank",
    "svd_pinv",
    "PinvPairResult",
    "pseudo_inverse_pairs",
    "reconstruction_map",
]

JACOBI_TOL = 1e-12
MAX_SWEEPS = 60


@dataclass(frozen=True)
class AffineConstraint:
    """``sum(coeff * unknown for unknown, coeff in terms) == rhs``.

    Repeated unknowns in ``terms`` are merged on construction.
    """

    terms: tuple
    rhs: complex = 0

    def __post_init__(self):
        merged: dict = {}
        for name, coeff in self.terms:
            merged[name] = merged.get(name, 0) + coeff
        object.__setattr__(self, "terms", tuple(merged.items()))

    @property
    def unknowns(self) -> tuple:
        return tuple(name for name, _ in self.terms)


def constraint_formator(constraints: Sequence[AffineConstraint], unknowns: Sequence[str]):
    """Return ``(A, b)`` with ``A[r, c]`` the coefficient of ``unknowns[c]`` in constraint ``r``.

    ``b`` is a column vector of shape ``(len(constraints), 1)``.
    """
    column = {name: c for c, name in enumerate(unknowns)}
    A = np.zeros((len(constraints), len(unknowns)), dtype=np.complex128)
    b = np.zeros((len(constraints), 1), dtype=np.complex128)
    for r, con in enumerate(constraints):
        for name, coeff in con.terms:
            try:
                A[r, column[name]] += coeff
            except KeyError:
                raise UnknownVariableError(
                    f"constraint {r} uses {name!r}, which is not among the unknowns"
                ) from None
        b[r, 0] = con.rhs
    return A, b


# -- singular value decomposition ------------------------------------------


def _jacobi_tall(M: np.ndarray):
    """One-sided (Hestenes) Jacobi on the columns of a tall matrix."""
    m, n = M.shape
    U = M.astype(np.complex128, copy=True)
    V = np.eye(n, dtype=np.complex128)
    for _ in range(MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                up, uq = U[:, p], U[:, q]
                alpha = np.vdot(up, up).real
                beta = np.vdot(uq, uq).real
                gamma = np.vdot(up, uq)
                g = abs(gamma)
                if g == 0.0 or g <= JACOBI_TOL * np.sqrt(alpha * beta):
                    continue
                rotated = True
                phase = gamma / g
                zeta = (beta - alpha) / (2.0 * g)
                t = np.copysign(1.0, zeta) / (abs(zeta) + np.hypot(1.0, zeta))
                c = 1.0 / np.hypot(1.0, t)
                s = c * t
                wq = uq * phase.conjugate()
                U[:, p], U[:, q] = c * up - s * wq, s * up + c * wq
                vp, vq = V[:, p].copy(), V[:, q] * phase.conjugate()
                V[:, p], V[:, q] = c * vp - s * vq, s * vp + c * vq
        if not rotated:
            break
    sigma = np.linalg.norm(U, axis=0)
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    U = U[:, order]
    V = V[:, order]
    nz = sigma > 0
    U[:, nz] = U[:, nz] / sigma[nz]
    return U, sigma, V


def svd(M):
    """Thin SVD ``M = U @ diag(s) @ V^H`` by one-sided Jacobi rotations.

    Returns ``(U, s, V)`` with ``s`` sorted in decreasing order.  Columns of
    ``U`` belonging to zero singular values are left as zero vectors.
    """
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2 or 0 in M.shape:
        raise DimensionError(f"svd needs a non-empty matrix, got shape {M.shape}")
    if M.shape[0] >= M.shape[1]:
        return _jacobi_tall(M)
    U, s, V = _jacobi_tall(M.conj().T)
    return V, s, U


def singular_values(M) -> np.ndarray:
    return svd(M)[1]


def _cutoff(shape, s, tol):
    if tol is None:
        tol = max(shape) * np.finfo(np.float64).eps
    return tol * (s[0] if s.size else 0.0)


def numerical_rank(M, tol: float | None = None) -> int:
    """Number of singular values above ``tol * sigma_max``."""
    M = np.asarray(M)
    s = singular_values(M)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > _cutoff(M.shape, s, tol)))


def svd_pinv(M, tol: float | None = None) -> np.ndarray:
    """Moore-Penrose pseudo-inverse.

    Singular values at or below ``tol * sigma_max`` are treated as zero;
    ``tol`` defaults to ``max(rows, cols) * eps``.
    """
    M = np.asarray(M, dtype=np.complex128)
    U, s, V = svd(M)
    keep = s > _cutoff(M.shape, s, tol)
    inv = np.zeros_like(s)
    inv[keep] = 1.0 / s[keep]
    return (V * inv) @ U.conj().T


# -- hypermatrix pseudo-inverse pairs --------------------------------------


@dataclass
class PinvPairResult:
    R1: Hypermatrix
    R2: Hypermatrix
    residual: float
    reconstruction_error: float
    matrix: np.ndarray = field(repr=False)
    rhs: np.ndarray = field(repr=False)
    solution: np.ndarray = field(repr=False)
    unknowns: list = field(repr=False)

    @property
    def normal_residual(self) -> float:
        """``|| A^H (A x - b) ||`` for the solved log-linear system."""
        r = self.matrix @ self.solution - self.rhs
        return float(np.linalg.norm(self.matrix.conj().T @ r))


def _principal_log(z: complex) -> complex:
    # adding +0j turns a -0.0 imaginary part into +0.0, keeping arg in (-pi, pi]
    return complex(np.log(np.complex128(z) + 0j))


def _cubic_side(*hms) -> int:
    n = hms[0].shape[0]
    for H in hms:
        if H.shape != (n, n, n):
            raise DimensionError(
                f"expected cubic hypermatrices of side {n}, got shape {list(H.shape)}"
            )
    return n


def _label(prefix, i, j, k):
    return f"{prefix}{i}_{j}_{k}"


def pseudo_inverse_pairs(A, B, tol: float | None = None) -> PinvPairResult:
    """Least-squares pseudo-inverse pair ``(R1, R2)`` for the pair ``(A, B)``.

    For every ``(m, p)`` the slice matrix ``V0[k0, k1] = A[m, k1, k0] * B[k0, k1, p]``
    is inverted to ``V``, and for every ``(nn, k1)`` the constraint
    ``ln_al[m, nn, k1] + ln_bt[k1, nn, p] = log V[k1, nn]`` is recorded.  The
    system is solved through :func:`svd_pinv` and exponentiated entrywise.
    """
    A = as_hypermatrix(A)
    B = as_hypermatrix(B)
    n = _cubic_side(A, B)
    a = A.array.astype(np.complex128)
    b = B.array.astype(np.complex128)

    unknowns = [_label("ln_al", *idx) for idx in np.ndindex(n, n, n)]
    unknowns += [_label("ln_bt", *idx) for idx in np.ndindex(n, n, n)]

    constraints = []
    for m in range(n):
        for p in range(n):
            V0 = np.array([[a[m, k1, k0] * b[k0, k1, p] for k1 in range(n)] for k0 in range(n)])
            s = singular_values(V0)
            if s[0] == 0.0 or s[-1] <= n * np.finfo(np.float64).eps * s[0]:
                raise SingularSliceError(m, p)
            V = svd_pinv(V0)
            for nn in range(n):
                for k1 in range(n):
                    constraints.append(AffineConstraint(
                        ((_label("ln_al", m, nn, k1), 1), (_label("ln_bt", k1, nn, p), 1)),
                        _principal_log(V[k1, nn]),
                    ))

    M, rhs = constraint_formator(constraints, unknowns)
    x = svd_pinv(M, tol) @ rhs
    n3 = n ** 3
    R1 = Hypermatrix(np.exp(x[:n3, 0]).reshape(n, n, n))
    R2 = Hypermatrix(np.exp(x[n3:, 0]).reshape(n, n, n))
    residual = float(np.linalg.norm(M @ x - rhs))
    recon = reconstruction_map(A, B, R1, R2)
    error = float(np.linalg.norm(recon - np.eye(n3)))
    return PinvPairResult(R1, R2, residual, error, M, rhs, x, unknowns)


def reconstruction_map(A, B, R1, R2) -> np.ndarray:
    """Matrix of ``M -> (M A B) R1 R2`` (two nested ternary products) on vectorized ``M``.

    Column ``c`` is the image of the ``c``-th canonical basis hypermatrix.
    """
    A, B, R1, R2 = map(as_hypermatrix, (A, B, R1, R2))
    n = _cubic_side(A, B, R1, R2)
    n3 = n ** 3
    out = np.zeros((n3, n3), dtype=np.complex128)
    for c in range(n3):
        E = np.zeros(n3)
        E[c] = 1.0
        image = bm_product3(bm_product3(Hypermatrix(E.reshape(n, n, n)), A, B), R1, R2)
        out[:, c] = image.array.ravel()
    return out
