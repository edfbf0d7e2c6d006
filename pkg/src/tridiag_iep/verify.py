"""Numerical checks of the facts that make the two constructions agree.

* essential uniqueness: same eigenvalues and same first eigenvector row
  fix a Jacobi matrix up to off-diagonal signs;
* first-component identity ``|v_i[0]|**2 * p'(lam_i) = p_{T[1:,1:]}(lam_i)``;
* for the constructed matrices, ``p_{T[1:,1:]} = p'/n`` and so the
  diagonaliser's first row is ``e/sqrt(n)``.

Everything returns magnitudes rather than booleans so callers can log how
close each identity is.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ReducedMatrix
from .poly import derivative
from .tridiagonal import (
    SymmetricTridiagonal,
    charpoly_bottom_up,
    charpoly_values_bottom_up,
    eigen_decomposition,
    is_unreduced,
)

_TINY = np.finfo(float).tiny


@dataclass(frozen=True)
class SignInsensitiveComparison:
    """Outcome of :func:`equal_up_to_offdiag_sign`; truthy when equal."""

    equal: bool
    tol: float
    max_diag_deviation: float
    diag_index: int
    max_offdiag_deviation: float
    offdiag_index: int

    def __bool__(self):
        return self.equal

    def summary(self) -> str:
        off = (
            f"{self.max_offdiag_deviation:.3e} at {self.offdiag_index}"
            if self.offdiag_index >= 0
            else "n/a"
        )
        return (
            f"{'equal' if self.equal else 'DIFFERENT'} (tol {self.tol:.1e}): "
            f"max |diag diff| {self.max_diag_deviation:.3e} at {self.diag_index}, "
            f"max ||offdiag| diff| {off}"
        )


def equal_up_to_offdiag_sign(
    S: SymmetricTridiagonal, T: SymmetricTridiagonal, tol: float
) -> SignInsensitiveComparison:
    if S.n != T.n:
        raise DimensionMismatch(f"cannot compare n={S.n} with n={T.n}")
    dd = np.abs(S.diag - T.diag)
    od = np.abs(np.abs(S.offdiag) - np.abs(T.offdiag))
    i = int(np.argmax(dd))
    j = int(np.argmax(od)) if od.size else -1
    max_od = float(od[j]) if od.size else 0.0
    # written so that NaN entries compare unequal
    equal = bool(dd[i] <= tol) and bool(max_od <= tol)
    return SignInsensitiveComparison(equal, tol, float(dd[i]), i, max_od, j)


def dptz_identity_residual(T: SymmetricTridiagonal) -> np.ndarray:
    """Relative residual of ``|v_i[0]|**2 * p_T'(lam_i) - p_M(lam_i)`` per
    eigenpair, ``M = T[1:, 1:]`` (``p_M = 1`` when ``n = 1``).

    Both polynomials come from the bottom-up recurrence evaluated at the
    eigenvalues, not from expanded coefficients.
    """
    if not is_unreduced(T):
        raise ReducedMatrix("the first-component identity needs an unreduced matrix")
    eig = eigen_decomposition(T)
    _, dp, pm, _ = charpoly_values_bottom_up(T, eig.values)
    lhs = eig.vectors[0, :] ** 2 * dp
    rhs = pm
    scale = np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), _TINY)
    return np.abs(lhs - rhs) / scale


def first_row_uniform_residual(W: np.ndarray) -> float:
    """``max_j | |W[0, j]| - 1/sqrt(n) |``."""
    W = np.atleast_2d(np.asarray(W, dtype=float))
    n = W.shape[1]
    return float(np.max(np.abs(np.abs(W[0, :]) - 1.0 / np.sqrt(n))))


def theorem_polynomial_identity_residual(T: SymmetricTridiagonal) -> float:
    """Normwise relative coefficient gap between ``p_{T[1:,1:]}`` and ``p_T'/n``.

    Zero (up to rounding) exactly when the diagonaliser of ``T`` has a
    uniform first row.
    """
    f = charpoly_bottom_up(T)
    lhs = f[-2].coeffs
    rhs = derivative(f[-1]).coeffs / T.n
    m = max(lhs.size, rhs.size)
    a = np.zeros(m)
    b = np.zeros(m)
    a[: lhs.size] = lhs
    b[: rhs.size] = rhs
    scale = max(np.max(np.abs(a)), np.max(np.abs(b)), _TINY)
    return float(np.max(np.abs(a - b)) / scale)
