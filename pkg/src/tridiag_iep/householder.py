"""The stable route (``diag2trid``): rotate ``diag(lambda)`` so that ``e_1``
maps to ``e/sqrt(n)``, then reduce back to tridiagonal form with
Householder reflections."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DimensionMismatch
from .tridiagonal import SymmetricTridiagonal
from .validation import check_strictly_increasing


def reflection_to_uniform(n: int) -> np.ndarray:
    """Symmetric orthogonal ``Q = I - 2 v v^T / v^T v`` with ``Q e_1 = e/sqrt(n)``.

    Uses ``v = e_1 - e/sqrt(n)``; ``n = 1`` gives ``[[1]]``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return np.ones((1, 1))
    v = np.full(n, -1.0 / np.sqrt(n))
    v[0] += 1.0
    return np.eye(n) - (2.0 / (v @ v)) * np.outer(v, v)


def conjugate_diagonal(lambdas: Sequence[float], Q: np.ndarray) -> np.ndarray:
    """``Q^T diag(lambdas) Q``, symmetrised, without forming the diagonal matrix."""
    lam = np.asarray(lambdas, dtype=float).reshape(-1)
    Q = np.asarray(Q, dtype=float)
    if Q.shape != (lam.size, lam.size):
        raise DimensionMismatch(
            f"{lam.size} eigenvalues but Q has shape {Q.shape}"
        )
    M = Q.T @ (lam[:, None] * Q)
    return 0.5 * (M + M.T)


def _house(x: np.ndarray) -> tuple[np.ndarray, float, float]:
    """Reflector ``P = I - beta v v^T`` with ``P x = alpha e_1``.

    ``alpha`` takes the sign opposite to ``x[0]`` so forming ``v[0]`` never
    cancels. A zero ``x`` gives ``beta = 0`` (identity).
    """
    sigma = np.linalg.norm(x)
    v = x.copy()
    if sigma == 0.0:
        return v, 0.0, 0.0
    alpha = -sigma if x[0] >= 0 else sigma
    v[0] -= alpha
    beta = 2.0 / (v @ v)
    return v, beta, alpha


def tridiagonalize(A: np.ndarray) -> tuple[SymmetricTridiagonal, np.ndarray]:
    """Householder reduction ``H^T A H = T`` with ``H`` accumulated explicitly.

    The reflectors only touch rows/columns ``2..n``, so the first row and
    column of ``H`` are exactly ``e_1``. Off-diagonal signs of ``T`` follow
    the reflector sign convention and are not normalised.
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise DimensionMismatch(f"expected a square matrix, got {A.shape}")
    H = np.eye(n)
    if n <= 2:
        return SymmetricTridiagonal(np.diag(A).copy(), np.diag(A, -1).copy()), H

    offdiag = np.empty(n - 1)
    for k in range(n - 2):
        v, beta, alpha = _house(A[k + 1 :, k])
        if beta == 0.0:
            offdiag[k] = 0.0
            continue
        # symmetric rank-2 update of the trailing block
        S = A[k + 1 :, k + 1 :]
        p = beta * (S @ v)
        w = p - (0.5 * beta * (p @ v)) * v
        S -= np.outer(v, w) + np.outer(w, v)
        A[k + 1 :, k] = 0.0
        A[k, k + 1 :] = 0.0
        offdiag[k] = alpha
        H[:, k + 1 :] -= beta * np.outer(H[:, k + 1 :] @ v, v)
    offdiag[n - 2] = A[n - 1, n - 2]
    return SymmetricTridiagonal(np.diag(A).copy(), offdiag), H


def diag2trid(
    lambdas: Sequence[float], *, ordered: bool = True
) -> tuple[SymmetricTridiagonal, np.ndarray]:
    """Jacobi matrix ``T`` with eigenvalues ``lambdas`` and its diagonaliser.

    Returns ``(T, W)`` with ``W = (Q H)^T`` so that ``W^T T W = diag(lambdas)``
    and the first row of ``W`` equals ``e/sqrt(n)``. With ``ordered=False``
    the eigenvalues may come in any order (they must still be distinct);
    column ``i`` of ``W`` then belongs to ``lambdas[i]``.
    """
    if ordered:
        lam = check_strictly_increasing(lambdas)
    else:
        lam = np.asarray(lambdas, dtype=float).reshape(-1)
        check_strictly_increasing(np.sort(lam))
    Q = reflection_to_uniform(lam.size)
    T, H = tridiagonalize(conjugate_diagonal(lam, Q))
    return T, (Q @ H).T
