"""Symmetric tridiagonal matrices: characteristic polynomial recurrences,
Sturm-count bisection and inverse-iteration eigenvectors.

The eigensolver is self-contained so that the benchmark's accuracy
measurement does not rest on an external black box.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ClusteredSpectrum, DimensionMismatch, ReducedMatrix
from .poly import Polynomial

EPS = np.finfo(float).eps
_MAX_BISECTIONS = 256
_INVERSE_ITERATIONS = 2


@dataclass(frozen=True, eq=False)
class SymmetricTridiagonal:
    """Diagonal ``a_1..a_n`` and off-diagonal ``b_2..b_n``.

    ``offdiag[j]`` couples rows ``j`` and ``j + 1`` (0-based).
    """

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        d = np.array(self.diag, dtype=float).reshape(-1)
        e = np.array(self.offdiag, dtype=float).reshape(-1)
        if d.size < 1:
            raise DimensionMismatch("a tridiagonal matrix needs n >= 1")
        if e.size != d.size - 1:
            raise DimensionMismatch(
                f"offdiag has length {e.size}, expected {d.size - 1}"
            )
        d.flags.writeable = False
        e.flags.writeable = False
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def n(self) -> int:
        return self.diag.size

    def to_dense(self) -> np.ndarray:
        return (
            np.diag(self.diag)
            + np.diag(self.offdiag, 1)
            + np.diag(self.offdiag, -1)
        )

    def trailing(self, start: int) -> "SymmetricTridiagonal":
        """Trailing principal submatrix beginning at 0-based row ``start``."""
        return SymmetricTridiagonal(self.diag[start:], self.offdiag[start:])

    def __repr__(self):
        return (
            f"SymmetricTridiagonal(diag={self.diag.tolist()!r}, "
            f"offdiag={self.offdiag.tolist()!r})"
        )


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Ascending eigenvalues and the matching orthonormal eigenvectors
    (column ``i`` of ``vectors`` belongs to ``values[i]``)."""

    values: np.ndarray
    vectors: np.ndarray


def is_unreduced(T: SymmetricTridiagonal) -> bool:
    return bool(np.all(T.offdiag != 0.0))


def _shift_mul(p: np.ndarray, a: float) -> np.ndarray:
    """Coefficients of ``(x - a) * p``."""
    out = np.zeros(p.size + 1)
    out[1:] += p
    out[:-1] -= a * p
    return out


def _three_term(p1: np.ndarray, p2: np.ndarray, a: float, b2: float) -> np.ndarray:
    out = _shift_mul(p1, a)
    out[: p2.size] -= b2 * p2
    return out


def charpoly_top_down(T: SymmetricTridiagonal) -> list[Polynomial]:
    """Leading principal minors ``p_0 .. p_n`` of ``xI - T``."""
    a, b = T.diag, T.offdiag
    polys = [np.ones(1), _shift_mul(np.ones(1), a[0])]
    for k in range(1, T.n):
        polys.append(_three_term(polys[-1], polys[-2], a[k], b[k - 1] ** 2))
    return [Polynomial(p) for p in polys]


def charpoly_bottom_up(T: SymmetricTridiagonal) -> list[Polynomial]:
    """Trailing minors built from the last row upwards.

    Returns ``[f_{n+1}, f_n, ..., f_1]`` where ``f_{n+1} = 1`` and ``f_k``
    is the characteristic polynomial of rows/columns ``k..n`` (1-based).
    So ``result[-1]`` is the full characteristic polynomial and
    ``result[-2]`` that of ``T(2:n, 2:n)``.
    """
    a, b = T.diag, T.offdiag
    n = T.n
    polys = [np.ones(1), _shift_mul(np.ones(1), a[n - 1])]
    for k in range(n - 2, -1, -1):
        polys.append(_three_term(polys[-1], polys[-2], a[k], b[k] ** 2))
    return [Polynomial(p) for p in polys]


def charpoly_values_bottom_up(T: SymmetricTridiagonal, x):
    """Values ``(f_1(x), f_1'(x), f_2(x))`` of the bottom-up recurrence.

    Evaluated pointwise, never through monomial coefficients, which keeps
    relative accuracy near roots. All three values share a common power of
    two rescaling when they grow large, so only their ratios are meaningful
    for very large ``n``; ``log2_scale`` is returned as the fourth item.
    """
    x = np.asarray(x, dtype=float)
    a, b2 = T.diag, T.offdiag**2
    n = T.n
    # (f_{k+2}, f_{k+1}) and their derivatives, starting from f_{n+1} = 1
    f2, f1 = np.ones_like(x), x - a[n - 1]
    d2, d1 = np.zeros_like(x), np.ones_like(x)
    log2_scale = np.zeros_like(x)
    for k in range(n - 2, -1, -1):
        f0 = (x - a[k]) * f1 - b2[k] * f2
        d0 = f1 + (x - a[k]) * d1 - b2[k] * d2
        f2, f1, d2, d1 = f1, f0, d1, d0
        big = np.maximum(np.abs(f1), np.abs(d1)) > 2.0**500
        if np.any(big):
            e = np.where(big, np.frexp(np.maximum(np.abs(f1), np.abs(d1)))[1], 0)
            f1, f2, d1, d2 = (np.ldexp(v, -e) for v in (f1, f2, d1, d2))
            log2_scale = log2_scale + e
    return f1, d1, f2, log2_scale


def gershgorin_bounds(T: SymmetricTridiagonal) -> tuple[float, float]:
    r = np.zeros(T.n)
    ab = np.abs(T.offdiag)
    r[:-1] += ab
    r[1:] += ab
    return float(np.min(T.diag - r)), float(np.max(T.diag + r))


def _spectral_radius_bound(T: SymmetricTridiagonal) -> float:
    lo, hi = gershgorin_bounds(T)
    return max(abs(lo), abs(hi), np.finfo(float).tiny)


def _sturm_counts(T: SymmetricTridiagonal, x: np.ndarray, pivmin: float) -> np.ndarray:
    """Eigenvalue counts below each entry of ``x`` (vectorised over ``x``)."""
    a, b2 = T.diag, T.offdiag**2
    # pivots of the LDL^T factorisation of T - x I; negatives = eigenvalues < x
    d = a[0] - x
    _floor_pivot(d, pivmin)
    count = (d < 0).astype(np.int64)
    tmp = np.empty_like(d)
    for k in range(1, T.n):
        np.divide(b2[k - 1], d, out=tmp)
        np.subtract(a[k], x, out=d)
        d -= tmp
        _floor_pivot(d, pivmin)
        count += d < 0
    return count


def _floor_pivot(d: np.ndarray, pivmin: float) -> None:
    """In place: pivots smaller than ``pivmin`` keep their sign but become
    ``pivmin`` in magnitude (an exact zero becomes ``+pivmin``)."""
    np.copysign(np.maximum(np.abs(d), pivmin), d, out=d)


def sturm_count(T: SymmetricTridiagonal, x: float) -> int:
    """Number of eigenvalues of ``T`` strictly less than ``x``."""
    pivmin = EPS * _spectral_radius_bound(T)
    return int(_sturm_counts(T, np.array([float(x)]), pivmin)[0])


def eigenvalue_tolerance(T: SymmetricTridiagonal, values) -> np.ndarray:
    """Bracket width bisection stops at, per eigenvalue."""
    radius = _spectral_radius_bound(T)
    return 1e-14 * radius + 4 * EPS * np.abs(np.asarray(values, dtype=float))


def eigenvalues(T: SymmetricTridiagonal) -> np.ndarray:
    """All eigenvalues, ascending, by simultaneous bisection on Sturm counts.

    Brackets start from the Gershgorin interval and are halved until each
    is narrower than ``1e-14 * radius + 4 * eps * |lambda|``.
    """
    n = T.n
    if n == 1:
        return T.diag.copy()
    radius = _spectral_radius_bound(T)
    pivmin = EPS * radius
    tol_abs = 1e-14 * radius
    glo, ghi = gershgorin_bounds(T)
    pad = 2 * n * pivmin + tol_abs
    lo = np.full(n, glo - pad)
    hi = np.full(n, ghi + pad)
    target = np.arange(1, n + 1)
    active = np.ones(n, dtype=bool)
    for _ in range(_MAX_BISECTIONS):
        width = hi - lo
        active = width > tol_abs + 4 * EPS * np.maximum(np.abs(lo), np.abs(hi))
        if not active.any():
            break
        idx = np.flatnonzero(active)
        mid = 0.5 * (lo[idx] + hi[idx])
        # midpoint stuck between adjacent floats
        stuck = (mid <= lo[idx]) | (mid >= hi[idx])
        if stuck.all():
            break
        c = _sturm_counts(T, mid, pivmin)
        up = c >= target[idx]
        hi[idx[up]] = mid[up]
        lo[idx[~up]] = mid[~up]
    return 0.5 * (lo + hi)


def _tridiagonal_lu(dl, d, du, pivmin):
    """LU with partial pivoting of a tridiagonal matrix (LAPACK ``gttrf``
    layout). Zero pivots are replaced by ``pivmin``."""
    n = d.size
    dl, d, du = dl.copy(), d.copy(), du.copy()
    du2 = np.zeros(max(n - 2, 0))
    swap = np.zeros(max(n - 1, 0), dtype=bool)
    for i in range(n - 1):
        if abs(d[i]) >= abs(dl[i]):
            if d[i] == 0.0:
                d[i] = pivmin
            fact = dl[i] / d[i]
            dl[i] = fact
            d[i + 1] -= fact * du[i]
        else:
            swap[i] = True
            fact = d[i] / dl[i]
            d[i] = dl[i]
            dl[i] = fact
            tmp = du[i]
            du[i] = d[i + 1]
            d[i + 1] = tmp - fact * d[i + 1]
            if i < n - 2:
                du2[i] = du[i + 1]
                du[i + 1] = -fact * du[i + 1]
    if d[n - 1] == 0.0:
        d[n - 1] = pivmin
    return dl, d, du, du2, swap


def _tridiagonal_solve(factors, rhs):
    dl, d, du, du2, swap = factors
    n = d.size
    x = rhs.copy()
    for i in range(n - 1):
        if swap[i]:
            x[i], x[i + 1] = x[i + 1], x[i] - dl[i] * x[i + 1]
        else:
            x[i + 1] -= dl[i] * x[i]
    x[n - 1] /= d[n - 1]
    if n > 1:
        x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2]
    for i in range(n - 3, -1, -1):
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i]
    return x


def _start_vector(n: int) -> np.ndarray:
    # fixed, irregular, strictly positive: avoids exact orthogonality to
    # structured eigenvectors such as (1, -1)/sqrt(2)
    k = np.arange(1, n + 1)
    return 1.0 + 0.5 * np.sin(k * 2.399963229728653)


def _normalize_sign(v: np.ndarray) -> np.ndarray:
    big = np.flatnonzero(np.abs(v) > EPS * np.max(np.abs(v)))
    if big.size and v[big[0]] < 0:
        v = -v
    return v


def eigen_decomposition(T: SymmetricTridiagonal) -> EigenDecomposition:
    """Eigenvalues by bisection and eigenvectors by inverse iteration.

    Each eigenvector is the result of two shifted solves from a fixed start
    vector, normalised and signed so that its first entry above
    ``eps * max|v|`` in magnitude is positive.
    """
    if not is_unreduced(T):
        k = int(np.flatnonzero(T.offdiag == 0.0)[0])
        raise ReducedMatrix(f"off-diagonal entry {k} is zero")
    n = T.n
    values = eigenvalues(T)
    if n == 1:
        return EigenDecomposition(values, np.ones((1, 1)))
    tol = eigenvalue_tolerance(T, values)
    gaps = np.diff(values)
    pair_tol = 4 * np.maximum(tol[:-1], tol[1:])
    if np.any(gaps <= pair_tol):
        j = int(np.flatnonzero(gaps <= pair_tol)[0])
        raise ClusteredSpectrum(
            f"eigenvalues {j} and {j + 1} differ by {gaps[j]:.3e}, "
            f"below the resolvable gap {pair_tol[j]:.3e}"
        )
    pivmin = EPS * _spectral_radius_bound(T)
    vectors = np.empty((n, n))
    start = _start_vector(n)
    start /= np.linalg.norm(start)
    for i, lam in enumerate(values):
        factors = _tridiagonal_lu(T.offdiag, T.diag - lam, T.offdiag, pivmin)
        v = start
        for _ in range(_INVERSE_ITERATIONS):
            v = _tridiagonal_solve(factors, v)
            v = v / np.linalg.norm(v)
        vectors[:, i] = _normalize_sign(v)
    return EigenDecomposition(values, vectors)
