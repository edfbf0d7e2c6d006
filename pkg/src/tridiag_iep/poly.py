"""Dense real polynomials in the monomial basis.

Only what the naive construction needs: expansion from roots, Horner
evaluation, differentiation and division with a negated remainder
(``f = q*g - r``).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DivideByZeroPoly, ZeroPolynomial

# A remainder coefficient is structural zero below this fraction of the
# magnitudes that were cancelled to produce it.
REMAINDER_NOISE = 1e-13


class Polynomial:
    """Immutable polynomial; ``coeffs[k]`` multiplies ``x**k``.

    Trailing (highest-degree) exact zeros are stripped, so the last
    coefficient is nonzero unless the polynomial is identically zero,
    which is stored as ``[0.0]``.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[float]):
        c = np.array(coeffs, dtype=float).reshape(-1)
        if c.size == 0:
            raise ValueError("a polynomial needs at least one coefficient")
        nz = np.flatnonzero(c)
        c = c[: nz[-1] + 1] if nz.size else np.zeros(1)
        c.flags.writeable = False
        self._c = c

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def degree(self) -> int:
        return self._c.size - 1

    def is_zero(self) -> bool:
        return self._c.size == 1 and self._c[0] == 0.0

    def __call__(self, x):
        return evaluate(self, x)

    def __len__(self):
        return self._c.size

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return np.array_equal(self._c, other._c)

    def __hash__(self):
        return hash(self._c.tobytes())

    def __repr__(self):
        return f"Polynomial({self._c.tolist()!r})"

    def __neg__(self):
        return Polynomial(-self._c)

    def __add__(self, other):
        other = _as_poly(other)
        m = max(self._c.size, other._c.size)
        out = np.zeros(m)
        out[: self._c.size] += self._c
        out[: other._c.size] += other._c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if np.isscalar(other):
            return Polynomial(self._c * float(other))
        other = _as_poly(other)
        return Polynomial(np.convolve(self._c, other._c))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return Polynomial(self._c / float(scalar))


def _as_poly(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    return Polynomial([p])


def from_roots(roots: Sequence[float]) -> Polynomial:
    """Monic polynomial with the given roots.

    Linear factors are multiplied in the order given, so callers that need
    reproducible coefficients should sort first.
    """
    c = np.ones(1)
    for r in np.asarray(roots, dtype=float).reshape(-1):
        nxt = np.empty(c.size + 1)
        nxt[-1] = c[-1]
        nxt[1:-1] = c[:-1] - r * c[1:]
        nxt[0] = -r * c[0]
        c = nxt
    return Polynomial(c)


def evaluate(p: Polynomial, x):
    """Horner evaluation; ``x`` may be a scalar or an array."""
    c = p.coeffs
    acc = np.zeros_like(np.asarray(x, dtype=float)) + c[-1]
    for ck in c[-2::-1]:
        acc = acc * x + ck
    return acc if acc.ndim else float(acc)


def derivative(p: Polynomial) -> Polynomial:
    if p.degree == 0:
        return Polynomial([0.0])
    c = p.coeffs
    return Polynomial(c[1:] * np.arange(1, c.size))


def leading_coefficient(p: Polynomial) -> float:
    if p.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading coefficient")
    return float(p.coeffs[-1])


def _drop_noise(r: np.ndarray, scale: np.ndarray) -> Polynomial:
    """Zero the top coefficients of ``r`` that are pure cancellation noise."""
    r = r.copy()
    k = r.size - 1
    while k >= 0 and abs(r[k]) <= REMAINDER_NOISE * scale[k]:
        r[k] = 0.0
        k -= 1
    return Polynomial(r)


def divide_negated(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Divide ``f`` by ``g`` so that ``f = q*g - r`` with ``deg r < deg g``.

    ``r`` is the negative of the usual remainder. When ``deg f = deg g + 1``
    (the only case the Schmeisser chain produces) the quotient is linear and
    is found with two synthetic-division steps; otherwise ordinary long
    division is used.

    A leading remainder coefficient whose magnitude is at most
    ``REMAINDER_NOISE`` times the size of the terms cancelled to form it is
    treated as an exact zero, so a genuine degree drop shows up as a
    lower-degree ``r``.
    """
    if g.is_zero():
        raise DivideByZeroPoly("division by the zero polynomial")
    if f.degree < g.degree:
        raise ValueError(
            f"deg f = {f.degree} is smaller than deg g = {g.degree}"
        )
    if f.degree == g.degree + 1:
        return _divide_linear(f, g)
    return long_divide_negated(f, g)


def _divide_linear(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    fc, gc = f.coeffs, g.coeffs
    m = g.degree
    q1 = fc[m + 1] / gc[m]
    q0 = (fc[m] - q1 * gc[m - 1]) / gc[m] if m >= 1 else fc[0] / gc[0]
    if m == 0:
        return Polynomial([q0, q1]), Polynomial([0.0])
    # (q*g)_k = q0*g_k + q1*g_{k-1} for k < m
    lo = q0 * gc[:m]
    hi = np.concatenate(([0.0], q1 * gc[: m - 1]))
    r = lo + hi - fc[:m]
    # rounding in q0 is carried into every coefficient through q0 * g_k
    q0_scale = (abs(fc[m]) + abs(q1 * gc[m - 1])) / abs(gc[m])
    scale = np.abs(lo) + np.abs(hi) + np.abs(fc[:m]) + q0_scale * np.abs(gc[:m])
    return Polynomial([q0, q1]), _drop_noise(r, scale)


def long_divide_negated(
    f: Polynomial, g: Polynomial
) -> tuple[Polynomial, Polynomial]:
    """General-degree version of :func:`divide_negated`."""
    if g.is_zero():
        raise DivideByZeroPoly("division by the zero polynomial")
    m, d = g.degree, f.degree
    if d < m:
        raise ValueError(f"deg f = {d} is smaller than deg g = {m}")
    gc = g.coeffs
    rem = f.coeffs.copy()
    scale = np.abs(f.coeffs).copy()
    q = np.zeros(d - m + 1)
    for k in range(d - m, -1, -1):
        q[k] = rem[k + m] / gc[m]
        term = q[k] * gc
        rem[k : k + m + 1] -= term
        scale[k : k + m + 1] += np.abs(term)
    if m == 0:
        return Polynomial(q), Polynomial([0.0])
    return Polynomial(q), _drop_noise(-rem[:m], scale[:m])
