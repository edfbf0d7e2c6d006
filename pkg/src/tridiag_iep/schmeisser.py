"""The naive route: expand the characteristic polynomial, then run
Schmeisser's division chain to read off a Jacobi matrix.

Kept deliberately unstabilised; large ``n`` is expected to produce a
matrix with the right characteristic polynomial coefficients but badly
wrong eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateRemainder, NonPositiveGamma
from .poly import (
    Polynomial,
    derivative,
    divide_negated,
    from_roots,
    leading_coefficient,
)
from .tridiagonal import SymmetricTridiagonal
from .validation import check_strictly_increasing


@dataclass(frozen=True)
class SchmeisserSequence:
    """Monic linear quotients ``q_1..q_n`` and remainder leading
    coefficients ``gamma_1..gamma_{n-1}``."""

    quotients: tuple[Polynomial, ...]
    gammas: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.quotients)


def schmeisser_sequence(u: Polynomial) -> SchmeisserSequence:
    """Run the division chain ``f_v = q_v f_{v+1} - gamma_v f_{v+2}``.

    Starts from ``f_1 = u`` and ``f_2 = u'/n`` and renormalises every new
    remainder to be monic.

    Raises
    ------
    DegenerateRemainder
        A remainder vanished or dropped more than one degree.
    NonPositiveGamma
        A remainder had a leading coefficient ``<= 0``.
    """
    n = u.degree
    if n < 1:
        raise ValueError("u must have degree at least 1")
    if u.coeffs[-1] != 1.0:
        raise ValueError("u must be monic")

    f_prev, f_cur = u, derivative(u) / n
    quotients: list[Polynomial] = []
    gammas: list[float] = []
    for step in range(1, n):
        q, r = divide_negated(f_prev, f_cur)
        expected = f_cur.degree - 1
        if r.is_zero() or r.degree < expected:
            raise DegenerateRemainder(
                step,
                f"remainder at step {step} has degree "
                f"{'-inf' if r.is_zero() else r.degree}, expected {expected}",
            )
        gamma = leading_coefficient(r)
        if not gamma > 0.0:
            raise NonPositiveGamma(
                step, f"gamma at step {step} is {gamma!r}, must be positive"
            )
        quotients.append(q)
        gammas.append(gamma)
        f_prev, f_cur = f_cur, r / gamma
    # f_cur is now f_{n+1} = 1 and f_prev is f_n
    quotients.append(f_prev)
    return SchmeisserSequence(tuple(quotients), tuple(gammas))


def build_t(seq: SchmeisserSequence) -> SymmetricTridiagonal:
    """Assemble ``T`` with diagonal ``-q_k(0)`` and off-diagonal ``sqrt(gamma_k)``."""
    for k, g in enumerate(seq.gammas, start=1):
        if not g > 0.0:
            raise NonPositiveGamma(k, f"gamma_{k} = {g!r} has no real square root")
    diag = np.array([-q.coeffs[0] for q in seq.quotients]) + 0.0
    offdiag = np.sqrt(np.array(seq.gammas, dtype=float))
    return SymmetricTridiagonal(diag, offdiag)


def naive_solve(lambdas: Sequence[float]) -> SymmetricTridiagonal:
    """Jacobi matrix with eigenvalues ``lambdas`` via polynomial expansion."""
    lam = check_strictly_increasing(lambdas)
    return build_t(schmeisser_sequence(from_roots(lam)))
