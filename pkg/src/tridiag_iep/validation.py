from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import NotStrictlyIncreasing


def check_strictly_increasing(lambdas: Sequence[float]) -> np.ndarray:
    """Return ``lambdas`` as a float array, or raise on a bad spectrum."""
    lam = np.asarray(lambdas, dtype=float).reshape(-1)
    if lam.size == 0:
        raise NotStrictlyIncreasing(0, "at least one eigenvalue is required")
    if not np.all(np.isfinite(lam)):
        bad = int(np.flatnonzero(~np.isfinite(lam))[0])
        raise NotStrictlyIncreasing(bad, f"eigenvalue at index {bad} is not finite")
    steps = np.diff(lam)
    if np.any(steps <= 0):
        raise NotStrictlyIncreasing(int(np.flatnonzero(steps <= 0)[0]) + 1)
    return lam
