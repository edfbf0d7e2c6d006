import numpy as np
import pytest


def spaced_spectrum(rng, n, lo=-10.0, hi=10.0, gap=0.5):
    """Uniform sample on [lo, hi] conditioned on all adjacent gaps >= gap.

    Draws on the shrunken interval and re-inserts the gaps, which is exact
    for this conditioning and never needs rejection.
    """
    slack = (hi - lo) - (n - 1) * gap
    if slack < 0:
        raise ValueError("interval too short for the requested gap")
    return lo + np.sort(rng.uniform(0, slack, n)) + gap * np.arange(n)


def random_unreduced(rng, n, min_gap=1e-2):
    """Random unreduced tridiagonal with eigenvalues separated by min_gap."""
    from tridiag_iep import SymmetricTridiagonal

    while True:
        a = rng.uniform(-5, 5, n)
        b = rng.uniform(0.5, 3, n - 1) * rng.choice([-1, 1], n - 1)
        T = SymmetricTridiagonal(a, b)
        ev = np.linalg.eigvalsh(T.to_dense())
        if n == 1 or np.min(np.diff(ev)) > min_gap:
            return T


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


def spectral_unreduced(rng, n, gap=0.5, weights=(0.5, 1.5)):
    """Random Jacobi matrix drawn through its spectral data.

    Eigenvalues are spaced_spectrum(..., gap) and the first row of the
    eigenvector matrix has entries proportional to uniform ``weights``, so
    no eigenvector is localised away from row 0. The reduction uses LAPACK
    (scipy.linalg.hessenberg), independent of the package's Householder code.
    """
    import scipy.linalg

    from tridiag_iep import SymmetricTridiagonal

    lam = spaced_spectrum(rng, n, gap=gap)
    w = rng.uniform(*weights, n)
    w /= np.linalg.norm(w)
    v = w.copy()
    v[0] -= 1.0
    Q = np.eye(n) - 2 * np.outer(v, v) / (v @ v) if v @ v > 0 else np.eye(n)
    H = scipy.linalg.hessenberg(Q.T @ np.diag(lam) @ Q)
    return SymmetricTridiagonal(np.diag(H).copy(), np.diag(H, -1).copy())


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split("] ")[1].split(".")[0])):
            terminalreporter.write_line(line)
