import numpy as np
import pytest

from tridiag_iep.errors import DimensionMismatch, ReducedMatrix
from tridiag_iep.householder import diag2trid
from tridiag_iep.schmeisser import naive_solve
from tridiag_iep.tridiagonal import SymmetricTridiagonal, eigen_decomposition
from tridiag_iep.verify import (
    dptz_identity_residual,
    equal_up_to_offdiag_sign,
    first_row_uniform_residual,
    theorem_polynomial_identity_residual,
)

from conftest import random_unreduced, spaced_spectrum, spectral_unreduced

T2 = SymmetricTridiagonal([0.0, 0.0], [1.0])


def test_comparison_examples():
    assert equal_up_to_offdiag_sign(T2, T2, 0.0)
    assert equal_up_to_offdiag_sign(T2, SymmetricTridiagonal([0.0, 0.0], [-1.0]), 1e-12)
    cmp = equal_up_to_offdiag_sign(naive_solve([-1.0, 0.0, 1.0]), diag2trid([-1.0, 0.0, 1.0])[0], 1e-10)
    assert cmp.equal
    with pytest.raises(DimensionMismatch):
        equal_up_to_offdiag_sign(T2, SymmetricTridiagonal([1.0], []), 1.0)


def test_comparison_report_locates_deviation():
    S = SymmetricTridiagonal([0.0, 1.0, 2.0], [1.0, 1.0])
    T = SymmetricTridiagonal([0.0, 1.5, 2.0], [1.0, -1.25])
    cmp = equal_up_to_offdiag_sign(S, T, 0.3)
    assert not cmp
    assert (cmp.max_diag_deviation, cmp.diag_index) == (0.5, 1)
    assert (cmp.max_offdiag_deviation, cmp.offdiag_index) == (0.25, 1)
    assert "DIFFERENT" in cmp.summary()


def test_comparison_rejects_nan():
    S = SymmetricTridiagonal([np.nan, 0.0], [1.0])
    assert not equal_up_to_offdiag_sign(S, T2, 1.0)


def test_comparison_is_symmetric(rng):
    for _ in range(20):
        n = int(rng.integers(1, 8))
        S, T = random_unreduced(rng, n, 0), random_unreduced(rng, n, 0)
        tol = float(rng.uniform(0, 10))
        assert bool(equal_up_to_offdiag_sign(S, T, tol)) == bool(equal_up_to_offdiag_sign(T, S, tol))


def test_dptz_examples():
    assert dptz_identity_residual(SymmetricTridiagonal([5.0], [])).tolist() == [0.0]
    assert np.max(dptz_identity_residual(T2)) <= 1e-12
    with pytest.raises(ReducedMatrix):
        dptz_identity_residual(SymmetricTridiagonal([0.0, 0.0], [0.0]))


def test_dptz_on_random_matrices(rng):
    for n in range(1, 16):
        assert np.max(dptz_identity_residual(spectral_unreduced(rng, n))) <= 1e-8


def test_dptz_loses_accuracy_only_with_localised_vectors(rng):
    # a first eigenvector component of ~1e-9 makes lam_i nearly an eigenvalue
    # of T[1:, 1:]; the identity is then ill-conditioned, not wrong
    T = spectral_unreduced(rng, 10, weights=(0.5, 1.5))
    assert np.max(dptz_identity_residual(T)) <= 1e-10
    for _ in range(20):
        T = random_unreduced(rng, 12, 0.05)
        e = eigen_decomposition(T)
        r = dptz_identity_residual(T)
        good = np.abs(e.vectors[0]) > 1e-3
        assert np.all(r[good] <= 1e-8)


def test_dptz_on_constructed_matrices(rng):
    for n in (20, 60, 150):
        lam = np.sort(rng.uniform(-10, 10, n))
        assert np.max(dptz_identity_residual(diag2trid(lam)[0])) <= 1e-8


def test_first_row_examples():
    assert first_row_uniform_residual(np.ones((1, 1))) == 0.0
    assert first_row_uniform_residual(diag2trid([-1.0, 1.0])[1]) <= 1e-14
    W = eigen_decomposition(naive_solve([-1.0, 0.0, 1.0])).vectors
    assert first_row_uniform_residual(W) <= 1e-10


def test_first_row_is_not_trivially_small():
    W = eigen_decomposition(SymmetricTridiagonal([0.0, 5.0], [1.0])).vectors
    assert first_row_uniform_residual(W) > 0.1


def test_theorem_identity_examples():
    assert theorem_polynomial_identity_residual(naive_solve([-1.0, 0.0, 1.0])) <= 1e-12
    assert theorem_polynomial_identity_residual(T2) <= 1e-14
    r = theorem_polynomial_identity_residual(SymmetricTridiagonal([0.0, 5.0], [1.0]))
    assert r == pytest.approx(0.5)
    assert theorem_polynomial_identity_residual(SymmetricTridiagonal([3.0], [])) == 0.0


def test_theorem_identity_for_both_constructions(rng):
    for n in range(1, 16):
        lam = spaced_spectrum(rng, n)
        assert theorem_polynomial_identity_residual(diag2trid(lam)[0]) <= 1e-8
        assert theorem_polynomial_identity_residual(naive_solve(lam)) <= 1e-8


def test_equivalence_at_desk_scale(rng):
    for n in range(1, 13):
        lam = spaced_spectrum(rng, n)
        assert equal_up_to_offdiag_sign(naive_solve(lam), diag2trid(lam)[0], 1e-6)
