import numpy as np
import pytest

from tridiag_iep.errors import (
    DegenerateRemainder,
    NonPositiveGamma,
    NotStrictlyIncreasing,
    NumericalBreakdown,
)
from tridiag_iep.poly import Polynomial, from_roots
from tridiag_iep.schmeisser import (
    SchmeisserSequence,
    build_t,
    naive_solve,
    schmeisser_sequence,
)
from tridiag_iep.tridiagonal import charpoly_top_down, eigenvalues, is_unreduced

from conftest import spaced_spectrum

R23, R13 = np.sqrt(2 / 3), np.sqrt(1 / 3)


def _coeffs(seq):
    return [q.coeffs.tolist() for q in seq.quotients]


def test_sequence_examples():
    s = schmeisser_sequence(Polynomial([-5.0, 1.0]))
    assert _coeffs(s) == [[-5.0, 1.0]] and s.gammas == ()

    s = schmeisser_sequence(Polynomial([-1.0, 0.0, 1.0]))
    assert _coeffs(s) == [[0.0, 1.0], [0.0, 1.0]]
    assert s.gammas == (1.0,)

    s = schmeisser_sequence(Polynomial([0.0, -1.0, 0.0, 1.0]))
    for q in s.quotients:
        np.testing.assert_allclose(q.coeffs, [0.0, 1.0], atol=1e-15)
    np.testing.assert_allclose(s.gammas, [2 / 3, 1 / 3], rtol=1e-15)


def test_sequence_rejects_bad_input():
    with pytest.raises(ValueError):
        schmeisser_sequence(Polynomial([3.0]))
    with pytest.raises(ValueError):
        schmeisser_sequence(Polynomial([1.0, 2.0]))


def test_repeated_root_is_degenerate():
    with pytest.raises(DegenerateRemainder) as exc:
        schmeisser_sequence(from_roots([1.0, 1.0, 2.0]))
    # f_3 is the gcd x - 1, which then divides f_2 exactly
    assert exc.value.step == 2
    assert isinstance(exc.value, NumericalBreakdown)


def test_complex_roots_give_nonpositive_gamma():
    # x^2 + 1 has no real roots: the chain produces gamma = -1
    with pytest.raises(NonPositiveGamma) as exc:
        schmeisser_sequence(Polynomial([1.0, 0.0, 1.0]))
    assert exc.value.step == 1


def test_build_t_examples():
    T = build_t(SchmeisserSequence((Polynomial([-5.0, 1.0]),), ()))
    assert T.diag.tolist() == [5.0] and T.offdiag.size == 0
    x = Polynomial([0.0, 1.0])
    T = build_t(SchmeisserSequence((x, x), (1.0,)))
    assert T.diag.tolist() == [0.0, 0.0] and T.offdiag.tolist() == [1.0]
    T = build_t(SchmeisserSequence((x, x, x), (2 / 3, 1 / 3)))
    np.testing.assert_allclose(T.offdiag, [R23, R13], rtol=1e-15)
    assert is_unreduced(T)
    with pytest.raises(NonPositiveGamma):
        build_t(SchmeisserSequence((x, x), (0.0,)))


def test_naive_solve_examples():
    assert naive_solve([5.0]).diag.tolist() == [5.0]
    T = naive_solve([-1.0, 1.0])
    assert T.diag.tolist() == [0.0, 0.0] and T.offdiag.tolist() == [1.0]
    T = naive_solve([-1.0, 0.0, 1.0])
    np.testing.assert_allclose(T.diag, 0.0, atol=1e-12)
    np.testing.assert_allclose(T.offdiag, [R23, R13], atol=1e-12)


@pytest.mark.parametrize("bad", [[], [1.0, 1.0], [2.0, 1.0], [0.0, np.nan]])
def test_naive_solve_validates(bad):
    with pytest.raises(NotStrictlyIncreasing):
        naive_solve(bad)


def test_eq2_reconstructs_u(rng):
    # downward f_v = q_v f_{v+1} - gamma_v f_{v+2} must give back f_1 = u
    for n in range(1, 16):
        lam = spaced_spectrum(rng, n)
        u = from_roots(lam)
        s = schmeisser_sequence(u)
        f_next, f = Polynomial([1.0]), s.quotients[-1]
        for q, g in zip(reversed(s.quotients[:-1]), reversed(s.gammas)):
            f_next, f = f, q * f - g * f_next
        scale = np.max(np.abs(u.coeffs))
        np.testing.assert_allclose(f.coeffs, u.coeffs, rtol=0, atol=1e-10 * scale)


def test_charpoly_round_trip(rng):
    for n in (5, 12, 20, 30):
        hits = 0
        for _ in range(10):
            lam = np.sort(rng.uniform(-10, 10, n))
            try:
                T = naive_solve(lam)
            except NumericalBreakdown:
                continue
            hits += 1
            p = charpoly_top_down(T)[-1].coeffs
            u = from_roots(lam).coeffs
            assert np.max(np.abs(p - u) / np.abs(u)) <= 1e-6
        assert hits > 0


def test_small_integer_spectra_are_recovered():
    for n in range(1, 9):
        lam = np.arange(n, dtype=float) * 2 - n
        np.testing.assert_allclose(eigenvalues(naive_solve(lam)), lam, atol=1e-8)


def test_gammas_positive_on_spaced_spectra(rng):
    for n in range(2, 21):
        for _ in range(3):
            s = schmeisser_sequence(from_roots(spaced_spectrum(rng, n)))
            assert all(g > 0 for g in s.gammas)
            assert all(q.degree == 1 and q.coeffs[-1] == 1.0 for q in s.quotients)
