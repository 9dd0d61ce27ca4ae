import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bqst.chain import ChainSpec, DomainError
from bqst.oracle import amplitude_direct, char_poly_residual, diagonalize, site_amplitudes
from bqst.spectral import solve_modes


def test_two_site_uniform():
    eig = diagonalize(ChainSpec.uniform(2))
    np.testing.assert_allclose(eig.eigenvalues, [1.0, -1.0], atol=1e-15)
    np.testing.assert_allclose(eig.frequencies, [0.5, -0.5], atol=1e-15)


def test_three_site_uniform():
    eig = diagonalize(ChainSpec.uniform(3))
    np.testing.assert_allclose(eig.eigenvalues, [np.sqrt(2), 0.0, -np.sqrt(2)], atol=1e-14)


def test_nine_site_frequencies_match_spectral():
    spec = ChainSpec.quasi_uniform(9, 0.5, 0.8)
    np.testing.assert_allclose(diagonalize(spec).frequencies, solve_modes(spec).omega[::-1], atol=1e-10, rtol=0)


@pytest.mark.parametrize("spec", [ChainSpec.quasi_uniform(30, 0.3, 0.7), ChainSpec.perfect_transfer(21), ChainSpec.uniform(8)])
def test_orthogonality_sign_and_parity(spec):
    eig = diagonalize(spec)
    u = eig.eigenvectors
    np.testing.assert_allclose(u @ u.T, np.eye(spec.n), atol=1e-12)
    assert np.all(u[:, 0] > 0)
    assert np.all(np.diff(eig.eigenvalues) < 0)
    parity = (-1.0) ** np.arange(spec.n)  # (-1)^(n+1) for 1-based n
    np.testing.assert_allclose(u[:, ::-1], parity[:, None] * u, atol=1e-10)


def test_amplitude_at_time_zero():
    eig = diagonalize(ChainSpec.quasi_uniform(12, 0.4, 0.9))
    assert amplitude_direct(eig, 1, 0.0) == pytest.approx(1.0, abs=1e-14)
    for i in range(2, 13):
        assert abs(amplitude_direct(eig, i, 0.0)) < 1e-14


def test_amplitude_site_out_of_range():
    eig = diagonalize(ChainSpec.uniform(4))
    with pytest.raises(DomainError):
        amplitude_direct(eig, 5, 1.0)
    with pytest.raises(DomainError):
        amplitude_direct(eig, 0, 1.0)


def test_perfect_transfer_arrival():
    n = 251
    eig = diagonalize(ChainSpec.perfect_transfer(n))
    assert abs(amplitude_direct(eig, n, n + 1)) == pytest.approx(1.0, abs=1e-8)


@settings(max_examples=30, deadline=None)
@given(st.integers(5, 80), st.floats(0.02, 1.0), st.floats(0.02, 1.0), st.floats(0.0, 500.0))
def test_unitarity(n, x, y, t):
    eig = diagonalize(ChainSpec.quasi_uniform(n, x, y))
    total = sum(abs(amplitude_direct(eig, i, t)) ** 2 for i in range(1, n + 1))
    assert total == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(site_amplitudes(eig, t), [amplitude_direct(eig, i, t) for i in range(1, n + 1)], atol=1e-13)


def test_residual_vanishes_at_nine_site_eigenvalues():
    spec = ChainSpec.quasi_uniform(9, 0.5, 0.8)
    for lam in diagonalize(spec).eigenvalues:
        assert abs(char_poly_residual(spec, lam)) < 1e-8


@pytest.mark.parametrize("n", [5, 6, 20, 101, 1000])
def test_residual_uniform_band_edge(n):
    lam = 2.0 * np.cos(np.pi / (n + 1))
    assert abs(char_poly_residual(ChainSpec.quasi_uniform(n, 1.0, 1.0), lam)) < 1e-10


def test_residual_outside_spectrum():
    assert abs(char_poly_residual(ChainSpec.quasi_uniform(9, 0.5, 0.8), 3.0)) > 1e-2


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 60), st.floats(0.02, 1.0), st.floats(0.02, 1.0))
def test_residual_roots_are_eigenvalues(n, x, y):
    spec = ChainSpec.quasi_uniform(n, x, y)
    eig = diagonalize(spec)
    for lam in eig.eigenvalues:
        assert abs(char_poly_residual(spec, lam)) < 1e-8


def test_residual_matches_determinant_sign_pattern():
    # det(lam - A) changes sign exactly at each eigenvalue
    spec = ChainSpec.quasi_uniform(11, 0.4, 0.7)
    lam = np.sort(diagonalize(spec).eigenvalues)
    mids = np.concatenate(([lam[0] - 0.5], 0.5 * (lam[1:] + lam[:-1]), [lam[-1] + 0.5]))
    signs = np.sign([char_poly_residual(spec, m) for m in mids])
    assert np.all(signs[1:] == -signs[:-1])


def test_dense_guard():
    with pytest.raises(DomainError):
        diagonalize(ChainSpec.uniform(50), max_n=10)
