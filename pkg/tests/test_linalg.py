import numpy as np
import pytest
from scipy.linalg import sqrtm

from spinwitness.errors import NotHermitian, NotPSD
from spinwitness.linalg import conjugate_by, hermitian_eigen, matrix_sqrt_psd

from helpers import SINGLET, rand_hermitian


def test_eigen_identity():
    res = hermitian_eigen(np.eye(4, dtype=complex))
    assert np.allclose(res.eigenvalues, [1, 1, 1, 1], atol=1e-14)


def test_eigen_diagonal_sorted_ascending():
    res = hermitian_eigen(np.diag([0.0, 0.25, 0.25, 0.5]).astype(complex))
    assert np.allclose(res.eigenvalues, [0.0, 0.25, 0.25, 0.5], atol=1e-14)
    assert np.all(np.diff(res.eigenvalues) >= 0)


def test_eigen_trace_identity_sweep():
    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(10000):
        h = rand_hermitian(rng)
        res = hermitian_eigen(h)
        direct = sum(float(h[i, i].real) for i in range(4))
        worst = max(worst, abs(float(res.eigenvalues.sum()) - direct))
    assert worst <= 1e-10


def test_eigen_reconstruction_and_orthonormality():
    rng = np.random.default_rng(2)
    for _ in range(500):
        h = rand_hermitian(rng)
        res = hermitian_eigen(h)
        v = res.eigenvectors
        rebuilt = (v * res.eigenvalues) @ v.conj().T
        assert np.max(np.abs(rebuilt - h)) <= 1e-10
        assert np.max(np.abs(v.conj().T @ v - np.eye(4))) <= 1e-10


def test_eigen_rejects_non_hermitian():
    m = np.zeros((4, 4), dtype=complex)
    m[0, 1] = 1.0
    with pytest.raises(NotHermitian, match="M - M"):
        hermitian_eigen(m)


def test_eigen_is_pure():
    rng = np.random.default_rng(3)
    h = rand_hermitian(rng)
    a = hermitian_eigen(h)
    b = hermitian_eigen(h)
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_sqrt_identity():
    s = matrix_sqrt_psd(np.eye(4, dtype=complex))
    assert np.max(np.abs(s - np.eye(4))) <= 1e-14


def test_sqrt_diagonal():
    s = matrix_sqrt_psd(np.diag([4.0, 1.0, 0.0, 0.0]).astype(complex))
    assert np.max(np.abs(s - np.diag([2.0, 1.0, 0.0, 0.0]))) <= 1e-12


def test_sqrt_of_projector_is_projector():
    s = matrix_sqrt_psd(SINGLET)
    assert np.max(np.abs(s - SINGLET)) <= 1e-12


def test_sqrt_squares_back():
    rng = np.random.default_rng(4)
    for _ in range(1000):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        psd = a @ a.conj().T
        s = matrix_sqrt_psd(psd)
        assert np.max(np.abs(s @ s - psd)) <= 1e-9
        # recovering the original root of S.S
        assert np.max(np.abs(matrix_sqrt_psd(s @ s) - s)) <= 1e-8


def test_sqrt_matches_scipy():
    rng = np.random.default_rng(5)
    for _ in range(20):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        psd = a @ a.conj().T
        assert np.max(np.abs(matrix_sqrt_psd(psd) - sqrtm(psd))) <= 1e-9


def test_sqrt_rejects_negative():
    with pytest.raises(NotPSD, match="eigenvalue"):
        matrix_sqrt_psd(np.diag([1.0, 1.0, 1.0, -1e-6]).astype(complex))


def test_sqrt_clips_tiny_negative():
    s = matrix_sqrt_psd(np.diag([1.0, 1.0, 1.0, -5e-11]).astype(complex))
    assert s[3, 3].real == 0.0


def test_conjugate_by_identity():
    rng = np.random.default_rng(6)
    m = rand_hermitian(rng)
    assert np.max(np.abs(conjugate_by(m, np.eye(4)) - m)) <= 1e-14


def test_conjugate_by_permutation():
    perm = np.eye(4)[:, [1, 0, 2, 3]]
    out = conjugate_by(np.diag([1.0, 0.0, 0.0, 0.0]), perm)
    assert np.allclose(out, np.diag([0.0, 1.0, 0.0, 0.0]), atol=1e-14)


def test_conjugate_preserves_trace():
    rng = np.random.default_rng(7)
    for _ in range(100):
        m = rand_hermitian(rng)
        z = (rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))) / np.sqrt(2)
        q, r = np.linalg.qr(z)
        u = q * (np.diagonal(r) / np.abs(np.diagonal(r)))
        assert abs(np.trace(conjugate_by(m, u)) - np.trace(m)) <= 1e-12
