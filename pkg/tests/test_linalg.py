"""Factorization contracts: reconstruction, ordering, unitarity, error paths."""

import numpy as np
import pytest

from statesynth import (
    NonFiniteError,
    NotUnitaryError,
    OddDimensionError,
    cosine_sine,
    haar_unitary,
    svd,
    unitarity_defect,
    unitary_eig,
)

RECON_TOL = 1e-10


def test_svd_identity():
    res = svd(np.eye(4))
    assert np.allclose(res.singular_values, [1, 1, 1, 1])
    assert np.max(np.abs(res.reconstruct() - np.eye(4))) < RECON_TOL


def test_svd_diagonal():
    res = svd(np.diag([3.0, 1.0]))
    assert np.allclose(res.singular_values, [3.0, 1.0])
    # U and V equal identity up to phases
    assert np.allclose(np.abs(res.u), np.eye(2))
    assert np.allclose(np.abs(res.v_dagger), np.eye(2))


def test_svd_random_reconstruction():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    res = svd(a)
    scale = max(1.0, np.max(np.abs(a)))
    assert np.max(np.abs(res.reconstruct() - a)) <= RECON_TOL * scale
    s = res.singular_values
    assert np.all(s[:-1] >= s[1:]) and np.all(s >= 0)


def test_svd_rectangular():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(4, 8)) + 1j * rng.normal(size=(4, 8))
    res = svd(a)
    assert res.u.shape == (4, 4) and res.v_dagger.shape == (8, 8)
    assert np.max(np.abs(res.reconstruct() - a)) <= RECON_TOL * np.max(np.abs(a))


def test_svd_of_unitary_has_unit_singular_values():
    rng = np.random.default_rng(2)
    for dim in (2, 4, 8):
        res = svd(haar_unitary(dim, rng))
        assert np.max(np.abs(res.singular_values - 1.0)) < 1e-10


def test_svd_rejects_nonfinite():
    a = np.eye(2, dtype=complex)
    a[0, 0] = np.nan
    with pytest.raises(NonFiniteError):
        svd(a)


def test_unitary_eig_identity():
    w, v = unitary_eig(np.eye(2))
    assert np.allclose(w, [1, 1])
    assert unitarity_defect(v) < 1e-12


def test_unitary_eig_pauli_x():
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    w, v = unitary_eig(x)
    assert np.allclose(sorted(w.real), [-1, 1], atol=1e-12)
    for j in range(2):
        assert np.linalg.norm(x @ v[:, j] - w[j] * v[:, j]) < 1e-12


def test_unitary_eig_random():
    rng = np.random.default_rng(3)
    u = haar_unitary(8, rng)
    w, v = unitary_eig(u)
    assert np.max(np.abs(np.abs(w) - 1.0)) < 1e-10
    assert unitarity_defect(v) < 1e-9
    for j in range(8):
        assert np.linalg.norm(u @ v[:, j] - w[j] * v[:, j]) < 1e-9


def test_unitary_eig_rejects_nonunitary():
    with pytest.raises(NotUnitaryError):
        unitary_eig(np.diag([2.0, 1.0]))


def test_cosine_sine_identity():
    res = cosine_sine(np.eye(4))
    assert np.allclose(res.theta, 0.0, atol=1e-10)
    assert np.max(np.abs(res.reconstruct() - np.eye(4))) < RECON_TOL


def test_cosine_sine_block_diagonal():
    rng = np.random.default_rng(4)
    u0, u1 = haar_unitary(4, rng), haar_unitary(4, rng)
    u = np.zeros((8, 8), dtype=complex)
    u[:4, :4] = u0
    u[4:, 4:] = u1
    res = cosine_sine(u)
    assert np.allclose(np.sin(res.theta), 0.0, atol=1e-8)
    assert np.max(np.abs(res.reconstruct() - u)) < RECON_TOL


def test_cosine_sine_random():
    rng = np.random.default_rng(5)
    u = haar_unitary(8, rng)
    res = cosine_sine(u)
    assert np.all(res.theta >= -1e-12) and np.all(res.theta <= np.pi / 2 + 1e-12)
    for block in (res.l0, res.l1, res.r0, res.r1):
        assert unitarity_defect(block) < 1e-9
    assert np.max(np.abs(res.reconstruct() - u)) < RECON_TOL


def test_cosine_sine_rejects_odd_dimension():
    # there is no odd-dimensional unitary block split; use a 3x3 permutation
    perm = np.eye(3)[[1, 2, 0]]
    with pytest.raises(OddDimensionError):
        cosine_sine(perm)


def test_cosine_sine_rejects_nonunitary():
    with pytest.raises(NotUnitaryError):
        cosine_sine(np.ones((4, 4)))


@pytest.mark.parametrize("dim", [2, 4, 8, 16])
def test_factorization_reconstruction_sweep(dim):
    """Every factorization reconstructs its input entrywise (random sample)."""
    rng = np.random.default_rng(100 + dim)
    for _ in range(50):
        u = haar_unitary(dim, rng)
        assert np.max(np.abs(svd(u).reconstruct() - u)) < RECON_TOL
        w, v = unitary_eig(u)
        assert np.max(np.abs(v @ np.diag(w) @ v.conj().T - u)) < 1e-9
        csd = cosine_sine(u)
        assert np.max(np.abs(csd.reconstruct() - u)) < RECON_TOL
