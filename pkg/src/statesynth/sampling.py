"""Haar-distributed random states and unitaries."""

import numpy as np


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def haar_state(n: int, rng=None) -> np.ndarray:
    """Uniform random pure state of n qubits via a normalized complex Gaussian."""
    rng = _as_rng(rng)
    vec = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return vec / np.linalg.norm(vec)


def haar_unitary(dim: int, rng=None) -> np.ndarray:
    """Haar-random unitary: QR of a Ginibre matrix with phase-fixed R diagonal."""
    rng = _as_rng(rng)
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))
