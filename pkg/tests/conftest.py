"""Shared oracles and samplers for the test suite.

The brute-force fidelity and trace distance below go through scipy's
general-purpose matrix functions and numpy's eigensolver, none of which
the library itself touches, so they stay independent of every route
under test.
"""

import numpy as np
from scipy.linalg import sqrtm

import buresgeo as bg


def fidelity_brute(rho1, rho2) -> float:
    """[trace sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2 via scipy.linalg.sqrtm."""
    root = sqrtm(np.asarray(rho1, dtype=complex))
    inner = sqrtm(root @ np.asarray(rho2, dtype=complex) @ root)
    return float(np.real(np.trace(inner)) ** 2)


def trace_distance_brute(rho1, rho2) -> float:
    """Half the sum of absolute eigenvalues of the difference, via eigvalsh."""
    eigs = np.linalg.eigvalsh(np.asarray(rho1) - np.asarray(rho2))
    return float(0.5 * np.sum(np.abs(eigs)))


def disk_distance_mobius(p, q) -> float:
    """Literal Mobius-quotient form 2 artanh |(p - q) / (1 - conj(p) q)|."""
    b = complex(*np.asarray(p, dtype=float))
    c = complex(*np.asarray(q, dtype=float))
    return float(2.0 * np.arctanh(abs((b - c) / (1.0 - b.conjugate() * c))))


def random_rotations(rng: np.random.Generator, count: int) -> np.ndarray:
    """Proper rotation matrices, shape (count, 3, 3), via QR with sign fixing."""
    q, r = np.linalg.qr(rng.normal(size=(count, 3, 3)))
    q = q * np.sign(np.einsum("...ii->...i", r))[:, None, :]
    det = np.linalg.det(q)
    q[det < 0, :, 0] *= -1.0
    return q


def regime_pairs(seed: int, trials: int, regimes=None):
    """Yield (regime_u, regime_v, u, v) sampled batches for each combination."""
    if regimes is None:
        regimes = bg.REGIMES
    idx = np.arange(trials)
    for regime_u in regimes:
        for regime_v in regimes:
            u = bg.random_bloch_indexed(seed, regime_u, idx, stream=0)
            v = bg.random_bloch_indexed(seed, regime_v, idx, stream=1)
            yield regime_u, regime_v, u, v


def assert_close_scaled(actual, expected, tol: float, what: str = "value") -> None:
    """|actual - expected| <= tol * max(1, |actual|, |expected|), elementwise.

    Quantities like cosh(phi) are unbounded, so a fixed absolute
    tolerance is only meaningful relative to their scale; at O(1) this
    reduces to the plain absolute comparison.
    """
    actual = np.asarray(actual, dtype=float)
    expected = np.asarray(expected, dtype=float)
    scale = np.maximum(1.0, np.maximum(np.abs(actual), np.abs(expected)))
    err = np.abs(actual - expected) / scale
    worst = float(np.max(err))
    assert worst <= tol, f"{what}: scaled error {worst:.3e} exceeds {tol:.1e}"
