"""Bloch-vector and density-matrix representations of a single qubit.

A qubit state is either a real 3-vector n with |n| <= 1 (a Bloch vector)
or the corresponding 2x2 density matrix (1 + sigma.n)/2.  This module
provides the conversion both ways, closed-form eigenvalues for 2x2
Hermitian matrices, the positive-semidefinite matrix square root, and a
deterministic counter-based sampler for test points in four regimes.

All functions broadcast over leading axes: Bloch vectors have shape
(..., 3) and matrices shape (..., 2, 2).
"""

import numpy as np

__all__ = [
    "BALL_EPS",
    "PURE_NORM",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "PAULI",
    "REGIMES",
    "as_bloch_vector",
    "bloch_norm",
    "density_from_bloch",
    "bloch_from_density",
    "validate_density_matrix",
    "hermitian_eigenvalues",
    "sqrt_density",
    "random_bloch",
    "random_bloch_indexed",
]

# Largest amount by which |n| may exceed 1 before a vector is rejected.
BALL_EPS = 1e-12

# Norms above this are routed as pure: the rapidity artanh|n| is treated
# as too large for the closed-form square root and the hyperbolic
# fidelity route, which switch to their exact pure-state handling.
PURE_NORM = 1.0 - 1e-9

_HERMITIAN_TOL = 1e-12   # entry-wise, for density-matrix validation
_EIG_HERMITIAN_TOL = 1e-10  # entry-wise, for the general eigensolver
_PSD_TOL = 1e-12
_TRACE_TOL = 1e-12

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = np.stack([SIGMA_X, SIGMA_Y, SIGMA_Z])

_EYE2 = np.eye(2, dtype=complex)


def as_bloch_vector(n) -> np.ndarray:
    """Validate and return n as a float array of shape (..., 3).

    Rejects non-finite components and norms larger than 1 + BALL_EPS.
    """
    n = np.asarray(n, dtype=float)
    if n.shape[-1:] != (3,):
        raise ValueError(f"Bloch vector must have 3 components, got shape {n.shape}")
    if not np.all(np.isfinite(n)):
        raise ValueError("Bloch vector has non-finite components")
    r = np.linalg.norm(n, axis=-1)
    if np.any(r > 1.0 + BALL_EPS):
        raise ValueError(f"Bloch vector norm {float(np.max(r))!r} lies outside the unit ball")
    return n


def bloch_norm(n) -> np.ndarray:
    """Euclidean norm over the last axis."""
    return np.linalg.norm(np.asarray(n, dtype=float), axis=-1)


def _pauli_dot(vec) -> np.ndarray:
    """sigma . vec for vec of shape (..., 3), result (..., 2, 2)."""
    return np.einsum("...k,kij->...ij", vec, PAULI)


def _dot3(u, v) -> np.ndarray:
    # Fixed accumulation order, so the result is bit-identical under swap.
    return u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] + u[..., 2] * v[..., 2]


def density_from_bloch(n) -> np.ndarray:
    """Density matrix (1 + sigma.n)/2 of the Bloch vector n.

    The result is Hermitian with unit trace and eigenvalues (1 +- |n|)/2.
    """
    n = as_bloch_vector(n)
    return 0.5 * (_EYE2 + _pauli_dot(n))


def bloch_from_density(rho) -> np.ndarray:
    """Recover the Bloch vector, component k = Re trace(rho sigma_k)."""
    rho = validate_density_matrix(rho)
    return _bloch_of(rho)


def _bloch_of(rho) -> np.ndarray:
    return np.einsum("...ij,kji->...k", rho, PAULI).real


def validate_density_matrix(rho) -> np.ndarray:
    """Check Hermiticity, unit trace and positivity; return as complex array.

    Raises ValueError describing the first violated property.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape[-2:] != (2, 2):
        raise ValueError(f"density matrix must be 2x2, got shape {rho.shape}")
    if not np.all(np.isfinite(rho.real)) or not np.all(np.isfinite(rho.imag)):
        raise ValueError("density matrix has non-finite entries")
    skew = np.max(np.abs(rho - np.conj(np.swapaxes(rho, -1, -2))))
    if skew > _HERMITIAN_TOL:
        raise ValueError(f"density matrix is not Hermitian (max |m - m^dag| = {float(skew):.3e})")
    trace = np.abs(rho[..., 0, 0] + rho[..., 1, 1] - 1.0)
    if np.any(trace > _TRACE_TOL):
        raise ValueError(f"density matrix trace differs from 1 by {float(np.max(trace)):.3e}")
    lo, _ = hermitian_eigenvalues(rho)
    if np.any(lo < -_PSD_TOL):
        raise ValueError(f"density matrix has negative eigenvalue {float(np.min(lo)):.3e}")
    return rho


def hermitian_eigenvalues(m):
    """Eigenvalues (low, high) of 2x2 Hermitian matrices, closed form.

    Uses the symmetric form mean +- sqrt(((a11-a22)/2)^2 + |a12|^2),
    which stays accurate for nearly degenerate spectra where the
    quadratic formula would cancel.

    Args:
        m: array of shape (..., 2, 2), Hermitian to within 1e-10.

    Returns:
        Tuple (lambda_minus, lambda_plus) with lambda_minus <= lambda_plus.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape[-2:] != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    skew = np.max(np.abs(m - np.conj(np.swapaxes(m, -1, -2))))
    if skew > _EIG_HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (max |m - m^dag| = {float(skew):.3e})")
    a = m[..., 0, 0].real
    d = m[..., 1, 1].real
    mean = 0.5 * (a + d)
    half_gap = np.hypot(0.5 * (a - d), np.abs(m[..., 0, 1]))
    return mean - half_gap, mean + half_gap


def sqrt_density(rho) -> np.ndarray:
    """Hermitian PSD square root of a density matrix.

    For |n| <= PURE_NORM the root has the closed form

        sqrt(rho) = a (1 + (g/(1+g)) sigma.n),   a = sqrt((1+g)/(4g)),

    with g = 1/sqrt(1 - |n|^2) the Lorentz factor of the Bloch vector;
    the coefficient g/(1+g) equals tanh(artanh|n| / 2)/|n| and is regular
    at n = 0.  Above PURE_NORM the factor g diverges, so the root is
    assembled from the spectral decomposition instead: with eigenvalues
    (1 +- |n|)/2 and eigenprojectors (1 +- sigma.nhat)/2,

        sqrt(rho) = (sqrt(l+) + sqrt(l-))/2 + (sqrt(l+) - sqrt(l-))/2 sigma.nhat,

    which is exact in the pure limit |n| = 1.
    """
    rho = validate_density_matrix(rho)
    n = _bloch_of(rho)
    r = np.linalg.norm(n, axis=-1)

    r_safe = np.minimum(r, PURE_NORM)
    g = 1.0 / np.sqrt((1.0 - r_safe) * (1.0 + r_safe))
    alpha_closed = np.sqrt((1.0 + g) / (4.0 * g))
    vec_closed = (alpha_closed * g / (1.0 + g))[..., None] * n

    lam_hi = 0.5 * (1.0 + r)
    lam_lo = np.maximum(0.5 * (1.0 - r), 0.0)
    s_hi = np.sqrt(lam_hi)
    s_lo = np.sqrt(lam_lo)
    nhat = n / np.where(r > 0.0, r, 1.0)[..., None]
    alpha_spectral = 0.5 * (s_hi + s_lo)
    vec_spectral = (0.5 * (s_hi - s_lo))[..., None] * nhat

    spectral = r > PURE_NORM
    alpha = np.where(spectral, alpha_spectral, alpha_closed)
    vec = np.where(spectral[..., None], vec_spectral, vec_closed)
    return alpha[..., None, None] * _EYE2 + _pauli_dot(vec)


# ---------------------------------------------------------------------------
# Deterministic sampling.
#
# Trials must be bit-reproducible for any execution order or worker
# partitioning, so randomness is a pure function of (seed, stream, index)
# rather than sequential generator state: each needed 64-bit word is the
# splitmix64 output at an explicit counter position.
# ---------------------------------------------------------------------------

REGIMES = ("uniform_ball", "near_pure", "near_mixed", "pure")

_SM_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_SM_MUL1 = np.uint64(0xBF58476D1CE4E5B9)
_SM_MUL2 = np.uint64(0x94D049BB133111EB)

_NEAR_MIXED_MAX = 1e-3
_NEAR_PURE_GAP_LO = 1e-9
_NEAR_PURE_GAP_HI = 1e-3


def _splitmix_at(key, position):
    """splitmix64 output at the given counter position(s), vectorized."""
    with np.errstate(over="ignore"):
        x = np.asarray(key, dtype=np.uint64) + (
            np.asarray(position, dtype=np.uint64) + np.uint64(1)
        ) * _SM_GAMMA
        x = (x ^ (x >> np.uint64(30))) * _SM_MUL1
        x = (x ^ (x >> np.uint64(27))) * _SM_MUL2
        return x ^ (x >> np.uint64(31))


def _unit_interval(words) -> np.ndarray:
    """Map 64-bit words to doubles in [0, 1) using the top 53 bits."""
    return (words >> np.uint64(11)) * (2.0 ** -53)


def _check_seed(seed) -> int:
    seed = int(seed)
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


def random_bloch_indexed(seed, regime: str, indices, stream: int = 0) -> np.ndarray:
    """Bloch vectors determined by (seed, stream, index), vectorized.

    Each index yields the same vector no matter how calls are batched or
    ordered, which is what makes verification sweeps partitionable.

    Args:
        seed: unsigned 64-bit integer.
        regime: one of REGIMES.
        indices: non-negative integer or array of indices.
        stream: small integer separating independent sequences that share
            a seed (a sweep uses stream 0 for the left state, 1 for the
            right).

    Returns:
        Array of shape indices.shape + (3,).
    """
    seed = _check_seed(seed)
    if regime not in REGIMES:
        raise ValueError(f"unknown regime {regime!r}; expected one of {REGIMES}")
    idx = np.asarray(indices)
    if not np.issubdtype(idx.dtype, np.integer) or np.any(idx < 0):
        raise ValueError("indices must be non-negative integers")
    scalar = idx.ndim == 0
    idx = np.atleast_1d(idx).astype(np.uint64)

    key = _splitmix_at(_splitmix_at(np.uint64(seed), np.uint64(0)), np.uint64(stream))
    with np.errstate(over="ignore"):
        base = idx * np.uint64(4)
        u_polar = _unit_interval(_splitmix_at(key, base))
        u_azimuth = _unit_interval(_splitmix_at(key, base + np.uint64(1)))
        u_radius = _unit_interval(_splitmix_at(key, base + np.uint64(2)))

    # Uniform direction on the sphere: z uniform in [-1, 1), azimuth uniform.
    z = 2.0 * u_polar - 1.0
    s = np.sqrt(np.maximum(1.0 - z * z, 0.0))
    theta = (2.0 * np.pi) * u_azimuth
    direction = np.stack([s * np.cos(theta), s * np.sin(theta), z], axis=-1)
    direction /= np.linalg.norm(direction, axis=-1, keepdims=True)

    if regime == "uniform_ball":
        # |n|^3 uniform in [0, 1) gives uniform density over the ball volume.
        radius = np.cbrt(u_radius)
    elif regime == "near_pure":
        log_lo = np.log(_NEAR_PURE_GAP_LO)
        log_hi = np.log(_NEAR_PURE_GAP_HI)
        gap = np.exp(log_lo + u_radius * (log_hi - log_lo))
        radius = 1.0 - gap
    elif regime == "near_mixed":
        radius = _NEAR_MIXED_MAX * u_radius
    else:  # pure
        radius = np.ones_like(u_radius)

    out = radius[..., None] * direction
    return out[0] if scalar else out


def random_bloch(seed, regime: str) -> np.ndarray:
    """Single deterministic Bloch vector for (seed, regime).

    Equal to ``random_bloch_indexed(seed, regime, 0)``.
    """
    return random_bloch_indexed(seed, regime, 0)
