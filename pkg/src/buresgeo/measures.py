"""Trace distance and Bures fidelity between qubit states.

Two independent computations of each quantity live here: the matrix
definitions (trace norm of the difference, trace of the square root of
sqrt(rho1) rho2 sqrt(rho1)) and closed forms in the Bloch vectors.  The
third, hyperbolic route lives in :mod:`buresgeo.hyperbolic`; the three
are cross-checked by :mod:`buresgeo.verify`.
"""

from typing import NamedTuple

import numpy as np

from .qubit import (
    _bloch_of,
    _dot3,
    as_bloch_vector,
    hermitian_eigenvalues,
    sqrt_density,
    validate_density_matrix,
)

__all__ = [
    "LambdaRoots",
    "trace_distance_matrix",
    "trace_distance_bloch",
    "bures_fidelity_matrix",
    "lambda_roots",
    "bures_fidelity_closed",
]

# Fidelities may stray at most this far outside [0, 1] before being
# treated as a computation error rather than rounding.
UNIT_SLACK = 1e-12

_PSD_SLACK = 1e-10

# Norms this close to 1 are indistinguishable from pure once a state has
# round-tripped through its density matrix: 1 - |n|^2 falls within ~1000
# ulps of zero, and the square root of that noise (~1e-8) would dwarf the
# route-agreement budget.  Both fidelity routes therefore treat the
# radical term of such states as exactly zero.
_EXACT_PURE_NORM = 1.0 - 1e-13


class LambdaRoots(NamedTuple):
    """Eigenvalues of sqrt(rho1) rho2 sqrt(rho1), largest first."""

    lambda_plus: np.ndarray
    lambda_minus: np.ndarray


def _clamp_unit(x, what: str):
    """Snap values within UNIT_SLACK of [0, 1] onto it; reject anything worse."""
    x = np.asarray(x)
    if np.any(x < -UNIT_SLACK) or np.any(x > 1.0 + UNIT_SLACK):
        bad = x[(x < -UNIT_SLACK) | (x > 1.0 + UNIT_SLACK)]
        raise ValueError(f"{what} {float(bad.flat[0])!r} lies outside [0, 1]")
    return np.clip(x, 0.0, 1.0)[()]


def _ball_gap(r):
    """1 - r^2 factored as (1-r)(1+r); exactly 0 for effectively pure norms."""
    gap = np.maximum((1.0 - r) * (1.0 + r), 0.0)
    return np.where(r > _EXACT_PURE_NORM, 0.0, gap)


def trace_distance_matrix(rho1, rho2):
    """Half the trace norm of rho1 - rho2.

    The difference is traceless Hermitian, so the distance is the sum of
    the absolute eigenvalues over two.  Always lies in [0, 1].
    """
    rho1 = validate_density_matrix(rho1)
    rho2 = validate_density_matrix(rho2)
    lo, hi = hermitian_eigenvalues(rho1 - rho2)
    return 0.5 * (np.abs(lo) + np.abs(hi))


def trace_distance_bloch(u, v):
    """Half the Euclidean distance between the Bloch vectors."""
    u = as_bloch_vector(u)
    v = as_bloch_vector(v)
    return 0.5 * np.linalg.norm(u - v, axis=-1)


def bures_fidelity_matrix(rho1, rho2):
    """Bures fidelity [trace sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2.

    Forms m = sqrt(rho1) rho2 sqrt(rho1), symmetrizes it to remove
    rounding skew, and evaluates (sqrt(L+) + sqrt(L-))^2 from its
    eigenvalues.  L+ comes from the closed-form eigensolve; L- is
    recovered through det(m) = det(rho1) det(rho2) as that product over
    L+, because the direct small root cancels to ~1e-16 absolute near
    pure states, which sqrt would amplify far beyond the route-agreement
    budget.  Each determinant is evaluated as (1-r)(1+r)/4 from the
    recovered Bloch norm, the only factorization that stays accurate
    near the sphere, with effectively pure norms giving exactly zero.

    Raises ValueError if m has an eigenvalue below -1e-10 (inputs were
    not PSD to working precision) or the result leaves [0, 1] by more
    than 1e-12.
    """
    rho1 = validate_density_matrix(rho1)
    rho2 = validate_density_matrix(rho2)
    root = sqrt_density(rho1)
    m = root @ rho2 @ root
    m = 0.5 * (m + np.conj(np.swapaxes(m, -1, -2)))
    lo, hi = hermitian_eigenvalues(m)
    if np.any(lo < -_PSD_SLACK):
        raise ValueError(
            f"sqrt(rho1) rho2 sqrt(rho1) has eigenvalue {float(np.min(lo)):.3e} < -1e-10"
        )
    r1 = np.linalg.norm(_bloch_of(rho1), axis=-1)
    r2 = np.linalg.norm(_bloch_of(rho2), axis=-1)
    det_product = _ball_gap(r1) * _ball_gap(r2) / 16.0
    lam_minus = np.where(hi > 0.0, det_product / np.where(hi > 0.0, hi, 1.0), 0.0)
    fid = (np.sqrt(hi) + np.sqrt(lam_minus)) ** 2
    return _clamp_unit(fid, "bures fidelity")


def lambda_roots(u, v) -> LambdaRoots:
    """Eigenvalues of sqrt(rho(u)) rho(v) sqrt(rho(u)) from Bloch vectors.

    With Lorentz factors g_u, g_v and g_w = g_u g_v (1 + u.v), the two
    roots are exp(+-phi_w) / (4 g_u g_v) where cosh(phi_w) = g_w.  The
    exponentials are evaluated as g_w + sinh(phi_w) and its reciprocal;
    the subtractive form cosh - sinh would cancel catastrophically for
    large phi_w.

    Requires |u|, |v| < 1; for pure inputs use bures_fidelity_closed.
    """
    u = as_bloch_vector(u)
    v = as_bloch_vector(v)
    ru = np.linalg.norm(u, axis=-1)
    rv = np.linalg.norm(v, axis=-1)
    if np.any(ru >= 1.0) or np.any(rv >= 1.0):
        raise ValueError("pure input: the root formula needs finite rapidities")
    gu = 1.0 / np.sqrt((1.0 - ru) * (1.0 + ru))
    gv = 1.0 / np.sqrt((1.0 - rv) * (1.0 + rv))
    gw = gu * gv * (1.0 + _dot3(u, v))
    sinh_w = np.sqrt(np.maximum((gw - 1.0) * (gw + 1.0), 0.0))
    exp_plus = gw + sinh_w
    denom = 4.0 * gu * gv
    return LambdaRoots((exp_plus / denom)[()], (1.0 / (exp_plus * denom))[()])


def bures_fidelity_closed(u, v):
    """Closed-form Bures fidelity (1 + u.v)/2 + sqrt((1-|u|^2)(1-|v|^2))/2.

    Valid on the whole ball including pure states, where the second term
    vanishes exactly (norms within ~1e-13 of 1 count as pure, so
    normalization rounding cannot leak into the radical).  Symmetric in
    (u, v) bit-for-bit: the dot product is accumulated in a fixed
    component order and every other operation is commutative.
    """
    u = as_bloch_vector(u)
    v = as_bloch_vector(v)
    ru = np.linalg.norm(u, axis=-1)
    rv = np.linalg.norm(v, axis=-1)
    fid = 0.5 * (1.0 + _dot3(u, v)) + 0.5 * np.sqrt(_ball_gap(ru) * _ball_gap(rv))
    return _clamp_unit(fid, "bures fidelity")
