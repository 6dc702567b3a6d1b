"""Rapidity calculus on the Bloch ball.

A Bloch vector n factors as nhat * tanh(phi) with phi = artanh|n| the
rapidity; the Lorentz factor cosh(phi) equals 1/sqrt(1 - |n|^2).  Under
this map, qubit states compose like relativistic velocities, the
hyperbolic law of cosines gives the rapidity of the Einstein sum, and
the Bures fidelity collapses to

    F = cosh^2(phi_w / 2) / (cosh(phi_u) cosh(phi_v)),   w = u (+) v.

The module exposes that route plus the triangle with sides (phi_u,
phi_v, phi_w) embedded in the Poincare disk, so the geometry behind a
fidelity value can be inspected and plotted.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .qubit import PURE_NORM, _dot3, _pauli_dot, as_bloch_vector

__all__ = [
    "DEGENERATE_NORM",
    "Rapidity",
    "HyperbolicTriangle",
    "rapidity_from_bloch",
    "bloch_from_rapidity",
    "lorentz_boost",
    "einstein_add",
    "gamma_composition",
    "fidelity_hyperbolic",
    "triangle",
    "geodesic_points",
    "disk_distance",
]

# Below this norm a Bloch vector has no usable direction and the
# triangle construction degenerates to a segment.
DEGENERATE_NORM = 1e-12

_EYE2 = np.eye(2, dtype=complex)
_Z_AXIS = np.array([0.0, 0.0, 1.0])


class Rapidity(NamedTuple):
    """Polar-hyperbolic form of a Bloch vector: n = direction * tanh(phi)."""

    direction: np.ndarray
    phi: np.ndarray


def _norm(x):
    return np.linalg.norm(x, axis=-1)


def _gamma(r):
    """Lorentz factor 1/sqrt(1 - r^2), evaluated as (1-r)(1+r) for accuracy."""
    return 1.0 / np.sqrt((1.0 - r) * (1.0 + r))


def rapidity_from_bloch(n) -> Rapidity:
    """Rapidity representation of n; phi is +inf exactly when |n| >= 1.

    The direction defaults to the z axis at n = 0, where phi = 0 makes
    it arbitrary.
    """
    n = as_bloch_vector(n)
    r = _norm(n)
    direction = np.where((r > 0.0)[..., None], n / np.where(r > 0.0, r, 1.0)[..., None], _Z_AXIS)
    phi = np.where(r < 1.0, np.arctanh(np.where(r < 1.0, r, 0.0)), np.inf)
    return Rapidity(direction[()], phi[()])


def bloch_from_rapidity(rep: Rapidity) -> np.ndarray:
    """Bloch vector direction * tanh(phi); phi = +inf maps onto the sphere."""
    direction = np.asarray(rep.direction, dtype=float)
    phi = np.asarray(rep.phi, dtype=float)
    return np.tanh(phi)[..., None] * direction


def lorentz_boost(rep: Rapidity) -> np.ndarray:
    """Boost matrix cosh(phi) + sigma.direction sinh(phi).

    Hermitian with determinant 1 and trace 2 cosh(phi); dividing by the
    trace recovers the density matrix of the underlying Bloch vector.
    Raises ValueError for phi = +inf (pure states have no finite boost).
    """
    direction = np.asarray(rep.direction, dtype=float)
    phi = np.asarray(rep.phi, dtype=float)
    if np.any(~np.isfinite(phi)):
        raise ValueError("pure state: the boost matrix diverges at phi = +inf")
    ch = np.cosh(phi)
    sh = np.sinh(phi)
    return ch[..., None, None] * _EYE2 + _pauli_dot(sh[..., None] * direction)


def einstein_add(u, v) -> np.ndarray:
    """Einstein velocity addition u (+) v (speed of light 1).

        w = [u + v/g_u + (g_u/(1+g_u)) (u.v) u] / (1 + u.v)

    Not commutative, but |u (+) v| = |v (+) u|.  Requires |u| < 1 so the
    Lorentz factor g_u is finite, and 1 + u.v > 1e-15 (the antipodal
    pure limit has no well-defined sum).
    """
    u = as_bloch_vector(u)
    v = as_bloch_vector(v)
    ru = _norm(u)
    if np.any(ru >= 1.0):
        raise ValueError("left operand of einstein_add must lie strictly inside the ball")
    dot = _dot3(u, v)
    denom = 1.0 + dot
    if np.any(denom <= 1e-15):
        raise ValueError("antipodal pure limit: 1 + u.v vanishes")
    gu = _gamma(ru)
    w = (u + v / gu[..., None] + (gu / (1.0 + gu) * dot)[..., None] * u) / denom[..., None]
    # Rounding may land an ulp outside the closed ball; pull back onto it.
    # Division can itself round back above 1, so shave the stragglers.
    over = _norm(w) > 1.0
    if np.any(over):
        w = np.where(over[..., None], w / _norm(w)[..., None], w)
        over = _norm(w) > 1.0
        while np.any(over):
            w = np.where(over[..., None], w * (1.0 - 2.0**-52), w)
            over = _norm(w) > 1.0
    return w


def gamma_composition(u, v):
    """Lorentz factor of u (+) v: g_w = g_u g_v (1 + u.v) = cosh(phi_w).

    This is the hyperbolic law of cosines for the triangle with sides
    phi_u, phi_v and included angle pi - arccos(uhat.vhat).
    """
    u = as_bloch_vector(u)
    v = as_bloch_vector(v)
    ru = _norm(u)
    rv = _norm(v)
    if np.any(ru >= 1.0) or np.any(rv >= 1.0):
        raise ValueError("pure input: the Lorentz factor diverges on the sphere")
    return (_gamma(ru) * _gamma(rv) * (1.0 + _dot3(u, v)))[()]


def fidelity_hyperbolic(u, v):
    """Bures fidelity via rapidities: cosh^2(phi_w/2) / (cosh phi_u cosh phi_v).

    cosh^2(phi_w/2) is evaluated by the half-angle identity
    (1 + cosh phi_w)/2 straight from the composed Lorentz factor, never
    through phi_w itself (arccosh loses precision near 1).

    Requires |u|, |v| <= PURE_NORM; route pure states through
    bures_fidelity_closed, which is exact there.
    """
    u = as_bloch_vector(u)
    v = as_bloch_vector(v)
    ru = _norm(u)
    rv = _norm(v)
    if np.any(ru > PURE_NORM) or np.any(rv > PURE_NORM):
        raise ValueError(
            "input too close to pure for the rapidity route (|n| > 1 - 1e-9); "
            "use bures_fidelity_closed"
        )
    gu = _gamma(ru)
    gv = _gamma(rv)
    gw = gu * gv * (1.0 + _dot3(u, v))
    fid = (1.0 + gw) / (2.0 * gu * gv)
    if np.any(fid < -1e-12) or np.any(fid > 1.0 + 1e-12):
        raise ValueError("hyperbolic fidelity left [0, 1]; inputs are inconsistent")
    return np.clip(fid, 0.0, 1.0)[()]


# ---------------------------------------------------------------------------
# The triangle behind a fidelity value, embedded in the Poincare disk.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HyperbolicTriangle:
    """Triangle ABC with |AB| = phi_u, |AC| = phi_v, |BC| = phi_w.

    The embedding pose is canonical: A at the disk origin, B on the
    positive x axis, C at polar angle ``angle_a``.  ``disk_d`` is the
    geodesic midpoint of BC and ``median_ad`` the hyperbolic length of
    the median from A to it.
    """

    phi_u: float
    phi_v: float
    phi_w: float
    angle_a: float
    median_ad: float
    disk_a: tuple
    disk_b: tuple
    disk_c: tuple
    disk_d: tuple

    def sides(self) -> tuple:
        return (self.phi_u, self.phi_v, self.phi_w)


def _half_tanh(r, g):
    """tanh(phi/2) for r = tanh(phi), via r*g/(1+g); regular at r = 0."""
    return r * g / (1.0 + g)


def _mobius_to_origin(b: complex, z: complex) -> complex:
    """Disk automorphism sending b to 0, applied to z."""
    return (z - b) / (1.0 - b.conjugate() * z)


def _mobius_from_origin(b: complex, z: complex) -> complex:
    """Inverse of _mobius_to_origin(b, .)."""
    return (z + b) / (1.0 + b.conjugate() * z)


def _geodesic_midpoint(b: complex, c: complex) -> complex:
    """Midpoint of the geodesic segment from b to c in the Poincare disk.

    The arc length comes from disk_distance, not from the translated
    radius |t| = tanh(d/2): near the rim that radius saturates and would
    misplace the midpoint by ~1e-9.
    """
    t = _mobius_to_origin(b, c)
    rt = abs(t)
    if rt == 0.0:
        return b
    d = disk_distance((b.real, b.imag), (c.real, c.imag))
    return _mobius_from_origin(b, math.tanh(d / 4.0) * (t / rt))


def geodesic_points(p, q, count: int) -> np.ndarray:
    """``count`` points along the geodesic from p to q, equally spaced in arc length.

    Endpoints are returned exactly.  Points are (x, y) rows; p and q may
    be 2-vectors or complex numbers strictly inside the unit disk.
    """
    if count < 2:
        raise ValueError("a geodesic polyline needs at least 2 points")
    b = complex(*np.asarray(p, dtype=float)) if not isinstance(p, complex) else p
    c = complex(*np.asarray(q, dtype=float)) if not isinstance(q, complex) else q
    t = _mobius_to_origin(b, c)
    rt = abs(t)
    fractions = np.linspace(0.0, 1.0, count)
    if rt == 0.0:
        z = np.full(count, b, dtype=complex)
    else:
        # Arc length from the stable distance form; |t| saturates near the rim.
        d = disk_distance((b.real, b.imag), (c.real, c.imag))
        radii = np.tanh(fractions * (d / 2.0))
        ray = radii * (t / rt)
        z = (ray + b) / (1.0 + b.conjugate() * ray)
    out = np.column_stack([z.real, z.imag])
    out[0] = (b.real, b.imag)
    out[-1] = (c.real, c.imag)
    return out


def disk_distance(p, q) -> float:
    """Hyperbolic distance between two Poincare-disk points.

    Uses arccosh(1 + 2|p-q|^2 / ((1-|p|^2)(1-|q|^2))), which stays
    accurate out to the rim where the Mobius-quotient form cancels.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    pq2 = np.sum((p - q) ** 2, axis=-1)
    depth = (1.0 - np.sum(p * p, axis=-1)) * (1.0 - np.sum(q * q, axis=-1))
    return np.arccosh(1.0 + 2.0 * pq2 / depth)[()]


def triangle(u, v) -> HyperbolicTriangle:
    """Construct the rapidity triangle of the pair (u, v).

    Sides are phi_u = artanh|u|, phi_v = artanh|v| and phi_w, the
    rapidity of u (+) v.  The vertex angle at A is pi - arccos(uhat.vhat)
    and the median length follows the identity

        cosh(median) = (cosh phi_u + cosh phi_v) / (2 cosh(phi_w / 2)),

    cross-checked in the test suite against the geodesic midpoint
    coordinates.  Norms must lie in (DEGENERATE_NORM, PURE_NORM]:
    smaller leaves the direction undefined, larger has no finite sides.
    """
    u = as_bloch_vector(u)
    v = as_bloch_vector(v)
    if u.shape != (3,) or v.shape != (3,):
        raise ValueError("triangle takes a single pair of Bloch vectors")
    ru = float(_norm(u))
    rv = float(_norm(v))
    if ru <= DEGENERATE_NORM or rv <= DEGENERATE_NORM:
        raise ValueError(
            f"degenerate input: |u| = {ru:.3e}, |v| = {rv:.3e}; directions below "
            f"{DEGENERATE_NORM} are undefined and the triangle collapses to a segment"
        )
    if ru > PURE_NORM or rv > PURE_NORM:
        raise ValueError("pure input: triangle sides artanh|n| must be finite (|n| <= 1 - 1e-9)")

    phi_u = math.atanh(ru)
    phi_v = math.atanh(rv)
    gu = float(_gamma(ru))
    gv = float(_gamma(rv))

    cos_hat = float(_dot3(u, v)) / (ru * rv)
    angle_a = math.pi - math.acos(min(1.0, max(-1.0, cos_hat)))

    w = einstein_add(u, v)
    rw = float(_norm(w))
    gw = float(gamma_composition(u, v))
    # artanh is accurate for moderate |w| but saturates near the rim,
    # where arccosh of the composed Lorentz factor takes over.
    phi_w = math.atanh(rw) if rw <= 0.9 else math.acosh(max(gw, 1.0))

    cosh_half_w = math.sqrt((1.0 + gw) / 2.0)
    median_ad = math.acosh(max((gu + gv) / (2.0 * cosh_half_w), 1.0))

    b = complex(_half_tanh(ru, gu), 0.0)
    tc = _half_tanh(rv, gv)
    c = complex(tc * math.cos(angle_a), tc * math.sin(angle_a))
    d = _geodesic_midpoint(b, c)

    return HyperbolicTriangle(
        phi_u=phi_u,
        phi_v=phi_v,
        phi_w=phi_w,
        angle_a=angle_a,
        median_ad=median_ad,
        disk_a=(0.0, 0.0),
        disk_b=(b.real, b.imag),
        disk_c=(c.real, c.imag),
        disk_d=(d.real, d.imag),
    )
