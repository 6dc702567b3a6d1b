#!/usr/bin/env python3
"""The special-relativity dictionary behind the fidelity formula.

A Bloch vector plays the role of a velocity (speed of light 1): its
rapidity is phi = artanh|n|, its Lorentz factor cosh(phi), and the 2x2
boost matrix divided by its trace is exactly the density matrix.  Two
states then compose by the Einstein velocity addition law, and the
Lorentz factor of the sum obeys the hyperbolic law of cosines.
"""

import numpy as np

import buresgeo as bg

n = np.array([0.0, 0.0, 0.6])
rep = bg.rapidity_from_bloch(n)
print(f"Bloch vector      : {n}")
print(f"rapidity phi      : {rep.phi:.10f}   (artanh 0.6 = ln 2)")
print(f"Lorentz factor    : {np.cosh(rep.phi):.10f}   (1/sqrt(1-0.36) = 1.25)")

boost = bg.lorentz_boost(rep)
print(f"\nboost matrix      : diag({boost[0,0].real:.6f}, {boost[1,1].real:.6f})"
      "   (eigenvalues exp(+-phi))")
rho = bg.density_from_bloch(n)
print(f"boost normalized  :\n{(boost / np.trace(boost).real).real}")
print(f"density matrix    :\n{rho.real}")

# Einstein addition is not commutative, but the composed speed is.
u = np.array([0.5, 0.0, 0.0])
v = np.array([0.0, 0.5, 0.0])
uv = bg.einstein_add(u, v)
vu = bg.einstein_add(v, u)
print(f"\nu (+) v           : {uv}")
print(f"v (+) u           : {vu}")
print(f"|u (+) v|, |v (+) u|: {bg.bloch_norm(uv):.15f}, {bg.bloch_norm(vu):.15f}")

# Collinear speeds add by rapidity: artanh(0.5) + artanh(0.5) = artanh(0.8).
twice = bg.einstein_add(u, u)
print(f"\nu (+) u           : {twice}   (tanh(2 artanh 0.5) = 0.8)")

# The law of cosines gives the Lorentz factor of the sum directly.
gw = bg.gamma_composition(u, v)
print(f"\ncosh phi_w        : {gw:.10f}   (= gamma_u gamma_v (1 + u.v) = 4/3)")
print(f"check vs |u (+) v|: {1/np.sqrt(1 - bg.bloch_norm(uv)**2):.10f}")

# And the fidelity is a ratio of hyperbolic cosines of the triangle sides.
fid = bg.fidelity_hyperbolic(u, v)
print(f"\nF via rapidities  : {fid:.10f}")
print(f"F via matrices    : {bg.bures_fidelity_matrix(bg.density_from_bloch(u), bg.density_from_bloch(v)):.10f}")
