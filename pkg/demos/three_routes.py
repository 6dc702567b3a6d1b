#!/usr/bin/env python3
"""Walk through the three fidelity routes on a handful of state pairs.

Every pair of qubit states gives the same Bures fidelity three ways:

  matrix      [trace sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2 on the 2x2 matrices
  hyperbolic  cosh^2(phi_w/2) / (cosh phi_u cosh phi_v) from rapidities
  closed      (1 + u.v)/2 + sqrt((1 - |u|^2)(1 - |v|^2))/2 on Bloch vectors

and the trace distance is simply half the Euclidean distance between the
Bloch vectors.  This script prints all of them side by side.
"""

import numpy as np

import buresgeo as bg

pairs = [
    ("identical mixed", [0.2, 0.1, 0.3], [0.2, 0.1, 0.3]),
    ("orthogonal axes", [0.5, 0.0, 0.0], [0.0, 0.5, 0.0]),
    ("mixed vs pure", [0.0, 0.0, 0.0], [0.0, 0.0, 1.0]),
    ("antipodal pure", [0.0, 0.0, 1.0], [0.0, 0.0, -1.0]),
    ("nearly pure pair", [0.0, 0.999999, 0.0], [0.0007, 0.9999, 0.0]),
    ("random-ish", [0.31, -0.42, 0.12], [-0.05, 0.17, -0.66]),
]

header = f"{'pair':>18}  {'F matrix':>12}  {'F hyperbolic':>12}  {'F closed':>12}  {'D trace':>10}  {'spread':>9}"
print(header)
print("-" * len(header))

for label, u, v in pairs:
    report = bg.compare(u, v)
    hyp = f"{report.f_hyperbolic:.10f}" if report.f_hyperbolic is not None else "   (pure)   "
    print(
        f"{label:>18}  {report.f_matrix:>12.10f}  {hyp:>12}  {report.f_closed:>12.10f}"
        f"  {report.d_trace:>10.7f}  {report.max_pairwise_diff:>9.2e}"
    )

# The two distance measures bracket each other (Fuchs - van de Graaf):
#   1 - sqrt(F) <= D <= sqrt(1 - F)
print("\nFuchs-van de Graaf sandwich on 5 random pairs:")
u = bg.random_bloch_indexed(1, "uniform_ball", np.arange(5), stream=0)
v = bg.random_bloch_indexed(1, "uniform_ball", np.arange(5), stream=1)
fid = bg.bures_fidelity_closed(u, v)
dist = bg.trace_distance_bloch(u, v)
for k in range(5):
    print(
        f"  1 - sqrt(F) = {1 - np.sqrt(fid[k]):.6f}  <=  D = {dist[k]:.6f}"
        f"  <=  sqrt(1 - F) = {np.sqrt(1 - fid[k]):.6f}"
    )
