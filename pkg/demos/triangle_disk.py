#!/usr/bin/env python3
"""Draw the hyperbolic triangle that encodes a fidelity value.

The triangle has vertex A at the disk origin, sides |AB| = artanh|u|,
|AC| = artanh|v| meeting at angle pi - arccos(uhat.vhat), and |BC| the
rapidity of the Einstein sum.  D marks the midpoint of BC.  The script
prints the triangle data and, when matplotlib is available, saves the
geodesics to triangle_disk.png.
"""

import numpy as np

import buresgeo as bg

u = [0.70, 0.10, 0.00]
v = [-0.20, 0.62, 0.00]

tri = bg.triangle(u, v)
fid = bg.fidelity_hyperbolic(u, v)

print(f"u = {u}, v = {v}")
print(f"sides     phi_u = {tri.phi_u:.6f}, phi_v = {tri.phi_v:.6f}, phi_w = {tri.phi_w:.6f}")
print(f"angle A   {tri.angle_a:.6f} rad = {np.degrees(tri.angle_a):.2f} deg")
print(f"median AD {tri.median_ad:.6f}")
print(f"vertices  A={tri.disk_a}  B=({tri.disk_b[0]:.6f}, {tri.disk_b[1]:.6f})"
      f"  C=({tri.disk_c[0]:.6f}, {tri.disk_c[1]:.6f})")
print(f"midpoint  D=({tri.disk_d[0]:.6f}, {tri.disk_d[1]:.6f})")
print(f"\nfidelity from the triangle: cosh^2(phi_w/2)/(cosh phi_u cosh phi_v) = {fid:.10f}")

# Equal hyperbolic distances from D to both endpoints of BC:
print(f"check |BD| = {bg.disk_distance(tri.disk_b, tri.disk_d):.9f}"
      f" = |DC| = {bg.disk_distance(tri.disk_d, tri.disk_c):.9f}"
      f" = phi_w/2 = {tri.phi_w / 2:.9f}")

edges = {
    "AB": bg.geodesic_points(tri.disk_a, tri.disk_b, 64),
    "AC": bg.geodesic_points(tri.disk_a, tri.disk_c, 64),
    "BC": bg.geodesic_points(tri.disk_b, tri.disk_c, 64),
}

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    print("\nmatplotlib not installed; skipping the plot "
          "(the same data is available as CSV from `buresgeo triangle --format csv`)")
else:
    fig, ax = plt.subplots(figsize=(5, 5))
    theta = np.linspace(0, 2 * np.pi, 256)
    ax.plot(np.cos(theta), np.sin(theta), color="k", linewidth=0.8)
    for name, line in edges.items():
        ax.plot(line[:, 0], line[:, 1], label=name)
    for label, point in (("A", tri.disk_a), ("B", tri.disk_b), ("C", tri.disk_c), ("D", tri.disk_d)):
        ax.plot(*point, marker="o", markersize=3, color="k")
        ax.annotate(label, point, textcoords="offset points", xytext=(5, 5))
    ax.set_aspect("equal")
    ax.set_title("rapidity triangle in the Poincare disk")
    ax.legend(loc="lower right")
    fig.savefig("triangle_disk.png", dpi=150, bbox_inches="tight")
    print("\nwrote triangle_disk.png")
