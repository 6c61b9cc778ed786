"""Feasibility disks for the missing corner entry.

Given every entry of a triangular record except the far corner, the set of
corner values keeping the matrix a contraction is a closed disk.  The demo
computes it in closed form and confirms the geometry with the oracle norm.
"""

import numpy as np

from tricontract import TriMatrix3, TriMatrix4, beta_disk_3x3, gamma_disk, operator_norm, to_dense

t = TriMatrix4(omega=(0.5, 0, 0, 0.5), alpha=(0, 0, 0), beta=(0, 0), gamma=0)
disk = gamma_disk(t)
print(f"gamma disk: center {disk.center}, radius {disk.radius}")

# every boundary point of the disk yields operator norm exactly 1
for theta in np.linspace(0, 2 * np.pi, 8, endpoint=False):
    g = disk.boundary_point(theta)
    norm = operator_norm(to_dense(t.with_gamma(g)))
    print(f"  gamma={g:+.4f}  norm={norm:.12f}")

# interior points are strict contractions, exterior points are not
for frac in (0.5, 0.999, 1.001):
    g = disk.center + frac * disk.radius
    norm = operator_norm(to_dense(t.with_gamma(g)))
    print(f"at {frac:5.3f} x radius: norm = {norm:.6f}")

# same story one size down: the 3x3 corner disk
t3 = TriMatrix3(omega=(0, 0, 0), alpha=(0.8, 0.8), beta=0)
d3 = beta_disk_3x3(t3)
print(f"\n3x3 beta disk: center {d3.center}, radius {d3.radius}")

# with an off-scale superdiagonal entry there is no feasible corner at all
bad = gamma_disk(TriMatrix4(omega=(0, 0, 0, 0), alpha=(1.1, 0, 0), beta=(0, 0), gamma=0))
print(f"alpha1 = 1.1: disk empty = {bad.empty}, reason: {bad.notes[0]}")
