"""Mobius transforms of scalars and of triangular matrices.

The disk automorphism z -> (w - z)/(1 - conj(w) z) lifts to matrices as
(w I - T)(I - conj(w) T)^{-1}.  For triangular T the image is triangular and
its entries come from closed-form divided differences, no inversion needed.
"""

import numpy as np

from tricontract import (
    TriMatrix4,
    divided_differences,
    mobius_divided_closed_form,
    mobius_scalar,
    mobius_transform_dense,
    mobius_transform_triangular,
    operator_norm,
    to_dense,
)

w = 0.4 + 0.3j

# the scalar map is an involution and preserves the unit circle
z = 0.2 - 0.5j
print(f"M_w(z)       = {mobius_scalar(w, z):.6f}")
print(f"M_w(M_w(z))  = {mobius_scalar(w, mobius_scalar(w, z)):.6f}  (back to z)")
print(f"|M_w(e^i)|   = {abs(mobius_scalar(w, np.exp(1j))):.12f}")

# divided differences of the map have closed forms that survive coincident
# points, which is what repeated diagonal entries require
pts = [0.1, 0.3, 0.5]
table = divided_differences(pts, [mobius_scalar(w, p) for p in pts])
print(f"\nrecurrence 2nd difference: {table.top():.10f}")
print(f"closed-form               : {mobius_divided_closed_form(w, pts):.10f}")
print(f"confluent [0.2,0.2]       : {mobius_divided_closed_form(w, [0.2, 0.2]):.10f}")

# triangular path vs dense rational calculus on a full 4x4 record
t = TriMatrix4(
    omega=(0.1, 0.2j, -0.3, 0.25),
    alpha=(0.2, 0.15, 0.1j),
    beta=(0.05, -0.08),
    gamma=0.12,
)
tri = mobius_transform_triangular(w, t)
dense = mobius_transform_dense(w, to_dense(t))
gap = np.abs(to_dense(tri) - dense).max()
print(f"\ntriangular vs dense path: max entry gap {gap:.3e}")
print(f"norm before {operator_norm(to_dense(t)):.6f}, after {operator_norm(dense):.6f}")
