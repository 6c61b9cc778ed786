"""Deciding contractivity of triangular matrices with closed-form criteria.

Walks through the 3x3 and 4x4 checks, shows the branch taken and the
residuals behind each verdict, and compares against the eigenvalue oracle.
"""

import numpy as np

from tricontract import (
    TriMatrix3,
    TriMatrix4,
    check_contraction_3x3,
    check_contraction_4x4,
    is_contraction_oracle,
    operator_norm,
    to_dense,
)

# A 3x3 record sitting exactly on the contraction boundary: with both
# superdiagonal entries at 0.8, the corner entry may reach 0.36 but not more.
for beta in (0.36, 0.37):
    t = TriMatrix3(omega=(0, 0, 0), alpha=(0.8, 0.8), beta=beta)
    v = check_contraction_3x3(t)
    norm = operator_norm(to_dense(t))
    print(f"3x3, beta={beta}: contraction={v.is_contraction}, norm={norm:.6f}")

# The 4x4 check routes through one of five branches depending on the
# diagonal.  A plain interior diagonal uses the main inequalities.
t = TriMatrix4(omega=(0.5, 0, 0, 0.5), alpha=(0, 0, 0), beta=(0, 0), gamma=0.7)
v = check_contraction_4x4(t)
print(f"\n4x4 interior diagonal: branch={v.branch}, contraction={v.is_contraction}")
for name, r in v.residuals.items():
    print(f"  residual {name}: {r:+.6f}")

# A unimodular diagonal entry collapses its row and column: any mass there
# pushes the norm past 1, which the branch detects without eigenvalues.
t = TriMatrix4(omega=(0, 1, 0, 0), alpha=(0, 0, 0), beta=(0, 0.5), gamma=0)
v = check_contraction_4x4(t)
oracle = is_contraction_oracle(to_dense(t))
print(f"\nunimodular omega2 with beta2=0.5: branch={v.branch}")
print(f"criterion says {v.is_contraction}, oracle says {oracle.is_contraction}")
print(f"actual norm: {operator_norm(to_dense(t)):.6f} (sqrt(1.25) = {np.sqrt(1.25):.6f})")
