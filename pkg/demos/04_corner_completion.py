"""Corner completion for block matrices.

With blocks [[A, B], [C, D]] and only B unknown, the feasible B values form
a disk built from the minimal-norm solutions of A = Z defect(C) and
D = defect(C*) Y.  The demo assembles the pieces by hand and cross-checks
the resulting disk against brute-force norms.
"""

import numpy as np

from tricontract import (
    ParrottBlocks,
    cholesky_upper,
    defect_operator,
    matrix_power_2x2,
    minimal_row_solution,
    operator_norm,
    parrott_check,
    parrott_corner_disk,
)

A = np.array([[0.5, 0.0, 0.0]])
C = np.zeros((3, 3))
D = np.array([[0.0], [0.0], [0.5]])
blocks = ParrottBlocks(A=A, B=0.0, C=C, D=D)

disk = parrott_corner_disk(blocks)
print(f"feasible corner disk: center {disk.center}, radius {disk.radius}")

for b in (0.74, 0.76):
    m = ParrottBlocks(A=A, B=b, C=C, D=D).assemble()
    v = parrott_check(ParrottBlocks(A=A, B=b, C=C, D=D))
    print(f"B={b}: check={v.is_contraction}, norm={operator_norm(m):.6f}")

# the building blocks individually
m = np.array([[0.6, 0.48], [0.0, 0.0]], dtype=complex)
d = defect_operator(m)
print(f"\ndefect of [[0.6, 0.48], [0, 0]]:\n{np.round(d.real, 6)}")

gram = np.eye(2) - m.conj().T @ m
s = cholesky_upper(gram)
print(f"upper Cholesky factor of I - m*m:\n{np.round(s.real, 6)}")

g = np.diag([0.25, 1.0]).astype(complex)
z = minimal_row_solution(np.array([[0.1, 0.2]]), g)
print(f"least-norm z with z g^(1/2) = a: {np.round(z.real, 6)}")

# fractional powers of the 2x2 defect matrix via its diagonalization
half = matrix_power_2x2(0.5, 0.3, 0.5)
full = matrix_power_2x2(0.5, 0.3, 1.0)
print(f"\n(M^(1/2))^2 - M max gap: {np.abs(half @ half - full).max():.3e}")
