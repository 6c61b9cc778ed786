"""Independent ground truth: Hermitian eigensolver, operator norm, PSD test.

The eigensolver is a cyclic complex Jacobi iteration written from scratch so
that the closed-form criteria are never checked against themselves.  At the
3x3/4x4 sizes used here Jacobi is unconditionally stable and also supplies
the eigenvectors needed by the completion machinery's pseudo-inverses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DomainError, Tolerances, Verdict

__all__ = ["EigenDecomposition", "hermitian_eigen", "operator_norm", "is_contraction_oracle"]

_MAX_SWEEPS = 100
_OFF_TOL = 1e-14


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral decomposition of a Hermitian matrix.

    eigenvalues are ascending; eigenvectors are the matching orthonormal
    columns, so  V @ diag(lam) @ V.conj().T  reconstructs the input.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def hermitian_eigen(h: np.ndarray) -> EigenDecomposition:
    """Full spectral decomposition by cyclic complex Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    1e-14 x ||h||_F; a (never observed at these sizes) failure to converge
    within 100 sweeps raises instead of returning a wrong answer.
    """
    ah = np.asarray(h, dtype=complex)
    if ah.ndim != 2 or ah.shape[0] != ah.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {ah.shape}")
    n = ah.shape[0]
    ah = 0.5 * (ah + ah.conj().T)  # symmetrize away representation noise
    if n == 1:
        return EigenDecomposition(ah.real.reshape(1).copy(), np.eye(1, dtype=complex))

    # Scalar arithmetic on nested lists: at 3x3/4x4 this beats elementwise
    # numpy calls by a wide margin, and the per-sample oracle is the hot path.
    a = [[complex(ah[i, j]) for j in range(n)] for i in range(n)]
    v = [[1.0 + 0.0j if i == j else 0.0j for j in range(n)] for i in range(n)]
    fro = math.sqrt(sum(abs(x) ** 2 for row in a for x in row))
    if fro == 0.0:
        return EigenDecomposition(np.zeros(n), np.eye(n, dtype=complex))
    stop = _OFF_TOL * fro

    for _ in range(_MAX_SWEEPS):
        off = math.sqrt(2.0 * sum(abs(a[i][j]) ** 2 for i in range(n - 1) for j in range(i + 1, n)))
        if off <= stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                r = abs(apq)
                if r <= 1e-300:
                    continue
                phase = apq / r  # apq = r * phase; diag(1, conj(phase)) makes the block real
                theta = (a[q][q].real - a[p][p].real) / (2.0 * r)
                # smaller-magnitude root of t^2 - 2*theta*t - 1 = 0
                if theta >= 0.0:
                    t = -1.0 / (theta + math.hypot(theta, 1.0))
                else:
                    t = 1.0 / (-theta + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                pc = phase.conjugate()
                cps = pc * s
                cpc = pc * c
                phs = phase * s
                phc = phase * c
                # a <- J* a J with J = identity except the (p,q) block
                # [[c, -s], [pc*s, pc*c]]
                for i in range(n):
                    ai = a[i]
                    x = ai[p]
                    y = ai[q]
                    ai[p] = c * x + cps * y
                    ai[q] = -s * x + cpc * y
                ap = a[p]
                aq = a[q]
                for j in range(n):
                    x = ap[j]
                    y = aq[j]
                    ap[j] = c * x + phs * y
                    aq[j] = -s * x + phc * y
                ap[q] = 0.0j
                aq[p] = 0.0j
                ap[p] = complex(ap[p].real, 0.0)
                aq[q] = complex(aq[q].real, 0.0)
                for i in range(n):
                    vi = v[i]
                    x = vi[p]
                    y = vi[q]
                    vi[p] = c * x + cps * y
                    vi[q] = -s * x + cpc * y
    else:
        raise DomainError("Jacobi iteration did not converge within 100 sweeps")

    lam = np.array([a[i][i].real for i in range(n)])
    vec = np.array(v, dtype=complex)
    order = np.argsort(lam, kind="stable")
    return EigenDecomposition(lam[order], vec[:, order])


def operator_norm(m: np.ndarray) -> float:
    """Largest singular value: sqrt of the top eigenvalue of m* m."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise DomainError(f"expected a matrix, got ndim {m.ndim}")
    gram = m.conj().T @ m
    lam = hermitian_eigen(gram).eigenvalues
    return math.sqrt(max(0.0, float(lam[-1])))


def is_contraction_oracle(m: np.ndarray, tol: Tolerances = Tolerances()) -> Verdict:
    """Contraction test via positive semidefiniteness of I - m* m."""
    m = np.asarray(m, dtype=complex)
    gram = m.conj().T @ m
    dec = hermitian_eigen(np.eye(gram.shape[0]) - gram)
    smallest = float(dec.eigenvalues[0])
    # operator norm from the same decomposition: ||m||^2 = 1 - min eig(I - m*m)
    norm = math.sqrt(max(0.0, 1.0 - smallest))
    ok = smallest >= -tol.psd
    return Verdict(
        is_contraction=ok,
        branch="Oracle",
        residuals={"min_eig_defect": smallest, "one_minus_norm": 1.0 - norm},
        notes=(f"operator norm {norm:.17g}",),
    )
