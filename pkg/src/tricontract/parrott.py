"""Corner-completion machinery: defect operators, Cholesky factors,
minimal-norm solutions, the feasibility disk for the unknown corner, and the
2x2 defect-matrix power.

Block layout for the completion question, with a scalar corner::

        [ A  B ]      A: 1xn row,  B: scalar (unknown corner)
        [ C  D ]      C: nxn,      D: nx1 column

B makes the assembled matrix a contraction exactly when it lies in a closed
disk determined by the minimal-norm solutions Z0 of A = Z defect(C) and Y0
of D = defect(C*) Y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Disk, DomainError, Tolerances, Verdict
from .oracle import hermitian_eigen, operator_norm

__all__ = [
    "ParrottBlocks",
    "defect_operator",
    "cholesky_upper",
    "minimal_row_solution",
    "minimal_column_solution",
    "parrott_corner_disk",
    "parrott_check",
    "matrix_power_2x2",
]

_POINT_MEMBERSHIP_TOL = 1e-10


@dataclass(frozen=True)
class ParrottBlocks:
    """Blocks of the completion problem; B is the (possibly unknown) corner."""

    A: np.ndarray
    B: complex
    C: np.ndarray
    D: np.ndarray

    def __post_init__(self):
        a = np.atleast_2d(np.asarray(self.A, dtype=complex))
        c = np.asarray(self.C, dtype=complex)
        d = np.asarray(self.D, dtype=complex)
        if d.ndim == 1:
            d = d.reshape(-1, 1)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise DomainError(f"C must be square, got shape {c.shape}")
        n = c.shape[0]
        if a.shape != (1, n):
            raise DomainError(f"A must be 1x{n}, got shape {a.shape}")
        if d.shape != (n, 1):
            raise DomainError(f"D must be {n}x1, got shape {d.shape}")
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "B", complex(self.B))
        object.__setattr__(self, "C", c)
        object.__setattr__(self, "D", d)

    def assemble(self) -> np.ndarray:
        top = np.hstack([self.A, [[self.B]]])
        bottom = np.hstack([self.C, self.D])
        return np.vstack([top, bottom])

    @staticmethod
    def from_matrix(m: np.ndarray) -> "ParrottBlocks":
        m = np.asarray(m, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 2:
            raise DomainError(f"expected a square matrix of size >= 2, got {m.shape}")
        return ParrottBlocks(A=m[0:1, :-1], B=m[0, -1], C=m[1:, :-1], D=m[1:, -1:])


def defect_operator(m: np.ndarray, tol: Tolerances = Tolerances()) -> np.ndarray:
    """Positive-semidefinite square root of I - m* m."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2:
        raise DomainError("expected a matrix")
    gram = np.eye(m.shape[1]) - m.conj().T @ m
    dec = hermitian_eigen(gram)
    lam = dec.eigenvalues
    if lam[0] < -tol.psd - 1e-13:
        raise DomainError(f"matrix is not a contraction: min eig of I - m*m is {lam[0]:.3e}")
    root = np.sqrt(np.clip(lam, 0.0, None))
    v = dec.eigenvectors
    return (v * root) @ v.conj().T


def cholesky_upper(h: np.ndarray, tol: Tolerances = Tolerances()) -> np.ndarray:
    """Upper-triangular S with non-negative diagonal and S* S = h.

    Semidefinite input is handled by pivot skipping: a vanishing pivot gives
    a zero diagonal entry and a zero row (uniqueness is lost there).
    Indefinite input raises.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {h.shape}")
    if np.abs(h - h.conj().T).max() > 1e-13 * max(1.0, float(np.abs(h).max())):
        raise DomainError("matrix is not Hermitian within 1e-13")
    n = h.shape[0]
    scale = max(1.0, float(np.abs(h).max()))
    # Build the lower factor of h = L L* column by column, then return S = L*.
    low = np.zeros((n, n), dtype=complex)
    for j in range(n):
        d = h[j, j].real - float(np.sum(np.abs(low[j, :j]) ** 2))
        if d < -tol.psd * scale - 1e-13:
            raise DomainError(f"matrix is indefinite: pivot {j} is {d:.3e}")
        if d <= tol.psd * scale:
            low[j, j] = 0.0  # semidefinite pivot skip
            continue
        piv = math.sqrt(d)
        low[j, j] = piv
        for i in range(j + 1, n):
            low[i, j] = (h[i, j] - np.dot(low[i, :j], low[j, :j].conj())) / piv
    s = low.conj().T
    resid = np.abs(s.conj().T @ s - h).max()
    if resid > 1e-10 * scale:
        raise DomainError(f"factorization residual {resid:.3e}; matrix is not PSD within tolerance")
    return s


def _sqrt_pinv_pieces(g: np.ndarray, tol: Tolerances):
    """Eigen pieces of g: V, sqrt(lam) clipped, and the rank cutoff mask."""
    g = np.asarray(g, dtype=complex)
    if np.abs(g - g.conj().T).max() > 1e-12 * max(1.0, float(np.abs(g).max())):
        raise DomainError("matrix is not Hermitian within 1e-12")
    dec = hermitian_eigen(g)
    lam = dec.eigenvalues
    if lam[0] < -tol.psd - 1e-12:
        raise DomainError(f"matrix is indefinite: min eig {lam[0]:.3e}")
    lam = np.clip(lam, 0.0, None)
    cutoff = max(tol.psd * float(lam[-1]), 0.0)
    keep = lam > cutoff
    root = np.sqrt(lam)
    return dec.eigenvectors, root, keep


def minimal_row_solution(a: np.ndarray, g: np.ndarray, tol: Tolerances = Tolerances()) -> np.ndarray:
    """Least-norm z with z g^{1/2} = a, supported on the range of g.

    The support constraint is exactly the spectral pseudo-inverse: expand a
    in the eigenbasis of g and divide by sqrt(lam) on the retained spectrum.
    Components of a against the discarded (null) eigenvectors mean the
    equation is inconsistent.
    """
    a = np.atleast_2d(np.asarray(a, dtype=complex))
    v, root, keep = _sqrt_pinv_pieces(g, tol)
    coeff = a @ v  # coordinates of a in the eigenbasis
    null_mass = float(np.abs(coeff[:, ~keep]).max()) if (~keep).any() else 0.0
    thr = 10.0 * math.sqrt(max(tol.psd, 1e-300)) * max(1.0, float(np.abs(a).max()))
    if null_mass > thr:
        raise DomainError(
            f"inconsistent system: component {null_mass:.3e} against the null space of g"
        )
    inv = np.where(keep, np.divide(1.0, root, out=np.zeros_like(root), where=keep), 0.0)
    return (coeff * inv) @ v.conj().T


def minimal_column_solution(g: np.ndarray, d: np.ndarray, tol: Tolerances = Tolerances()) -> np.ndarray:
    """Least-norm y with g^{1/2} y = d; mirror of minimal_row_solution."""
    d = np.asarray(d, dtype=complex)
    if d.ndim == 1:
        d = d.reshape(-1, 1)
    return minimal_row_solution(d.conj().T, g, tol).conj().T


def _corner_geometry(blocks: ParrottBlocks, tol: Tolerances):
    """(center, radius, z0, y0) of the feasible-corner disk."""
    a, c, d = blocks.A, blocks.C, blocks.D
    g_right = np.eye(c.shape[1]) - c.conj().T @ c  # defect(C)^2
    g_left = np.eye(c.shape[0]) - c @ c.conj().T  # defect(C*)^2
    z0 = minimal_row_solution(a, g_right, tol)
    y0 = minimal_column_solution(g_left, d, tol)
    dz = math.sqrt(max(0.0, 1.0 - float(np.sum(np.abs(z0) ** 2))))
    dy = math.sqrt(max(0.0, 1.0 - float(np.sum(np.abs(y0) ** 2))))
    center = complex(-(z0 @ c.conj().T @ y0)[0, 0])
    return center, dz * dy, z0, y0


def parrott_corner_disk(blocks: ParrottBlocks, tol: Tolerances = Tolerances()) -> Disk:
    """Disk of corner values B making the assembled matrix a contraction.

    Empty (with a note) when the row block [C D] or column block [A; C] is
    not a contraction, since then no corner works.
    """
    col = np.vstack([blocks.A, blocks.C])
    row = np.hstack([blocks.C, blocks.D])
    for name, blk in (("column block [A; C]", col), ("row block [C D]", row)):
        norm = operator_norm(blk)
        if norm > 1.0 + 1e-9:
            return Disk(empty=True, notes=(f"{name} has operator norm {norm:.12g} > 1",))
    try:
        center, radius, z0, y0 = _corner_geometry(blocks, tol)
    except DomainError as e:
        return Disk(empty=True, notes=(str(e),))
    return Disk(
        center=center,
        radius=radius,
        notes=(
            f"|Z0| = {math.sqrt(float(np.sum(np.abs(z0) ** 2))):.12g}",
            f"|Y0| = {math.sqrt(float(np.sum(np.abs(y0) ** 2))):.12g}",
        ),
    )


def parrott_check(blocks: ParrottBlocks, tol: Tolerances = Tolerances()) -> Verdict:
    """Contraction test for the assembled block matrix via the corner disk."""
    disk = parrott_corner_disk(blocks, tol)
    if disk.empty:
        return Verdict(
            is_contraction=False,
            branch="Parrott",
            residuals={"corner": -math.inf},
            notes=disk.notes,
        )
    dev = abs(blocks.B - disk.center)
    ok = (
        dev <= disk.radius + _POINT_MEMBERSHIP_TOL
        if disk.radius <= _POINT_MEMBERSHIP_TOL
        else disk.contains(blocks.B, tol.residual)
    )
    notes = list(disk.notes) + [f"disk center {disk.center:.12g}, radius {disk.radius:.12g}"]
    if disk.radius > _POINT_MEMBERSHIP_TOL:
        # scalar minimal completion parameter: the corner rescaled by the defects
        notes.append(f"minimal W0 = {(blocks.B - disk.center) / disk.radius:.12g}")
    return Verdict(
        is_contraction=ok,
        branch="Parrott",
        residuals={"corner": disk.radius - dev},
        notes=tuple(notes),
    )


def matrix_power_2x2(omega: complex, alpha: complex, s: float) -> np.ndarray:
    """Power of the 2x2 defect matrix [[1-|w|^2, -conj(w) a], [-conj(a) w, 1-|a|^2]].

    Diagonalization: eigenvalue 1 on the direction (-a, w), eigenvalue
    lam = 1 - |a|^2 - |w|^2 on (conj(w), conj(a)); the power follows by
    functional calculus on the spectrum.
    """
    w = complex(omega)
    a = complex(alpha)
    sig = abs(a) ** 2 + abs(w) ** 2
    if sig <= 0.0:
        raise DomainError("omega and alpha cannot both vanish")
    lam = 1.0 - sig
    if lam < 0.0 and s != int(s):
        raise DomainError(f"negative eigenvalue {lam:.3e} with fractional exponent {s}")
    if lam == 0.0 and s <= 0.0:
        raise DomainError("zero eigenvalue with non-positive exponent")
    lam_s = lam ** s
    awc = a * w.conjugate()
    return (1.0 / sig) * np.array(
        [
            [abs(a) ** 2 + abs(w) ** 2 * lam_s, -awc * (1.0 - lam_s)],
            [-awc.conjugate() * (1.0 - lam_s), abs(w) ** 2 + abs(a) ** 2 * lam_s],
        ],
        dtype=complex,
    )
