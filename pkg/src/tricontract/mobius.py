"""Scalar and operator Mobius transforms and divided-difference calculus.

The triangular closed form is the primary path: the divided differences of
the disk automorphism z -> (w - z)/(1 - conj(w) z) have rational closed
forms that stay valid when evaluation points coincide, which is exactly the
situation for repeated diagonal entries.  The dense rational-calculus path
(w I - T)(I - conj(w) T)^{-1} exists for cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DomainError, TriMatrix4, one_minus_sq

__all__ = [
    "mobius_scalar",
    "DividedDifferenceTable",
    "divided_differences",
    "mobius_divided_closed_form",
    "mobius_transform_triangular",
    "mobius_transform_dense",
]

_POLE_GUARD = 1e-300
_COND_GUARD = 1e12


def _check_disk(omega: complex) -> complex:
    omega = complex(omega)
    if abs(omega) >= 1.0:
        raise DomainError(f"Mobius parameter must lie in the open unit disk, |omega| = {abs(omega)}")
    return omega


def mobius_scalar(omega: complex, z: complex) -> complex:
    """(omega - z) / (1 - conj(omega) z)."""
    omega = _check_disk(omega)
    z = complex(z)
    den = 1.0 - omega.conjugate() * z
    if abs(den) <= _POLE_GUARD:
        raise DomainError("evaluation point is at the Mobius pole 1/conj(omega)")
    return (omega - z) / den


@dataclass(frozen=True)
class DividedDifferenceTable:
    """Triangular table of divided differences.

    ``table[j][k]`` is the order-j difference over points k..k+j; row 0 is
    the input values.
    """

    points: tuple[complex, ...]
    table: tuple[tuple[complex, ...], ...]

    def order(self, j: int, k: int = 0) -> complex:
        return self.table[j][k]

    def top(self) -> complex:
        """Highest-order difference, over all points."""
        return self.table[-1][0]


def divided_differences(points, values) -> DividedDifferenceTable:
    """Standard recurrence for pairwise-distinct points.

    Coincident points (closer than 1e-12) are rejected; the confluent case
    is covered only by the Mobius closed forms.
    """
    pts = tuple(complex(z) for z in points)
    vals = tuple(complex(v) for v in values)
    if len(pts) != len(vals) or not pts:
        raise DomainError("points and values must be non-empty and of equal length")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if abs(pts[i] - pts[j]) <= 1e-12:
                raise DomainError(f"points {i} and {j} coincide within 1e-12")
    rows = [vals]
    for j in range(1, len(pts)):
        prev = rows[-1]
        rows.append(
            tuple(
                (prev[k + 1] - prev[k]) / (pts[k + j] - pts[k])
                for k in range(len(pts) - j)
            )
        )
    return DividedDifferenceTable(points=pts, table=tuple(rows))


def mobius_divided_closed_form(omega3: complex, points) -> complex:
    """Closed-form divided difference of M_{omega3} at 2, 3, or 4 points.

    Valid for repeated points (confluent extension):

        order 1:  (|w|^2 - 1) / prod(1 - conj(w) z_i)
        order 2:  conj(w) (|w|^2 - 1) / prod(...)
        order 3:  conj(w)^2 (|w|^2 - 1) / prod(...)
    """
    w = _check_disk(omega3)
    pts = tuple(complex(z) for z in points)
    if len(pts) not in (2, 3, 4):
        raise DomainError(f"closed form needs 2, 3 or 4 points, got {len(pts)}")
    den = 1.0 + 0.0j
    for z in pts:
        d = 1.0 - w.conjugate() * z
        if abs(d) <= _POLE_GUARD:
            raise DomainError("evaluation point is at the Mobius pole 1/conj(omega)")
        den *= d
    return w.conjugate() ** (len(pts) - 2) * (-one_minus_sq(w)) / den


def mobius_transform_triangular(omega3: complex, t: TriMatrix4) -> TriMatrix4:
    """Triangular record of the Mobius image of the triangular matrix.

    Diagonal entries map through the scalar transform; the strict upper
    entries are built from the closed-form divided differences at the
    diagonal entries, following the upper-triangular functional calculus.
    """
    w = _check_disk(omega3)
    wc = w.conjugate()
    d = []
    for wi in t.omega:
        den = 1.0 - wc * complex(wi)
        if abs(den) <= 1e-12:
            raise DomainError("diagonal entry too close to the Mobius pole 1/conj(omega)")
        d.append(den)
    neg = -one_minus_sq(w)  # |w|^2 - 1

    def dd2(i: int, j: int) -> complex:
        return neg / (d[i] * d[j])

    def dd3(i: int, j: int, k: int) -> complex:
        return wc * neg / (d[i] * d[j] * d[k])

    def dd4(i: int, j: int, k: int, l: int) -> complex:
        return wc * wc * neg / (d[i] * d[j] * d[k] * d[l])

    a1, a2, a3 = t.alpha
    b1, b2 = t.beta
    g = t.gamma
    omega_out = tuple((w - complex(wi)) / d[i] for i, wi in enumerate(t.omega))
    alpha_out = (a1 * dd2(0, 1), a2 * dd2(1, 2), a3 * dd2(2, 3))
    beta_out = (
        a1 * a2 * dd3(0, 1, 2) + b1 * dd2(0, 2),
        a2 * a3 * dd3(1, 2, 3) + b2 * dd2(1, 3),
    )
    gamma_out = (
        a1 * a2 * a3 * dd4(0, 1, 2, 3)
        + a1 * b2 * dd3(0, 1, 3)
        + a3 * b1 * dd3(0, 2, 3)
        + g * dd2(0, 3)
    )
    return TriMatrix4(omega=omega_out, alpha=alpha_out, beta=beta_out, gamma=gamma_out)


def mobius_transform_dense(omega: complex, m: np.ndarray) -> np.ndarray:
    """(omega I - m)(I - conj(omega) m)^{-1} by direct linear solves."""
    w = _check_disk(omega)
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {m.shape}")
    n = m.shape[0]
    den = np.eye(n) - w.conjugate() * m
    if np.linalg.cond(den) >= _COND_GUARD:
        raise DomainError("I - conj(omega) m is numerically singular; m is outside the transform domain")
    num = w * np.eye(n) - m
    # X (I - conj(w) m) = (w I - m)  =>  solve the transposed system
    return np.linalg.solve(den.T, num.T).T
