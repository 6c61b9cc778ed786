"""Domain types and scalar helpers shared by all modules.

Complex scalars are plain Python ``complex`` (a pair of 64-bit floats);
dense matrices are ``numpy.ndarray`` with dtype complex128.  NaN/Inf are
rejected at API boundaries instead of being propagated, since a silent NaN
comparison would corrupt branch dispatch downstream.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ParseError",
    "RangeError",
    "DomainError",
    "TriMatrix3",
    "TriMatrix4",
    "Tolerances",
    "Verdict",
    "Disk",
    "defect_product",
    "to_dense",
    "parse_matrix",
    "serialize_matrix",
    "one_minus_sq",
]


class ParseError(ValueError):
    """Malformed input document (wrong keys, wrong lengths, wrong types)."""


class RangeError(ValueError):
    """Numerically out-of-range input (NaN, Inf)."""


class DomainError(ValueError):
    """Input outside an operation's mathematical domain."""


def _as_complex(x) -> complex:
    z = complex(x)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise RangeError(f"non-finite complex value {z!r}")
    return z


def one_minus_sq(w: complex) -> float:
    """1 - |w|^2, the scalar defect of w."""
    w = complex(w)
    return 1.0 - (w.real * w.real + w.imag * w.imag)


def defect_product(u: complex, v: complex) -> float:
    """(1 - |u|^2)(1 - |v|^2).

    Satisfies the key identity |1 - conj(u) v|^2 - |u - v|^2 == result,
    which is what lets squared-modulus conditions on Mobius images be
    rewritten in terms of the original entries.
    """
    u = _as_complex(u)
    v = _as_complex(v)
    return one_minus_sq(u) * one_minus_sq(v)


@dataclass(frozen=True)
class TriMatrix3:
    """Entries of a 3x3 upper-triangular matrix.

    Layout::

        [ omega1  alpha1  beta  ]
        [   0     omega2  alpha2]
        [   0       0     omega3]
    """

    omega: tuple[complex, complex, complex]
    alpha: tuple[complex, complex]
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(_as_complex(w) for w in self.omega))
        object.__setattr__(self, "alpha", tuple(_as_complex(a) for a in self.alpha))
        object.__setattr__(self, "beta", _as_complex(self.beta))
        if len(self.omega) != 3:
            raise ParseError(f"omega must have 3 entries, got {len(self.omega)}")
        if len(self.alpha) != 2:
            raise ParseError(f"alpha must have 2 entries, got {len(self.alpha)}")

    @property
    def size(self) -> int:
        return 3


@dataclass(frozen=True)
class TriMatrix4:
    """Entries of a 4x4 upper-triangular matrix.

    Layout::

        [ omega1  alpha1  beta1   gamma ]
        [   0     omega2  alpha2  beta2 ]
        [   0       0     omega3  alpha3]
        [   0       0       0     omega4]
    """

    omega: tuple[complex, complex, complex, complex]
    alpha: tuple[complex, complex, complex]
    beta: tuple[complex, complex]
    gamma: complex

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(_as_complex(w) for w in self.omega))
        object.__setattr__(self, "alpha", tuple(_as_complex(a) for a in self.alpha))
        object.__setattr__(self, "beta", tuple(_as_complex(b) for b in self.beta))
        object.__setattr__(self, "gamma", _as_complex(self.gamma))
        if len(self.omega) != 4:
            raise ParseError(f"omega must have 4 entries, got {len(self.omega)}")
        if len(self.alpha) != 3:
            raise ParseError(f"alpha must have 3 entries, got {len(self.alpha)}")
        if len(self.beta) != 2:
            raise ParseError(f"beta must have 2 entries, got {len(self.beta)}")

    @property
    def size(self) -> int:
        return 4

    def with_gamma(self, gamma: complex) -> "TriMatrix4":
        return TriMatrix4(self.omega, self.alpha, self.beta, gamma)

    def scaled(self, s: float) -> "TriMatrix4":
        return TriMatrix4(
            tuple(s * w for w in self.omega),
            tuple(s * a for a in self.alpha),
            tuple(s * b for b in self.beta),
            s * self.gamma,
        )


@dataclass(frozen=True)
class Tolerances:
    """Numeric slack knobs.

    boundary: band for classifying equalities such as |omega2| = 1 or
        |alpha2|^2 = (1-|omega2|^2)(1-|omega3|^2).
    psd: eigenvalue floor for positive-semidefinite tests.
    residual: slack for the criterion inequalities.

    The criteria themselves are exact algebra; these exist only to absorb
    floating-point evaluation error.
    """

    boundary: float = 1e-9
    psd: float = 1e-12
    residual: float = 1e-10

    def __post_init__(self):
        for name in ("boundary", "psd", "residual"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1e-3):
                raise RangeError(f"tolerance {name}={v} outside [0, 1e-3]")


# Branch identifiers carried by Verdict.
BRANCH_MAIN = "Main"
BRANCH_BOUNDARY_ALPHA2 = "BoundaryAlpha2"
BRANCH_OMEGA2_UNIMODULAR = "Omega2Unimodular"
BRANCH_OMEGA3_UNIMODULAR = "Omega3Unimodular"
BRANCH_BOTH_UNIMODULAR = "BothUnimodular"
BRANCH_PRECONDITION_FAILED = "PreconditionFailed"


@dataclass(frozen=True)
class Verdict:
    """Contraction decision with the dispatched branch and per-condition margins.

    Residuals use the convention RHS - LHS, so positive means satisfied.
    For forced-equality conditions (entries that must vanish or match a
    closed form) the residual is minus the deviation magnitude.
    """

    is_contraction: bool
    branch: str
    residuals: dict[str, float] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    def worst(self) -> float:
        return min(self.residuals.values()) if self.residuals else math.inf


@dataclass(frozen=True)
class Disk:
    """Closed disk in the complex plane, possibly degenerate."""

    center: complex = 0.0 + 0.0j
    radius: float = 0.0
    empty: bool = False
    whole_plane: bool = False
    notes: tuple[str, ...] = ()

    def __post_init__(self):
        if self.empty and self.whole_plane:
            raise DomainError("disk cannot be both empty and the whole plane")
        if not (self.empty or self.whole_plane):
            if not math.isfinite(self.radius) or self.radius < 0.0:
                raise RangeError(f"disk radius {self.radius} must be finite and >= 0")

    def contains(self, z: complex, tol: float = 1e-10) -> bool:
        if self.empty:
            return False
        if self.whole_plane:
            return True
        return abs(z - self.center) <= self.radius + tol

    def boundary_point(self, theta: float) -> complex:
        if self.empty or self.whole_plane:
            raise DomainError("degenerate disk has no boundary circle")
        return self.center + self.radius * cmath.exp(1j * theta)


def to_dense(t: TriMatrix3 | TriMatrix4) -> np.ndarray:
    """Dense complex matrix with the triangular entry layout; strict zeros below."""
    if isinstance(t, TriMatrix3):
        w, a = t.omega, t.alpha
        return np.array(
            [
                [w[0], a[0], t.beta],
                [0.0, w[1], a[1]],
                [0.0, 0.0, w[2]],
            ],
            dtype=complex,
        )
    if isinstance(t, TriMatrix4):
        w, a, b = t.omega, t.alpha, t.beta
        return np.array(
            [
                [w[0], a[0], b[0], t.gamma],
                [0.0, w[1], a[1], b[1]],
                [0.0, 0.0, w[2], a[2]],
                [0.0, 0.0, 0.0, w[3]],
            ],
            dtype=complex,
        )
    raise ParseError(f"expected TriMatrix3 or TriMatrix4, got {type(t).__name__}")


def _pair_to_complex(obj, name: str) -> complex:
    if (
        not isinstance(obj, (list, tuple))
        or len(obj) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in obj)
    ):
        raise ParseError(f"field {name!r} must be a two-element [re, im] array of numbers")
    re, im = float(obj[0]), float(obj[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise RangeError(f"field {name!r} contains a non-finite number")
    return complex(re, im)


def _pair_list(obj, name: str, count: int) -> tuple[complex, ...]:
    if not isinstance(obj, list) or len(obj) != count:
        raise ParseError(f"field {name!r} must be an array of {count} [re, im] pairs")
    return tuple(_pair_to_complex(p, f"{name}[{i}]") for i, p in enumerate(obj))


def parse_matrix(text: str, require_corner: bool = True) -> TriMatrix3 | TriMatrix4:
    """Parse the JSON triangular-matrix schema.

    A 4x4 record has keys omega(4)/alpha(3)/beta(2)/gamma, a 3x3 record
    omega(3)/alpha(2)/beta(pair).  With ``require_corner=False`` the corner
    entry (gamma for 4x4, beta for 3x3) may be omitted and defaults to 0,
    which is how disk queries describe their unknown.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    if "omega" not in doc:
        raise ParseError("missing field 'omega'")
    omega = doc["omega"]
    if not isinstance(omega, list) or len(omega) not in (3, 4):
        n = len(omega) if isinstance(omega, list) else "non-array"
        raise ParseError(f"field 'omega' must have 3 or 4 entries, got {n}")

    size = len(omega)
    allowed = {"omega", "alpha", "beta"} | ({"gamma"} if size == 4 else set())
    extra = set(doc) - allowed
    if extra:
        raise ParseError(f"unexpected field {sorted(extra)[0]!r}")

    if "alpha" not in doc:
        raise ParseError("missing field 'alpha'")
    if size == 4:
        if "beta" not in doc:
            raise ParseError("missing field 'beta'")
        if "gamma" not in doc and require_corner:
            raise ParseError("missing field 'gamma'")
        return TriMatrix4(
            omega=_pair_list(omega, "omega", 4),
            alpha=_pair_list(doc["alpha"], "alpha", 3),
            beta=_pair_list(doc["beta"], "beta", 2),
            gamma=_pair_to_complex(doc["gamma"], "gamma") if "gamma" in doc else 0.0,
        )
    if "beta" not in doc and require_corner:
        raise ParseError("missing field 'beta'")
    beta = _pair_to_complex(doc["beta"], "beta") if "beta" in doc else 0.0
    return TriMatrix3(
        omega=_pair_list(omega, "omega", 3),
        alpha=_pair_list(doc["alpha"], "alpha", 2),
        beta=beta,
    )


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def serialize_matrix(t: TriMatrix3 | TriMatrix4) -> str:
    """Canonical JSON document for a triangular record; inverse of parse_matrix."""
    if isinstance(t, TriMatrix4):
        doc = {
            "omega": [_pair(w) for w in t.omega],
            "alpha": [_pair(a) for a in t.alpha],
            "beta": [_pair(b) for b in t.beta],
            "gamma": _pair(t.gamma),
        }
    elif isinstance(t, TriMatrix3):
        doc = {
            "omega": [_pair(w) for w in t.omega],
            "alpha": [_pair(a) for a in t.alpha],
            "beta": _pair(t.beta),
        }
    else:
        raise ParseError(f"expected TriMatrix3 or TriMatrix4, got {type(t).__name__}")
    return json.dumps(doc, sort_keys=True)
