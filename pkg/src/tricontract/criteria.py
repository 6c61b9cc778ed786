"""Closed-form contraction criteria for triangular 3x3 and 4x4 matrices.

Each check dispatches on which diagonal entries sit on the unit circle and on
whether |alpha2|^2 attains the product (1-|omega2|^2)(1-|omega3|^2), then
evaluates the explicit inequalities of the active branch.  Residuals are
reported as RHS - LHS so positive means satisfied; forced-equality
conditions report minus the deviation magnitude and are judged against the
boundary tolerance.

Two places deliberately deviate from a naive transliteration of the source
algebra; both were adjudicated by fuzzing against the eigenvalue oracle:

* In the boundary-alpha2 branch the forced betas use the *conjugated*
  omega, i.e. beta_i (1-|omega_{i+1}|^2) + alpha_i alpha_{i+1}
  conj(omega_{i+1}) = 0, which is the boundary limit of the second-order
  inequality of the main branch.
* When |omega2| = 1 (resp. |omega3| = 1) the row (resp. column) through
  that entry must vanish off the diagonal, so beta2 = 0 (resp. beta1 = 0)
  is required and the check reduces to the 3x3 criterion on the matrix
  with that row and column deleted.  A relaxed bound on that beta admits
  matrices of norm > 1 (witness: omega2 = 1, beta2 = 0.5, rest 0).
"""

from __future__ import annotations

import math

from .core import (
    BRANCH_BOTH_UNIMODULAR,
    BRANCH_BOUNDARY_ALPHA2,
    BRANCH_MAIN,
    BRANCH_OMEGA2_UNIMODULAR,
    BRANCH_OMEGA3_UNIMODULAR,
    BRANCH_PRECONDITION_FAILED,
    Disk,
    DomainError,
    Tolerances,
    TriMatrix3,
    TriMatrix4,
    Verdict,
    one_minus_sq,
)

__all__ = [
    "check_contraction_2x2",
    "check_contraction_3x3",
    "check_contraction_4x4",
    "check_4x4_omega3_zero",
    "gamma_disk",
    "beta_disk_3x3",
]


def _abs2(z: complex) -> float:
    z = complex(z)
    return z.real * z.real + z.imag * z.imag


def _is_unimodular(w: complex, tol: Tolerances) -> bool:
    return abs(abs(w) - 1.0) <= tol.boundary


def _omega_precondition(omega, tol: Tolerances) -> Verdict | None:
    bad = [i for i, w in enumerate(omega, start=1) if abs(w) > 1.0 + tol.boundary]
    if bad:
        return Verdict(
            is_contraction=False,
            branch=BRANCH_PRECONDITION_FAILED,
            residuals={f"omega{i}_modulus": 1.0 - abs(omega[i - 1]) for i in bad},
            notes=tuple(f"|omega{i}| = {abs(omega[i - 1]):.17g} > 1" for i in bad),
        )
    return None


def _verdict(branch: str, residuals: dict[str, float], eq: set[str], tol: Tolerances, notes=()) -> Verdict:
    ok = True
    for label, res in residuals.items():
        slack = tol.boundary if label in eq else tol.residual
        if res < -slack:
            ok = False
    return Verdict(is_contraction=ok, branch=branch, residuals=residuals, notes=tuple(notes))


def check_contraction_2x2(a: complex, b: complex, c: complex, d: complex, tol: Tolerances = Tolerances()) -> Verdict:
    """Closed-form contraction test for [[a, b], [c, d]].

    The two singular values are the roots of the Gram characteristic
    polynomial; the larger one is compared against 1.
    """
    for z in (a, b, c, d):
        z = complex(z)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError("non-finite entry")
    # Gram matrix [[p, r], [conj(r), q]]
    p = _abs2(a) + _abs2(c)
    q = _abs2(b) + _abs2(d)
    r = complex(a).conjugate() * complex(b) + complex(c).conjugate() * complex(d)
    half_trace = 0.5 * (p + q)
    disc = math.sqrt(max(0.0, 0.25 * (p - q) ** 2 + _abs2(r)))
    norm = math.sqrt(max(0.0, half_trace + disc))
    return Verdict(
        is_contraction=norm <= 1.0 + tol.residual,
        branch=BRANCH_MAIN,
        residuals={"norm": 1.0 - norm},
        notes=(f"operator norm {norm:.17g}",),
    )


def check_contraction_3x3(t: TriMatrix3, tol: Tolerances = Tolerances()) -> Verdict:
    """Explicit criterion for the triangular 3x3 record."""
    w1, w2, w3 = t.omega
    a1, a2 = t.alpha
    b = t.beta
    pre = _omega_precondition(t.omega, tol)
    if pre is not None:
        return pre
    d1, d2, d3 = one_minus_sq(w1), one_minus_sq(w2), one_minus_sq(w3)

    if _is_unimodular(w2, tol):
        residuals = {
            "alpha1_zero": -abs(a1),
            "alpha2_zero": -abs(a2),
            "beta": d1 * d3 - _abs2(b),
        }
        return _verdict(BRANCH_OMEGA2_UNIMODULAR, residuals, {"alpha1_zero", "alpha2_zero"}, tol)

    q1 = d1 * d2 - _abs2(a1)
    q2 = d2 * d3 - _abs2(a2)
    lhs = _abs2(b * d2 + a1 * a2 * w2.conjugate())
    residuals = {
        "alpha1": q1,
        "alpha2": q2,
        "beta": q1 * q2 - lhs,
    }
    return _verdict(BRANCH_MAIN, residuals, set(), tol)


def _alpha2_boundary_gap(t: TriMatrix4) -> tuple[float, float]:
    """(|alpha2|^2 - product, scale) for classifying the boundary case."""
    w2, w3 = t.omega[1], t.omega[2]
    prod = one_minus_sq(w2) * one_minus_sq(w3)
    a2sq = _abs2(t.alpha[1])
    return a2sq - prod, max(1.0, a2sq, prod)


def _forced_beta_residual(t: TriMatrix4, i: int) -> float:
    """Deviation of beta_i from its boundary-branch closed form.

    Evaluated in product form beta_i (1-|omega_{i+1}|^2) + alpha_i
    alpha_{i+1} conj(omega_{i+1}) so that a near-unimodular omega does not
    force a division by a tiny defect.
    """
    w = t.omega[i]  # omega_{i+1}, 0-based
    d = one_minus_sq(w)
    expr = t.beta[i - 1] * d + t.alpha[i - 1] * t.alpha[i] * w.conjugate()
    return abs(expr)


def _main_branch_quantities(t: TriMatrix4):
    w1, w2, w3, w4 = t.omega
    a1, a2, a3 = t.alpha
    b1, b2 = t.beta
    d1, d2, d3, d4 = (one_minus_sq(w) for w in t.omega)
    p = d2 * d3
    k = p - _abs2(a2)
    q = (d1 * d2 - _abs2(a1)) * k - _abs2(a1 * a2 * w2.conjugate() + b1 * d2)
    r = k * (d3 * d4 - _abs2(a3)) - _abs2(a2 * a3 * w3.conjugate() + b2 * d3)
    ell = a1 * b2 * w2.conjugate() * d3 + a3 * b1 * w3.conjugate() * d2 + b1 * b2 * a2.conjugate() + a1 * a2 * a3 * (w2 * w3).conjugate()
    return p, k, q, r, ell


def check_contraction_4x4(t: TriMatrix4, tol: Tolerances = Tolerances()) -> Verdict:
    """Explicit criterion for the triangular 4x4 record, all five branches."""
    w1, w2, w3, w4 = t.omega
    a1, a2, a3 = t.alpha
    b1, b2 = t.beta
    g = t.gamma
    pre = _omega_precondition(t.omega, tol)
    if pre is not None:
        return pre
    d1, d2, d3, d4 = (one_minus_sq(w) for w in t.omega)
    u2 = _is_unimodular(w2, tol)
    u3 = _is_unimodular(w3, tol)

    if u2 and u3:
        residuals = {
            "alpha1_zero": -abs(a1),
            "alpha2_zero": -abs(a2),
            "alpha3_zero": -abs(a3),
            "beta1": d1 * d3 - _abs2(b1),
            "beta2": d2 * d4 - _abs2(b2),
            "gamma": d1 * d4 - _abs2(g),
        }
        return _verdict(
            BRANCH_BOTH_UNIMODULAR,
            residuals,
            {"alpha1_zero", "alpha2_zero", "alpha3_zero"},
            tol,
        )

    if u2:
        # Row/column 2 must vanish off the diagonal; what is left is the
        # 3x3 criterion on [[w1, b1, g], [0, w3, a3], [0, 0, w4]].
        residuals = {
            "alpha1_zero": -abs(a1),
            "alpha2_zero": -abs(a2),
            "beta2_zero": -abs(b2),
            "alpha3": d3 * d4 - _abs2(a3),
            "beta1": d1 * d3 - _abs2(b1),
            "gamma": (d3 * d4 - _abs2(a3)) * (d1 * d3 - _abs2(b1))
            - _abs2(g * d3 + a3 * b1 * w3.conjugate()),
        }
        return _verdict(
            BRANCH_OMEGA2_UNIMODULAR,
            residuals,
            {"alpha1_zero", "alpha2_zero", "beta2_zero"},
            tol,
        )

    if u3:
        residuals = {
            "alpha2_zero": -abs(a2),
            "alpha3_zero": -abs(a3),
            "beta1_zero": -abs(b1),
            "alpha1": d1 * d2 - _abs2(a1),
            "beta2": d2 * d4 - _abs2(b2),
            "gamma": (d1 * d2 - _abs2(a1)) * (d2 * d4 - _abs2(b2))
            - _abs2(g * d2 + a1 * b2 * w2.conjugate()),
        }
        return _verdict(
            BRANCH_OMEGA3_UNIMODULAR,
            residuals,
            {"alpha2_zero", "alpha3_zero", "beta1_zero"},
            tol,
        )

    gap, scale = _alpha2_boundary_gap(t)
    if abs(gap) <= tol.boundary * scale:
        p = d2 * d3
        center = (w2 * w3).conjugate() * a1 * a2 * a3 / p
        residuals = {
            "alpha1": d1 * d2 - _abs2(a1),
            "alpha3": d3 * d4 - _abs2(a3),
            "beta1_forced": -_forced_beta_residual(t, 1),
            "beta2_forced": -_forced_beta_residual(t, 2),
            "gamma": (d1 * d2 - _abs2(a1)) * (d3 * d4 - _abs2(a3)) - _abs2(g - center) * p,
        }
        return _verdict(
            BRANCH_BOUNDARY_ALPHA2,
            residuals,
            {"beta1_forced", "beta2_forced"},
            tol,
        )

    p, k, q, r, ell = _main_branch_quantities(t)
    residuals = {
        "alpha1": d1 * d2 - _abs2(a1),
        "alpha2_strict": k,
        "alpha3": d3 * d4 - _abs2(a3),
        "beta1": q,
        "beta2": r,
        "gamma": q * r - _abs2(g * k + ell) * p,
    }
    return _verdict(BRANCH_MAIN, residuals, set(), tol)


def check_4x4_omega3_zero(t: TriMatrix4, tol: Tolerances = Tolerances()) -> Verdict:
    """Specialized criterion for omega3 = 0, with its own two alternatives.

    Exists as an independently-coded path so the general 4x4 dispatch can be
    cross-checked against it on the omega3 = 0 slice.
    """
    if t.omega[2] != 0:
        raise DomainError(f"omega3 must be exactly 0, got {t.omega[2]!r}")
    w1, w2, _, w4 = t.omega
    a1, a2, a3 = t.alpha
    b1, b2 = t.beta
    g = t.gamma
    pre = _omega_precondition(t.omega, tol)
    if pre is not None:
        return pre
    if _is_unimodular(w2, tol):
        return Verdict(
            is_contraction=False,
            branch=BRANCH_PRECONDITION_FAILED,
            residuals={"omega2_strict": 1.0 - abs(w2)},
            notes=("omega3-zero criterion requires |omega2| < 1",),
        )
    d1, d2, d4 = one_minus_sq(w1), one_minus_sq(w2), one_minus_sq(w4)
    a2sq = _abs2(a2)
    gap = a2sq - d2
    scale = max(1.0, a2sq, d2)

    if abs(gap) <= tol.boundary * scale:
        residuals = {
            "alpha1": d1 * d2 - _abs2(a1),
            "alpha3": d4 - _abs2(a3),
            "beta1_forced": -abs(b1 * d2 + a1 * a2 * w2.conjugate()),
            "beta2_zero": -abs(b2),
            "gamma": (d1 * d2 - _abs2(a1)) * (d4 - _abs2(a3)) - _abs2(g) * d2,
        }
        return _verdict(
            BRANCH_BOUNDARY_ALPHA2,
            residuals,
            {"beta1_forced", "beta2_zero"},
            tol,
        )

    kk = d2 - a2sq  # 1 - |omega2|^2 - |alpha2|^2
    q15_1 = d1 * d2 - _abs2(a1)
    q15_3 = d4 - _abs2(a3)
    lhs16 = _abs2(b1 * d2 + a1 * a2 * w2.conjugate())
    lhs17 = _abs2(b2)  # second-order condition with omega3 = 0: |b2|^2 <= kk * q15_3... see below
    big_lhs = _abs2(g * kk + b2 * (w2.conjugate() * a1 + a2.conjugate() * b1)) * d2
    big_rhs = (q15_1 * kk - lhs16) * (kk * q15_3 - lhs17)
    residuals = {
        "alpha1": q15_1,
        "alpha3": q15_3,
        "beta1": q15_1 * kk - lhs16,
        "beta2": kk * q15_3 - lhs17,
        "gamma": big_rhs - big_lhs,
    }
    return _verdict(BRANCH_MAIN, residuals, set(), tol)


def _disk_from_condition(center: complex, num: float, den: float, notes=()) -> Disk:
    """Disk |z - center|^2 <= num / den^2-style helper with emptiness handling."""
    if num < 0.0:
        return Disk(empty=True, notes=tuple(notes) + ("bracketed factor negative",))
    return Disk(center=center, radius=math.sqrt(num) / den, notes=tuple(notes))


def gamma_disk(t: TriMatrix4, tol: Tolerances = Tolerances()) -> Disk:
    """Feasible corner entries: the gammas making the 4x4 record a contraction.

    The gamma field of ``t`` is ignored.  If a non-gamma condition of the
    active branch already fails, the disk is empty.
    """
    w1, w2, w3, w4 = t.omega
    a1, a2, a3 = t.alpha
    b1, b2 = t.beta
    if _omega_precondition(t.omega, tol) is not None:
        return Disk(empty=True, notes=("diagonal modulus precondition fails",))
    d1, d2, d3, d4 = (one_minus_sq(w) for w in t.omega)
    u2 = _is_unimodular(w2, tol)
    u3 = _is_unimodular(w3, tol)

    def fail(label: str) -> Disk:
        return Disk(empty=True, notes=(f"condition {label} fails",))

    if u2 and u3:
        for label, dev in (("alpha1_zero", abs(a1)), ("alpha2_zero", abs(a2)), ("alpha3_zero", abs(a3))):
            if dev > tol.boundary:
                return fail(label)
        for label, res in (("beta1", d1 * d3 - _abs2(b1)), ("beta2", d2 * d4 - _abs2(b2))):
            if res < -tol.residual:
                return fail(label)
        return _disk_from_condition(0.0, max(d1 * d4, 0.0), 1.0)

    if u2:
        for label, dev in (("alpha1_zero", abs(a1)), ("alpha2_zero", abs(a2)), ("beta2_zero", abs(b2))):
            if dev > tol.boundary:
                return fail(label)
        qq = d3 * d4 - _abs2(a3)
        rr = d1 * d3 - _abs2(b1)
        if qq < -tol.residual:
            return fail("alpha3")
        if rr < -tol.residual:
            return fail("beta1")
        center = -a3 * b1 * w3.conjugate() / d3
        return _disk_from_condition(center, max(qq, 0.0) * max(rr, 0.0), d3)

    if u3:
        for label, dev in (("alpha2_zero", abs(a2)), ("alpha3_zero", abs(a3)), ("beta1_zero", abs(b1))):
            if dev > tol.boundary:
                return fail(label)
        qq = d1 * d2 - _abs2(a1)
        rr = d2 * d4 - _abs2(b2)
        if qq < -tol.residual:
            return fail("alpha1")
        if rr < -tol.residual:
            return fail("beta2")
        center = -a1 * b2 * w2.conjugate() / d2
        return _disk_from_condition(center, max(qq, 0.0) * max(rr, 0.0), d2)

    gap, scale = _alpha2_boundary_gap(t)
    if abs(gap) <= tol.boundary * scale:
        p = d2 * d3
        for label, res in (
            ("alpha1", d1 * d2 - _abs2(a1)),
            ("alpha3", d3 * d4 - _abs2(a3)),
        ):
            if res < -tol.residual:
                return fail(label)
        for i, label in ((1, "beta1_forced"), (2, "beta2_forced")):
            if _forced_beta_residual(t, i) > tol.boundary * scale:
                return fail(label)
        center = (w2 * w3).conjugate() * a1 * a2 * a3 / p
        qp = max(d1 * d2 - _abs2(a1), 0.0)
        rp = max(d3 * d4 - _abs2(a3), 0.0)
        return _disk_from_condition(center, qp * rp / p, 1.0)

    p, k, q, r, ell = _main_branch_quantities(t)
    for label, res in (
        ("alpha1", d1 * d2 - _abs2(a1)),
        ("alpha2_strict", k),
        ("alpha3", d3 * d4 - _abs2(a3)),
        ("beta1", q),
        ("beta2", r),
    ):
        if res < -tol.residual:
            return fail(label)
    return _disk_from_condition(-ell / k, max(q, 0.0) * max(r, 0.0) / p, k)


def beta_disk_3x3(t: TriMatrix3, tol: Tolerances = Tolerances()) -> Disk:
    """Feasible corner entries for the 3x3 record; the beta field is ignored."""
    w1, w2, w3 = t.omega
    a1, a2 = t.alpha
    if _omega_precondition(t.omega, tol) is not None:
        return Disk(empty=True, notes=("diagonal modulus precondition fails",))
    d1, d2, d3 = one_minus_sq(w1), one_minus_sq(w2), one_minus_sq(w3)
    if _is_unimodular(w2, tol):
        if abs(a1) > tol.boundary or abs(a2) > tol.boundary:
            return Disk(empty=True, notes=("alphas must vanish when |omega2| = 1",))
        return _disk_from_condition(0.0, max(d1 * d3, 0.0), 1.0)
    q1 = d1 * d2 - _abs2(a1)
    q2 = d2 * d3 - _abs2(a2)
    if q1 < -tol.residual:
        return Disk(empty=True, notes=("condition alpha1 fails",))
    if q2 < -tol.residual:
        return Disk(empty=True, notes=("condition alpha2 fails",))
    center = -a1 * a2 * w2.conjugate() / d2
    return _disk_from_condition(center, max(q1, 0.0) * max(q2, 0.0), d2)
