"""Tests for the closed-form criteria and feasibility disks, all anchored to
the eigenvalue oracle."""

import cmath
import math

import numpy as np
import pytest

from tricontract.core import DomainError, Tolerances, TriMatrix3, TriMatrix4, to_dense
from tricontract.criteria import (
    beta_disk_3x3,
    check_4x4_omega3_zero,
    check_contraction_2x2,
    check_contraction_3x3,
    check_contraction_4x4,
    gamma_disk,
)
from tricontract.fuzz import sample_tri4
from tricontract.oracle import is_contraction_oracle, operator_norm

NORM_BAND = 1e-8


def oracle_norm(t):
    return operator_norm(to_dense(t))


def tri4(omega=(0, 0, 0, 0), alpha=(0, 0, 0), beta=(0, 0), gamma=0):
    return TriMatrix4(omega=omega, alpha=alpha, beta=beta, gamma=gamma)


class TestCheck2x2:
    def test_identity(self):
        v = check_contraction_2x2(1, 0, 0, 1)
        assert v.is_contraction and v.residuals["norm"] == pytest.approx(0.0, abs=1e-14)

    def test_single_large_entry(self):
        assert not check_contraction_2x2(0, 2, 0, 0).is_contraction

    def test_rank_one_row(self):
        v = check_contraction_2x2(0.6, 0.8, 0, 0)
        assert v.is_contraction and v.residuals["norm"] == pytest.approx(0.0, abs=1e-14)

    def test_matches_oracle(self):
        rng = np.random.default_rng(0)
        for _ in range(500):
            m = 0.8 * (rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
            norm = operator_norm(m)
            if abs(norm - 1.0) <= NORM_BAND:
                continue
            v = check_contraction_2x2(m[0, 0], m[0, 1], m[1, 0], m[1, 1])
            assert v.is_contraction == (norm < 1.0)


class TestCheck3x3:
    def test_alpha_equality_case(self):
        v = check_contraction_3x3(TriMatrix3(omega=(0, 0, 0), alpha=(1, 0), beta=0))
        assert v.is_contraction
        assert v.residuals["alpha1"] == pytest.approx(0.0, abs=1e-15)

    def test_unimodular_branch(self):
        v = check_contraction_3x3(TriMatrix3(omega=(0, 1, 0), alpha=(0, 0), beta=0.5))
        assert v.is_contraction and v.branch == "Omega2Unimodular"

    def test_beta_crossover(self):
        t_in = TriMatrix3(omega=(0, 0, 0), alpha=(0.8, 0.8), beta=0.36)
        t_out = TriMatrix3(omega=(0, 0, 0), alpha=(0.8, 0.8), beta=0.37)
        v_in = check_contraction_3x3(t_in)
        assert v_in.is_contraction and v_in.residuals["beta"] == pytest.approx(0.0, abs=1e-12)
        assert not check_contraction_3x3(t_out).is_contraction
        assert oracle_norm(t_in) <= 1 + 1e-12 < oracle_norm(t_out)

    def test_precondition_failure(self):
        v = check_contraction_3x3(TriMatrix3(omega=(1.5, 0, 0), alpha=(0, 0), beta=0))
        assert not v.is_contraction and v.branch == "PreconditionFailed"

    def test_oracle_equivalence(self):
        rng = np.random.default_rng(1)
        checked = 0
        for _ in range(2000):
            e = (0.7 * rng.normal(size=12)).view(complex)
            t = TriMatrix3(omega=tuple(0.8 * e[0:3] / np.maximum(1, np.abs(e[0:3]))), alpha=tuple(e[3:5]), beta=e[5])
            norm = oracle_norm(t)
            if abs(norm - 1.0) <= NORM_BAND:
                continue
            assert check_contraction_3x3(t).is_contraction == (norm < 1.0)
            checked += 1
        assert checked > 1500


class TestCheck4x4:
    def test_zero_matrix(self):
        v = check_contraction_4x4(tri4())
        assert v.is_contraction and v.branch == "Main"
        assert all(r > 0 for r in v.residuals.values())

    def test_boundary_alpha2_branch(self):
        v = check_contraction_4x4(tri4(alpha=(0, 1, 0), gamma=0.5))
        assert v.is_contraction and v.branch == "BoundaryAlpha2"

    def test_gamma_equality(self):
        v = check_contraction_4x4(tri4(gamma=1))
        assert v.is_contraction
        assert v.residuals["gamma"] == pytest.approx(0.0, abs=1e-14)

    def test_gamma_outside_disk(self):
        t = tri4(omega=(0.5, 0, 0, 0.5), gamma=0.76)
        assert not check_contraction_4x4(t).is_contraction
        assert oracle_norm(t) > 1.0

    def test_gamma_residual_reports_gap(self):
        v = check_contraction_4x4(tri4(gamma=1.5))
        assert not v.is_contraction
        assert v.residuals["gamma"] == pytest.approx(1 - 2.25, abs=1e-12)

    def test_scaling_monotonicity(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            t = sample_tri4(rng)
            if not check_contraction_4x4(t).is_contraction:
                continue
            for s in (0.0, 0.3, 0.7, 1.0):
                assert check_contraction_4x4(t.scaled(s)).is_contraction

    def test_unimodular_branches(self):
        # |omega2| = 1 forces row/column 2 off-diagonal entries to vanish
        t = tri4(omega=(0, 1, 0, 0), beta=(0.3, 0), gamma=0.2)
        v = check_contraction_4x4(t)
        assert v.branch == "Omega2Unimodular" and v.is_contraction
        t_bad = tri4(omega=(0, 1, 0, 0), beta=(0, 0.5))
        v_bad = check_contraction_4x4(t_bad)
        assert not v_bad.is_contraction
        assert oracle_norm(t_bad) > 1.0
        t3 = tri4(omega=(0, 0, 1, 0), beta=(0, 0.3), gamma=0.2)
        v3 = check_contraction_4x4(t3)
        assert v3.branch == "Omega3Unimodular" and v3.is_contraction
        tb = tri4(omega=(0, 1j, -1, 0), beta=(0, 0), gamma=0.9)
        vb = check_contraction_4x4(tb)
        assert vb.branch == "BothUnimodular" and vb.is_contraction

    def test_branch_continuity_near_alpha2_boundary(self):
        # records straddling |alpha2|^2 = (1-|w2|^2)(1-|w3|^2) stay oracle-consistent
        rng = np.random.default_rng(3)
        for _ in range(300):
            w2 = 0.6 * cmath.exp(2j * math.pi * rng.uniform())
            w3 = 0.4 * cmath.exp(2j * math.pi * rng.uniform())
            prod = (1 - abs(w2) ** 2) * (1 - abs(w3) ** 2)
            bump = rng.choice([0.0, 1e-12, -1e-12, 1e-10, -1e-10])
            a2 = math.sqrt(max(prod + bump, 0.0)) * cmath.exp(2j * math.pi * rng.uniform())
            a1 = 0.3 * cmath.exp(2j * math.pi * rng.uniform())
            a3 = 0.3 * cmath.exp(2j * math.pi * rng.uniform())
            b1 = -a1 * a2 * w2.conjugate() / (1 - abs(w2) ** 2)
            b2 = -a2 * a3 * w3.conjugate() / (1 - abs(w3) ** 2)
            t = tri4(omega=(0.2, w2, w3, 0.1), alpha=(a1, a2, a3), beta=(b1, b2), gamma=0.05)
            norm = oracle_norm(t)
            if abs(norm - 1.0) <= NORM_BAND:
                continue
            assert check_contraction_4x4(t).is_contraction == (norm < 1.0)

    def test_non_finite_rejected(self):
        with pytest.raises(Exception):
            tri4(gamma=float("inf"))


class TestOmega3Zero:
    def test_zero_matrix(self):
        v = check_4x4_omega3_zero(tri4())
        assert v.is_contraction and v.branch == "Main"

    def test_gram_diagonal_case(self):
        v = check_4x4_omega3_zero(tri4(alpha=(0, 1, 0), gamma=1))
        assert v.is_contraction

    def test_requires_omega3_zero(self):
        with pytest.raises(DomainError):
            check_4x4_omega3_zero(tri4(omega=(0, 0, 0.1, 0)))

    def test_three_way_agreement(self):
        rng = np.random.default_rng(4)
        checked = 0
        for _ in range(2000):
            t = sample_tri4(rng)
            t = tri4(omega=(t.omega[0], t.omega[1], 0.0, t.omega[3]), alpha=t.alpha, beta=t.beta, gamma=t.gamma)
            norm = oracle_norm(t)
            if abs(norm - 1.0) <= NORM_BAND:
                continue
            v1 = check_4x4_omega3_zero(t)
            v2 = check_contraction_4x4(t)
            assert v1.is_contraction == v2.is_contraction == (norm < 1.0)
            checked += 1
        assert checked > 1500


class TestGammaDisk:
    def test_all_zero(self):
        d = gamma_disk(tri4())
        assert not d.empty and d.center == 0 and d.radius == pytest.approx(1.0, abs=1e-15)

    def test_corner_diagonal(self):
        d = gamma_disk(tri4(omega=(0.5, 0, 0, 0.5)))
        assert d.center == 0 and d.radius == pytest.approx(0.75, abs=1e-14)

    def test_precondition_failure_empty(self):
        d = gamma_disk(tri4(alpha=(1.1, 0, 0)))
        assert d.empty and any("alpha1" in n for n in d.notes)

    def test_membership_matches_verdict(self):
        rng = np.random.default_rng(5)
        tested = 0
        while tested < 200:
            t = sample_tri4(rng)
            d = gamma_disk(t)
            if d.empty:
                # no gamma can work, including gamma = 0
                assert not check_contraction_4x4(t.with_gamma(0.0)).is_contraction
                tested += 1
                continue
            for frac in (0.0, 0.5, 0.99, 1.01, 1.5):
                g = d.center + frac * d.radius * cmath.exp(2j * math.pi * rng.uniform())
                tc = t.with_gamma(g)
                norm = oracle_norm(tc)
                if abs(norm - 1.0) <= NORM_BAND:
                    continue
                assert check_contraction_4x4(tc).is_contraction == (norm < 1.0)
                assert d.contains(g) == (norm < 1.0)
            tested += 1

    def test_boundary_norm_is_one(self):
        rng = np.random.default_rng(6)
        done = 0
        while done < 100:
            t = sample_tri4(rng).scaled(0.8)
            d = gamma_disk(t)
            if d.empty or d.radius < 1e-3:
                continue
            g = d.boundary_point(2 * math.pi * rng.uniform())
            assert oracle_norm(t.with_gamma(g)) == pytest.approx(1.0, abs=1e-7)
            done += 1


class TestBetaDisk3x3:
    def test_symmetric_alpha_radius(self):
        d = beta_disk_3x3(TriMatrix3(omega=(0, 0, 0), alpha=(0.8, 0.8), beta=0))
        assert d.center == 0 and d.radius == pytest.approx(0.36, abs=1e-14)

    def test_all_zero(self):
        d = beta_disk_3x3(TriMatrix3(omega=(0, 0, 0), alpha=(0, 0), beta=0))
        assert d.radius == pytest.approx(1.0, abs=1e-15)

    def test_alpha_too_big(self):
        d = beta_disk_3x3(TriMatrix3(omega=(0, 0, 0), alpha=(1.01, 0), beta=0))
        assert d.empty

    def test_unimodular_degenerate(self):
        d = beta_disk_3x3(TriMatrix3(omega=(0.6, 1, 0), alpha=(0, 0), beta=0))
        assert not d.empty and d.radius == pytest.approx(0.8, abs=1e-12)
        d2 = beta_disk_3x3(TriMatrix3(omega=(0, 1, 0), alpha=(0.1, 0), beta=0))
        assert d2.empty

    def test_membership_matches_verdict(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            e = (0.5 * rng.normal(size=10)).view(complex)
            t = TriMatrix3(omega=tuple(e[0:3]), alpha=tuple(e[3:5]), beta=0)
            d = beta_disk_3x3(t)
            if d.empty:
                continue
            for frac in (0.5, 1.02):
                b = d.center + frac * d.radius * cmath.exp(2j * math.pi * rng.uniform())
                tc = TriMatrix3(omega=t.omega, alpha=t.alpha, beta=b)
                norm = oracle_norm(tc)
                if abs(norm - 1.0) <= NORM_BAND:
                    continue
                assert check_contraction_3x3(tc).is_contraction == (norm < 1.0)
