"""Kelvin/polar conversions, compliance and symmetry detection."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from auxetolam.errors import NotInOrthotropyFrame, NotPositiveDefinite, SingularTensor
from auxetolam.polar import (
    SQRT2,
    CartesianStiffness,
    PolarStiffness,
    cartesian_to_polar,
    classify_symmetry,
    compliance_components,
    compliance_numeric,
    compliance_polar_full,
    compliance_polar_partial,
    kelvin_components,
    kelvin_matrices,
    polar_delta,
    polar_from_rotation_samples,
    polar_to_cartesian,
)
from conftest import random_generic_polar

PI4 = math.pi / 4.0
PI2 = math.pi / 2.0


def brute_force_rotate(matrix: np.ndarray, theta: float) -> np.ndarray:
    """Oracle: rotate the Kelvin matrix through the full 4th-order tensor."""
    q11, q12, q16 = matrix[0]
    q22, q26, q66 = matrix[1, 1], matrix[1, 2], matrix[2, 2]
    c = np.zeros((2, 2, 2, 2))
    c[0, 0, 0, 0] = q11
    c[0, 0, 1, 1] = c[1, 1, 0, 0] = q12
    c[1, 1, 1, 1] = q22
    for (i, j, k, l, v) in [
        (0, 0, 0, 1, q16 / SQRT2),
        (1, 1, 0, 1, q26 / SQRT2),
        (0, 1, 0, 1, q66 / 2.0),
    ]:
        c[i, j, k, l] = c[i, j, l, k] = c[j, i, k, l] = c[j, i, l, k] = v
        c[k, l, i, j] = c[l, k, i, j] = c[k, l, j, i] = c[l, k, j, i] = v
    r = np.array([[math.cos(theta), math.sin(theta)],
                  [-math.sin(theta), math.cos(theta)]])
    cr = np.einsum("pi,qj,rk,sl,ijkl->pqrs", r, r, r, r, c)
    return np.array(
        [
            [cr[0, 0, 0, 0], cr[0, 0, 1, 1], SQRT2 * cr[0, 0, 0, 1]],
            [cr[0, 0, 1, 1], cr[1, 1, 1, 1], SQRT2 * cr[1, 1, 0, 1]],
            [SQRT2 * cr[0, 0, 0, 1], SQRT2 * cr[1, 1, 0, 1], 2.0 * cr[0, 1, 0, 1]],
        ]
    )


class TestCartesianToPolar:
    @pytest.mark.parametrize(
        "q, expected",
        [
            # (q11, q12, q22, q66) -> (t0, t1, r0, r1, phi0, phi1)
            ((18.0, -6.0, 18.0, 16.0), (10.0, 3.0, 2.0, 0.0, 0.0, 0.0)),
            ((22.0, -6.0, 6.0, 20.0), (10.0, 2.0, 0.0, 2.0, 0.0, 0.0)),
            ((19.0, 5.0, 19.0, 26.0), (10.0, 6.0, 3.0, 0.0, PI4, 0.0)),
        ],
    )
    def test_worked_examples(self, q, expected):
        p = cartesian_to_polar(CartesianStiffness(q11=q[0], q12=q[1], q22=q[2], q66=q[3]))
        np.testing.assert_allclose(
            [p.t0, p.t1, p.r0, p.r1, p.phi0, p.phi1], expected, atol=1e-12
        )

    def test_isotropic_kills_both_harmonics(self):
        q = CartesianStiffness(q11=10.0, q12=4.0, q22=10.0, q66=6.0)
        p = cartesian_to_polar(q)
        assert p.r0 == 0.0 and p.r1 == 0.0

    def test_rejects_shear_coupling(self):
        q = CartesianStiffness(q11=10.0, q12=2.0, q22=8.0, q66=6.0, q16=0.5)
        with pytest.raises(NotInOrthotropyFrame):
            cartesian_to_polar(q)

    def test_rejects_indefinite(self):
        q = CartesianStiffness(q11=1.0, q12=5.0, q22=1.0, q66=6.0)
        with pytest.raises(NotPositiveDefinite):
            cartesian_to_polar(q)
        assert not q.is_positive_definite()

    def test_positive_definite_iff_eigenvalues(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            m = rng.uniform(-5, 5, (3, 3))
            m = (m + m.T) / 2.0
            q = CartesianStiffness.from_matrix(m)
            assert q.is_positive_definite() == bool(
                np.all(np.linalg.eigvalsh(m) > 0)
            )


class TestPolarToCartesian:
    def test_example1_inverse(self):
        p = PolarStiffness(t0=10.0, t1=3.0, r0=2.0, r1=0.0)
        q = polar_to_cartesian(p)
        np.testing.assert_allclose(
            [q.q11, q.q12, q.q22, q.q66], [18.0, -6.0, 18.0, 16.0], atol=1e-12
        )

    def test_pi_periodicity(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            p = random_generic_polar(rng)
            theta = rng.uniform(0, math.pi)
            np.testing.assert_allclose(
                kelvin_components(p, theta),
                kelvin_components(p, theta + math.pi),
                atol=1e-12,
            )

    def test_example5_quarter_turn_swaps_axes(self):
        # oracle: brute-force rotation of the Kelvin matrix
        p = PolarStiffness(t0=10.0, t1=2.0, r0=0.0, r1=2.0)
        q0 = polar_to_cartesian(p).matrix()
        rotated = brute_force_rotate(q0, PI2)
        q = polar_to_cartesian(p, PI2)
        np.testing.assert_allclose(q.matrix(), rotated, atol=1e-12)
        assert q.q11 == pytest.approx(6.0) and q.q22 == pytest.approx(22.0)
        assert q.q12 == pytest.approx(-6.0) and q.q66 == pytest.approx(20.0)

    def test_harmonics_match_brute_force_rotation(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            p = random_generic_polar(rng)
            theta = rng.uniform(-math.pi, math.pi)
            np.testing.assert_allclose(
                polar_to_cartesian(p, theta).matrix(),
                brute_force_rotate(polar_to_cartesian(p).matrix(), theta),
                atol=1e-12,
            )

    def test_roundtrip_at_zero(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            tau, rho, sig = rng.uniform(0.05, 1.2), rng.uniform(0, 0.9), rng.uniform(0, 0.5)
            p = PolarStiffness(
                t0=1.0, t1=tau, r0=rho, r1=sig,
                phi0=rng.choice([0.0, PI4]), phi1=rng.choice([0.0, PI2]),
            )
            q = polar_to_cartesian(p)
            if not q.is_positive_definite():
                continue
            back = cartesian_to_polar(q)
            for field in ("t0", "t1", "r0", "r1"):
                assert getattr(back, field) == pytest.approx(
                    getattr(p, field), rel=1e-12, abs=1e-12
                )
            if p.r0 > 1e-9:
                assert back.phi0 == pytest.approx(p.phi0, abs=1e-12)
            if p.r1 > 1e-9:
                assert back.phi1 == pytest.approx(p.phi1, abs=1e-12)


@given(
    t1=st.floats(0.05, 1.2),
    r0=st.floats(0.0, 0.85),
    r1=st.floats(0.0, 0.6),
    b0=st.sampled_from([0.0, PI4]),
    b1=st.sampled_from([0.0, PI2]),
)
@settings(max_examples=150, deadline=None)
def test_roundtrip_property(t1, r0, r1, b0, b1):
    p = PolarStiffness(t0=1.0, t1=t1, r0=r0, r1=r1, phi0=b0, phi1=b1)
    q = polar_to_cartesian(p)
    if not q.is_positive_definite():
        return
    back = cartesian_to_polar(q)
    assert math.isclose(back.t0, p.t0, rel_tol=1e-12, abs_tol=1e-13)
    assert math.isclose(back.t1, p.t1, rel_tol=1e-12, abs_tol=1e-13)
    assert math.isclose(back.r0, p.r0, rel_tol=1e-12, abs_tol=1e-13)
    assert math.isclose(back.r1, p.r1, rel_tol=1e-12, abs_tol=1e-13)


class TestRotationInvariance:
    def test_invariants_recovered_by_harmonic_fit(self):
        rng = np.random.default_rng(13)
        thetas = np.arange(16) * math.pi / 16.0
        for _ in range(50):
            p = random_generic_polar(rng)
            shift = rng.uniform(-math.pi, math.pi)
            fitted = polar_from_rotation_samples(
                kelvin_matrices(p, thetas + shift), thetas + shift
            )
            for field in ("t0", "t1", "r0", "r1"):
                assert getattr(fitted, field) == pytest.approx(
                    getattr(p, field), rel=1e-10, abs=1e-10
                )


class TestDelta:
    def test_example1_value(self):
        p = PolarStiffness(t0=10.0, t1=3.0, r0=2.0, r1=0.0)
        assert polar_delta(p) == pytest.approx(1152.0, rel=1e-12)

    def test_isotropic_reduction(self):
        p = PolarStiffness(t0=2.0, t1=0.7, r0=0.0, r1=0.0)
        assert polar_delta(p) == pytest.approx(4.0 * 0.7 * 4.0, rel=1e-12)

    def test_example7_value(self):
        p = PolarStiffness(t0=10.0, t1=7.0, r0=6.0, r1=math.sqrt(42.0))
        assert polar_delta(p) == pytest.approx(448.0, rel=1e-12)

    def test_relates_to_kelvin_determinant(self):
        # the constant factor, calibrated on example 1, is exactly 4
        rng = np.random.default_rng(17)
        for _ in range(100):
            p = random_generic_polar(rng)
            det = np.linalg.det(polar_to_cartesian(p).matrix())
            assert det == pytest.approx(4.0 * polar_delta(p), rel=1e-9)


class TestCompliance:
    def test_partial_matches_numeric_inversion(self):
        # oracle: invert the Kelvin matrix at sampled angles, fit harmonics
        rng = np.random.default_rng(19)
        thetas = np.arange(16) * math.pi / 16.0
        for _ in range(40):
            p = random_generic_polar(rng)
            part = compliance_polar_partial(p)
            fitted = polar_from_rotation_samples(
                np.linalg.inv(kelvin_matrices(p, thetas)), thetas
            )
            assert part.t0c == pytest.approx(fitted.t0, rel=1e-10)
            assert part.t1c == pytest.approx(fitted.t1, rel=1e-10)
            assert part.r0c == pytest.approx(fitted.r0, rel=1e-9, abs=1e-12)

    def test_example1_compliance_values(self):
        p = PolarStiffness(t0=10.0, t1=3.0, r0=2.0, r1=0.0)
        c = compliance_polar_partial(p)
        assert c.t0c == pytest.approx(0.0260416667, rel=1e-8)
        assert c.t1c == pytest.approx(0.0208333333, rel=1e-8)
        assert c.r0c == pytest.approx(0.0052083333, rel=1e-8)
        assert c.phi0c == pytest.approx(PI4, abs=1e-12)
        assert c.source == "analytic-partial"
        assert c.r1c is None and c.phi1c is None

    def test_example7_r0c_vanishes(self):
        p = PolarStiffness(t0=10.0, t1=7.0, r0=6.0, r1=math.sqrt(42.0))
        c = compliance_polar_partial(p)
        assert c.r0c < 1e-12 * c.t0c

    def test_isotropic_compliance(self):
        p = PolarStiffness(t0=2.0, t1=0.6, r0=0.0, r1=0.0)
        c = compliance_polar_partial(p)
        assert c.r0c == pytest.approx(0.0, abs=1e-15)
        s = compliance_numeric(p, 0.3)
        assert c.t0c == pytest.approx(s.s66 / 2.0, rel=1e-12)

    def test_full_fit_recovers_r1(self):
        p = PolarStiffness(t0=10.0, t1=7.0, r0=6.0, r1=math.sqrt(42.0))
        c = compliance_polar_full(p)
        assert c.source == "numeric-full"
        assert c.r1c == pytest.approx(0.0289325, rel=1e-4)
        assert abs(c.phi1c) == pytest.approx(PI2, abs=1e-9)
        # reconstruction check at arbitrary angles
        for theta in (0.17, 0.6, 1.2):
            s11 = (
                c.t0c + 2.0 * c.t1c
                + c.r0c * math.cos(4.0 * (c.phi0c - theta))
                + 4.0 * c.r1c * math.cos(2.0 * (c.phi1c - theta))
            )
            assert s11 == pytest.approx(compliance_numeric(p, theta).s11, rel=1e-10)

    def test_s12_sign_oracle(self):
        # 1e4 random (ply, angle) pairs: numeric s12 sign equals the
        # analytic-partial expression -t0c + 2 t1c - r0c cos4(phi0c-theta)
        rng = np.random.default_rng(23)
        checked = 0
        for _ in range(200):
            p = random_generic_polar(rng)
            part = compliance_polar_partial(p)
            thetas = rng.uniform(0.0, math.pi, 50)
            s = compliance_components(p, thetas)
            predicted = (
                -part.t0c + 2.0 * part.t1c
                - part.r0c * np.cos(4.0 * (part.phi0c - thetas))
            )
            mask = np.abs(s[:, 1]) > 1e-12 * part.t0c
            assert np.all(np.sign(s[:, 1][mask]) == np.sign(predicted[mask]))
            checked += int(mask.sum())
        assert checked > 9000

    def test_isotropic_s11_independent_of_angle(self):
        p = PolarStiffness(t0=1.5, t1=0.5, r0=0.0, r1=0.0)
        s = compliance_components(p, np.linspace(0, math.pi, 50))
        assert np.ptp(s[:, 0]) < 1e-15

    def test_example4_nu_at_zero(self):
        q = CartesianStiffness(q11=16.0, q12=6.0, q22=16.0, q66=30.0)
        s = compliance_numeric(cartesian_to_polar(q), 0.0)
        assert -s.s12 / s.s11 == pytest.approx(0.375, rel=1e-9)

    def test_singular_raises(self):
        p = PolarStiffness(t0=1.0, t1=0.05, r0=0.0, r1=0.6, phi0=0.0, phi1=0.0)
        assert polar_delta(p) <= 0.0
        with pytest.raises(SingularTensor):
            compliance_polar_partial(p)
        with pytest.raises(SingularTensor):
            compliance_numeric(p, 0.0)


class TestSymmetryClassification:
    def test_example2_square_symmetric(self, examples):
        sym = classify_symmetry(examples["example2"].bundle.polar)
        assert sym.kind == "R1-orthotropic"
        assert "R1_zero" in sym.conditions

    def test_example6_r0_orthotropic(self, examples):
        sym = classify_symmetry(examples["example6"].bundle.polar)
        assert sym.kind == "R0-orthotropic"
        assert sym.conditions == ("R0_zero",)

    def test_example7_compliance_special(self, examples):
        sym = classify_symmetry(examples["example7"].bundle.polar)
        assert sym.kind == "r0-orthotropic"
        assert "r0_zero" in sym.conditions
        assert sym.k == 0

    def test_isotropic(self):
        sym = classify_symmetry(PolarStiffness(t0=1.0, t1=0.4, r0=0.0, r1=0.0))
        assert sym.kind == "isotropic"
        assert set(sym.conditions) >= {"R0_zero", "R1_zero", "r0_zero"}

    def test_ordinary_orthotropy_k_values(self):
        p0 = PolarStiffness(t0=1.0, t1=0.5, r0=0.2, r1=0.3, phi0=0.3, phi1=0.3)
        sym = classify_symmetry(p0)
        assert sym.kind in ("ordinary-orthotropic", "r0-orthotropic")
        assert sym.k == 0
        p1 = PolarStiffness(t0=1.0, t1=0.5, r0=0.2, r1=0.3, phi0=PI4, phi1=0.0)
        assert classify_symmetry(p1).k == 1

    def test_generic_anisotropic(self):
        p = PolarStiffness(t0=1.0, t1=0.5, r0=0.2, r1=0.3, phi0=0.11, phi1=0.57)
        assert classify_symmetry(p).kind == "generic-anisotropic"
