"""Acceptance suite: one test per exit criterion, one PASS line each.

Values quoted from the reference material carry 1e-2 relative tolerance
(or half an ulp of their printed precision for 2-3 digit values) on
moduli and Poisson's ratios, and 0.2 degrees on angles unless a tighter
or looser tolerance is stated with the criterion.
"""

import math
import time

import numpy as np
import pytest

from auxetolam.auxetic import (
    auxetic_zone_r0zero,
    classify,
    equivalent_bounds_r0zero,
    equivalent_bounds_r1zero,
    maximize_auxetic_zone_r1zero,
    min_nu_r0zero,
    min_nu_r1zero,
    region_r0zero,
    region_r1zero_paal,
    region_r1zero_taal,
)
from auxetolam.laminate import (
    LaminationPoint,
    homogenize,
    homogenize_point,
    lamination_parameters,
    make_angle_ply,
    make_quasi_isotropic,
    miki_feasible,
)
from auxetolam.micromech import existence_scan
from auxetolam.ply import PlyBundle, ply_r0compliance, ply_r0zero, ply_r1zero
from auxetolam.polar import (
    cartesian_to_polar,
    compliance_numeric,
    compliance_polar_partial,
    kelvin_matrices,
    polar_from_rotation_samples,
    polar_to_cartesian,
)
from conftest import (
    assert_close_to_paper,
    random_generic_polar,
    random_r0compliance_pairs,
    random_r0zero_pairs,
    random_r1zero_pairs,
    random_stack,
)

DEG = math.degrees


def _ok(n: int, text: str) -> None:
    print(f"ACCEPTANCE {n}: PASS - {text}")


def engineering_at_zero(p):
    s = compliance_numeric(p, 0.0)
    return 1.0 / s.s11, 1.0 / (2.0 * s.s66), -s.s12 / s.s11


def test_criterion_1_example1_pipeline(examples):
    b = examples["example1"].bundle
    assert_close_to_paper(b.polar.t0, 10.0, label="T0")
    assert_close_to_paper(b.polar.t1, 3.0, label="T1")
    assert_close_to_paper(b.polar.r0, 2.0, label="R0")
    assert b.polar.r1 == 0.0
    a = homogenize(b.polar, make_quasi_isotropic())
    e1, g12, nu = engineering_at_zero(a)
    assert_close_to_paper(e1, 15.0, label="E1A")
    assert_close_to_paper(g12, 10.0, label="G12A")
    assert_close_to_paper(nu, -0.25, label="nu12A")
    thetas = np.arange(360) * math.pi / 360.0
    s = np.linalg.inv(kelvin_matrices(a, thetas))
    nus = -s[:, 0, 1] / s[:, 0, 0]
    assert np.ptp(nus) < 1e-9
    _ok(1, f"example 1: polar ({b.polar.t0:.3f}, {b.polar.t1:.3f}, {b.polar.r0:.3f}), "
           f"quasi-isotropic laminate E1={e1:.3f}, G12={g12:.3f}, nu={nu:.4f}, "
           f"nu spread {np.ptp(nus):.2e}")


def test_criterion_2_example2_set_b(examples):
    b = examples["example2"].bundle
    d = b.dimensionless
    region = region_r1zero_taal(d.tau, d.rho)
    assert region.label == "B"
    lo, hi = region.xi_interval
    assert lo == 0.0
    assert_close_to_paper(hi, 0.667, label="xi1 upper bound")
    a15 = homogenize(b.polar, make_angle_ply(math.radians(15.0)))
    point = lamination_parameters(make_angle_ply(math.radians(15.0)))
    assert point.xi1 == pytest.approx(0.5, rel=1e-12)
    rep = classify(a15)
    assert rep.classification == "TAAL"
    aq = homogenize(b.polar, make_quasi_isotropic())
    e1, _, nu = engineering_at_zero(aq)
    assert_close_to_paper(e1, 13.3, decimals=1, label="E1A")
    assert_close_to_paper(nu, -0.33, decimals=2, label="nu12A")
    _ok(2, f"example 2: set B with xi1 in [0, {hi:.4f}], +-15 deg angle-ply TAAL, "
           f"quasi-isotropic E1={e1:.3f}, nu={nu:.4f}")


def test_criterion_3_example3_single_ply_optimal(examples):
    d = examples["example3"].bundle.dimensionless
    assert_close_to_paper(d.tau, 0.6, label="tau")
    assert_close_to_paper(d.rho, 0.3, label="rho")
    assert region_r1zero_paal(d.tau, d.rho).label == "C"
    assert region_r1zero_taal(d.tau, d.rho).label == "None"
    opt = maximize_auxetic_zone_r1zero(d.tau, d.rho)
    assert opt.single_ply_optimal and opt.xi_opt == 1.0
    assert d.rho < math.sqrt(2.0 * d.tau - 1.0)
    _ok(3, f"example 3: (tau, rho)=({d.tau:.3f}, {d.rho:.3f}) in set C, "
           "zone optimizer reports the single ply as optimal")


def test_criterion_4_example4_zone_optimization(examples):
    b = examples["example4"].bundle
    rep = classify(b.polar)
    assert DEG(rep.delta_alpha) == pytest.approx(25.2, abs=0.2)
    assert_close_to_paper(rep.nu_min, -0.15, decimals=2, label="single-ply nu_min")
    d = b.dimensionless
    opt = maximize_auxetic_zone_r1zero(d.tau, d.rho)
    assert opt.xi_opt == pytest.approx(0.632, abs=0.002)
    delta = DEG(math.acos(opt.xi_opt) / 4.0)
    assert delta == pytest.approx(12.7, abs=0.1)
    assert DEG(opt.delta_alpha) == pytest.approx(27.5, abs=0.2)
    lam_min, _ = min_nu_r1zero(d.tau, d.rho, opt.xi_opt)
    assert lam_min == pytest.approx(-0.09, abs=0.01)
    _ok(4, f"example 4: ply zone {DEG(rep.delta_alpha):.2f} deg, nu_min {rep.nu_min:.4f}; "
           f"optimum xi1={opt.xi_opt:.4f} (angle-ply +-{delta:.2f} deg), "
           f"zone {DEG(opt.delta_alpha):.2f} deg, laminate nu_min {lam_min:.4f}")


def test_criterion_5_example5_xi3_independence(examples):
    b = examples["example5"].bundle
    assert b.polar.r0 == 0.0  # exact: built from integer Kelvin components
    d = b.dimensionless
    assert d.sigma == pytest.approx(0.2, rel=1e-12)
    assert d.tau == pytest.approx(0.2, rel=1e-12)
    assert region_r0zero(d.tau, d.sigma).label == "T"
    labels = []
    for xi3 in (0.0, 0.5, 1.0):
        a = homogenize_point(b.polar, LaminationPoint(xi1=0.0, xi3=xi3))
        labels.append(classify(a).classification)
    assert labels == ["TAAL", "TAAL", "TAAL"]
    _ok(5, "example 5: R0 = 0 detected, (sigma, tau)=(0.2, 0.2) in set T, "
           "laminates at xi3 = 0, 0.5, 1 all TAAL")


def test_criterion_6_example6_minima_and_zones(examples):
    d = examples["example6"].bundle.dimensionless
    assert d.sigma == pytest.approx(0.4, rel=1e-12)
    assert d.tau == pytest.approx(0.6, rel=1e-12)
    assert region_r0zero(d.tau, d.sigma).label == "P"
    v1, t1 = min_nu_r0zero(d.tau, d.sigma, 1.0)
    assert_close_to_paper(v1, -0.336, decimals=3, label="nu_min(xi3=1)")
    assert DEG(t1) == pytest.approx(35.8, abs=0.2)
    assert DEG(auxetic_zone_r0zero(d.tau, d.sigma, 1.0)) == pytest.approx(56.0, abs=0.5)
    v7, t7 = min_nu_r0zero(d.tau, d.sigma, 0.707)
    assert v7 == pytest.approx(-0.066, abs=0.005)
    assert DEG(t7) == pytest.approx(41.8, abs=0.3)
    assert DEG(auxetic_zone_r0zero(d.tau, d.sigma, 0.707)) == pytest.approx(37.8, abs=0.3)
    _ok(6, f"example 6: set P; single ply min {v1:.4f} at {DEG(t1):.2f} deg, "
           f"zone 56 deg; xi3=0.707 laminate min {v7:.4f} at {DEG(t7):.2f} deg, "
           "zone 37.8 deg")


def test_criterion_7_example7_compliance_orthotropy(examples):
    b = examples["example7"].bundle
    comp = compliance_polar_partial(b.polar)
    assert comp.r0c < 1e-9 * comp.t0c
    assert b.polar.r0 * b.polar.t1 == pytest.approx(b.polar.r1**2, rel=1e-3)
    # also against the printed parameters (rounded): R0 T1 = R1^2
    assert 6.0 * 7.0 == pytest.approx(6.481**2, rel=1e-3)
    assert classify(b.polar).classification == "TAAL"
    a = homogenize_point(b.polar, LaminationPoint(xi1=0.7056, xi3=0.84))
    assert classify(a).classification == "TAAL"
    comp_a = compliance_polar_partial(a)
    assert comp_a.r0c < 1e-9 * comp_a.t0c
    aq = homogenize(b.polar, make_quasi_isotropic())
    rep = classify(aq)
    assert rep.classification == "NonAuxetic"
    e1, g12, nu = engineering_at_zero(aq)
    assert_close_to_paper(nu, 0.166, decimals=3, label="nu12A")
    assert_close_to_paper(e1, 23.333, label="E1A")
    assert_close_to_paper(g12, 10.0, label="G12A")
    thetas = np.arange(360) * math.pi / 360.0
    s = np.linalg.inv(kelvin_matrices(b.polar, thetas))
    g = 1.0 / (2.0 * s[:, 2, 2])
    assert np.ptp(g) / g.mean() < 1e-9
    _ok(7, f"example 7: r0c/t0c = {comp.r0c / comp.t0c:.2e}, ply TAAL, design "
           f"laminate TAAL with r0A = 0, quasi-isotropic NonAuxetic "
           f"(nu={nu:.4f}, E1={e1:.3f}, G12={g12:.3f}), shear modulus isotropic")


def test_criterion_8_equivalent_bounds_unanimity():
    rng = np.random.default_rng(2024)
    n = 10_000
    for tau, rho in zip(*random_r1zero_pairs(rng, n)):
        chk = equivalent_bounds_r1zero(PlyBundle.from_polar(ply_r1zero(tau, rho)))
        assert chk.unanimous, (tau, rho, chk.labels)
    for tau, sigma in zip(*random_r0zero_pairs(rng, n)):
        chk = equivalent_bounds_r0zero(PlyBundle.from_polar(ply_r0zero(tau, sigma)))
        assert chk.unanimous, (tau, sigma, chk.labels)
    # r0-compliance family: compliance, stiffness-polar and dimensionless
    # statements of the auxeticity condition must match as well
    tau, rho = random_r0compliance_pairs(rng, n)
    t0, t1, r0 = 1.0, tau, rho
    r1sq = tau * rho
    delta = 4.0 * t1 * (t0**2 - r0**2) - 8.0 * r1sq * (t0 - r0)
    t0c = 2.0 * (t0 * t1 - r1sq) / (2.0 * delta)
    t1c = (t0**2 - r0**2) / (4.0 * delta)
    compliance_form = t0c < 2.0 * t1c
    stiffness_form = t0 * t1 + r1sq > 2.0 * t1**2
    dimensionless_form = tau < (1.0 + rho) / 2.0
    assert np.array_equal(compliance_form, dimensionless_form)
    assert np.array_equal(stiffness_form, dimensionless_form)
    _ok(8, f"equivalent bound formulations unanimous on {n} random plies "
           "per family (r1zero, r0zero, r0compliance)")


def test_criterion_9_polar_sign_vs_brute_force(examples):
    rng = np.random.default_rng(4096)
    for name, mat in examples.items():
        a = classify(mat.bundle.polar, method="analytic")
        s = classify(mat.bundle.polar, method="sampled")
        assert a.classification == s.classification, name
    agree = 0
    for _ in range(1000):
        p = random_generic_polar(rng)
        a = classify(p, method="analytic")
        s = classify(p, method="sampled")
        assert a.classification == s.classification, p
        agree += 1
    _ok(9, f"polar-sign classifier and compliance-inversion sampling agree on "
           f"all 7 examples and {agree} random plies")


def test_criterion_10_existence_scans():
    start = time.time()
    summaries = {}
    for family in ("r1zero-taal", "r1zero-paal", "r0zero-taal", "r0zero-paal"):
        res = existence_scan(family)  # default 101 x 101 x 21 grid
        summaries[family] = res.member_nu_range()
        assert res.member_count > 0, family
    elapsed = time.time() - start
    for family in ("r1zero-taal", "r1zero-paal", "r0zero-taal"):
        assert summaries[family][1] < 0.0, (family, summaries[family])
    assert summaries["r0zero-paal"][1] > 0.0
    assert elapsed < 30.0
    _ok(10, f"default-grid scans in {elapsed:.2f} s; TAAL/PAAL(r1zero) and "
            f"TAAL(r0zero) members all have nu < 0, PAAL(r0zero) reaches "
            f"nu = {summaries['r0zero-paal'][1]:.3f} > 0")


def test_criterion_11_property_suite():
    from auxetolam.polar import PolarStiffness

    rng = np.random.default_rng(31337)
    # polar <-> Cartesian roundtrip at 1e-12
    n_round = 0
    while n_round < 2000:
        tau = rng.uniform(0.05, 1.2)
        r0 = rng.uniform(0.0, 0.9)
        r1 = rng.uniform(0.0, 0.6)
        cand = PolarStiffness(
            t0=1.0, t1=tau, r0=r0, r1=r1,
            phi0=float(rng.choice([0.0, math.pi / 4])),
            phi1=float(rng.choice([0.0, math.pi / 2])),
        )
        q = polar_to_cartesian(cand)
        if not q.is_positive_definite():
            continue
        back = cartesian_to_polar(q)
        for f in ("t0", "t1", "r0", "r1"):
            assert getattr(back, f) == pytest.approx(getattr(cand, f), rel=1e-12, abs=1e-12)
        n_round += 1
    # rotation invariance of the invariants at 1e-10
    thetas = np.arange(16) * math.pi / 16.0
    for _ in range(300):
        p = random_generic_polar(rng)
        shift = rng.uniform(-math.pi, math.pi)
        fit = polar_from_rotation_samples(kelvin_matrices(p, thetas + shift), thetas + shift)
        for f in ("t0", "t1", "r0", "r1"):
            assert getattr(fit, f) == pytest.approx(getattr(p, f), rel=1e-10, abs=1e-10)
    # isotropic-part conservation and Miki feasibility over 1000 stacks
    for _ in range(1000):
        p = random_generic_polar(rng)
        stack = random_stack(rng)
        a = homogenize(p, stack)
        assert a.t0 == pytest.approx(p.t0, rel=1e-12)
        assert a.t1 == pytest.approx(p.t1, rel=1e-12)
        assert miki_feasible(lamination_parameters(stack))
    # Miki feasibility of bulk-generated lamination points
    angles = rng.uniform(-math.pi, math.pi, size=(100_000, 6))
    xi1 = np.cos(4.0 * angles).mean(axis=1)
    xi3 = np.cos(2.0 * angles).mean(axis=1)
    assert np.all(2.0 * xi3**2 - 1.0 <= xi1 + 1e-12) and np.all(xi1 <= 1.0 + 1e-12)
    # r0-compliance dichotomy: PAAL impossible over 1e4 random plies
    tau, rho = random_r0compliance_pairs(rng, 10_000)
    c = 2.0 * (tau - tau * rho) - 1.0 + rho**2
    h = np.abs(2.0 * tau * rho - 2.0 * tau * rho)
    paal = ((c + h) < 0.0) != ((c - h) < 0.0)
    assert not paal.any()
    for t, r in zip(tau[:100], rho[:100]):
        assert classify(ply_r0compliance(t, r)).classification != "PAAL"
    _ok(11, "roundtrips at 1e-12, rotation invariance at 1e-10, isotropic-part "
            "conservation and Miki feasibility on 1000 stacks (plus 1e5 points), "
            "r0-compliance PAAL impossibility on 1e4 plies")
