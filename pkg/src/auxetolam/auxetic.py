"""Auxeticity classification, region tests and zone optimization.

The sign of the directional Poisson's ratio nu12(theta) = -s12/s11 is the
sign of -s12, and s12 contains only the isotropic and 4*theta compliance
harmonics.  Multiplying by the (positive) normalizer, auxeticity at an
angle theta is equivalent to g(theta) < 0 with::

    g(theta) = 2(T0 T1 - R1^2) - T0^2 + R0^2
               + 2 [R1^2 cos4(Phi1-theta) - T1 R0 cos4(Phi0-theta)]

g is a single 4*theta harmonic, g = C + H cos4(theta - theta0), so total
auxeticity (TAAL) is C + H < 0, total non-auxeticity is C - H >= 0 and
anything in between is partial (PAAL).  The auxetic zone width within a
quarter period [0, pi/2) is (pi - arccos(-C/H))/2.

Closed-form region tests exist for the three special ply families; all
the equivalent bound formulations from the Cartesian components or the
technical moduli are implemented verbatim and checked against the
dimensionless polar reference.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import (
    NotAuxeticPly,
    NotInBorC,
    NotR0Compliant,
    OutOfElasticDomain,
    OutOfRegion,
)
from .laminate import LaminationPoint, homogenize_point
from .ply import PlyBundle, TechnicalModuli, ply_r0zero, ply_r1zero
from .polar import PolarStiffness, compliance_components

#: Width below which two region-bound values count as coincident; boundary
#: points classify as None with the boundary flag set.
BOUNDARY_TOL = 1e-12

_ANGLE_TOL = 1e-10  # angular refinement tolerance for extremum search


@dataclass(frozen=True)
class AuxeticityReport:
    """Directional-auxeticity summary of one stiffness tensor.

    delta_alpha is the angular measure of {theta in [0, pi/2): nu < 0}:
    pi/2 for a TAAL, 0 when non-auxetic, strictly between for a PAAL.
    theta_min (radians, in [0, pi)) attains nu_min.
    """

    classification: str  # "TAAL" | "PAAL" | "NonAuxetic"
    nu_min: float
    theta_min: float
    delta_alpha: float
    method: str  # "analytic" | "sampled"


@dataclass(frozen=True)
class RegionResult:
    """Membership of a dimensionless ply point in one auxeticity region.

    ``xi_interval`` is the admissible range of the stacking parameter
    (xi1 for the R1 = 0 family, xi3 for R0 = 0): a (lo, hi) pair, "all"
    (labels A and T only) or "empty".  ``boundary`` flags points within
    BOUNDARY_TOL of a region edge; these classify as None.
    """

    label: str  # "A" | "B" | "C" | "T" | "P" | "None"
    xi_interval: tuple[float, float] | str
    boundary: bool = False


@dataclass(frozen=True)
class ZoneOptimum:
    """Result of auxetic-zone maximization over the stacking parameter."""

    xi_opt: float
    lambda_min: float
    delta_alpha: float  # radians
    taal: bool
    single_ply_optimal: bool


@dataclass(frozen=True)
class BoundsCheck:
    """Agreement of all equivalent bound formulations for one ply."""

    reference: str
    labels: dict[str, str]
    unanimous: bool


# ---------------------------------------------------------------------------
# Sign function and classification


def sign_harmonic(p: PolarStiffness) -> tuple[float, float, float]:
    """Constant C, amplitude H and phase theta0 of g(theta).

    g(theta) = C + H*cos(4*(theta - theta0)); g < 0 means nu12(theta) < 0.
    """
    c = 2.0 * (p.t0 * p.t1 - p.r1**2) - p.t0**2 + p.r0**2
    h = 2.0 * p.r1**2 * cmath.exp(4j * p.phi1) - 2.0 * p.t1 * p.r0 * cmath.exp(
        4j * p.phi0
    )
    return c, abs(h), cmath.phase(h) / 4.0


def auxetic_sign(p: PolarStiffness, theta) -> np.ndarray:
    """g(theta), vectorized; negative where the tensor is auxetic."""
    c, h, theta0 = sign_harmonic(p)
    return c + h * np.cos(4.0 * (np.asarray(theta, dtype=float) - theta0))


def nu12_profile(p: PolarStiffness, samples: int = 720) -> np.ndarray:
    """Directional Poisson's ratio sampled uniformly on [0, pi).

    Returns an array of shape (samples, 2) with rows (theta, nu12(theta)),
    nu12 = -s12/s11 from numeric compliance.
    """
    if samples < 8:
        raise ValueError(f"need at least 8 samples, got {samples}")
    thetas = np.arange(samples) * math.pi / samples
    s = compliance_components(p, thetas)
    return np.stack([thetas, -s[:, 1] / s[:, 0]], axis=1)


def moduli_profile(p: PolarStiffness, samples: int = 720):
    """Directional engineering constants (theta, E1, G12, nu12) arrays."""
    if samples < 8:
        raise ValueError(f"need at least 8 samples, got {samples}")
    thetas = np.arange(samples) * math.pi / samples
    s = compliance_components(p, thetas)
    return thetas, 1.0 / s[:, 0], 1.0 / (2.0 * s[:, 5]), -s[:, 1] / s[:, 0]


def _nu_at(p: PolarStiffness, theta: float) -> float:
    s = compliance_components(p, float(theta))
    return float(-s[1] / s[0])


def _refine_minimum(p: PolarStiffness, samples: int) -> tuple[float, float]:
    """Grid scan plus local refinement of min nu12(theta) over [0, pi)."""
    prof = nu12_profile(p, samples)
    thetas, nus = prof[:, 0], prof[:, 1]
    lo = float(nus.min())
    span = float(nus.max()) - lo
    if span < 1e-14 * (1.0 + abs(lo)):
        return lo, 0.0  # flat profile (isotropic nu), direction arbitrary
    # earliest grid point attaining the minimum, then Brent around it
    i = int(np.nonzero(nus <= lo + 1e-9 * (1.0 + abs(lo)))[0][0])
    h = math.pi / samples
    t = thetas[i]
    try:
        res = minimize_scalar(
            lambda x: _nu_at(p, x),
            bracket=(t - h, t, t + h),
            options={"xtol": _ANGLE_TOL},
        )
        if res.fun <= lo + 1e-12:
            return float(res.fun), float(res.x) % math.pi
    except (ValueError, RuntimeError):
        pass
    return lo, float(t) % math.pi


def classify(
    p: PolarStiffness, method: str = "analytic", samples: int = 3601
) -> AuxeticityReport:
    """Classify a stiffness tensor as TAAL, PAAL or NonAuxetic.

    Parameters
    ----------
    p : PolarStiffness
        Ply or homogenized laminate tensor (Delta > 0).
    method : {"analytic", "sampled"}
        "analytic" uses the exact harmonic extrema of the sign function
        g(theta); "sampled" is the brute-force route: nu12 sampled from
        numeric compliance inversion at ``samples`` angles with bisection
        refinement of the sign changes.  Both must agree; the sampled
        route serves as independent oracle.
    samples : int
        Grid resolution for the sampled route and for the nu_min search.

    Returns
    -------
    AuxeticityReport
    """
    if method not in ("analytic", "sampled"):
        raise ValueError(f"unknown method {method!r}")
    nu_min, theta_min = _refine_minimum(p, samples)
    if method == "analytic":
        c, h, _ = sign_harmonic(p)
        if c + h < 0.0:
            label, dalpha = "TAAL", math.pi / 2.0
        elif c - h >= 0.0:
            label, dalpha = "NonAuxetic", 0.0
        else:
            dalpha = (math.pi - math.acos(min(1.0, max(-1.0, -c / h)))) / 2.0
            label = "PAAL"
    else:
        label, dalpha = _classify_sampled(p, samples)
    return AuxeticityReport(
        classification=label,
        nu_min=nu_min,
        theta_min=theta_min,
        delta_alpha=dalpha,
        method=method,
    )


def _classify_sampled(p: PolarStiffness, samples: int) -> tuple[str, float]:
    """Brute-force classification; zone width by root counting on [0, pi/2)."""
    half = math.pi / 2.0
    thetas = np.linspace(0.0, half, samples)
    s = compliance_components(p, thetas)
    nus = -s[:, 1] / s[:, 0]
    neg = nus < 0.0
    if bool(np.all(neg)):
        return "TAAL", half
    if not bool(np.any(neg)):
        return "NonAuxetic", 0.0
    # refine every sign change by bisection on nu
    roots = []
    for i in np.nonzero(np.diff(neg))[0]:
        a, b = float(thetas[i]), float(thetas[i + 1])
        fa = float(nus[i])
        while b - a > _ANGLE_TOL:
            mid = 0.5 * (a + b)
            fm = _nu_at(p, mid)
            if (fa < 0.0) == (fm < 0.0):
                a, fa = mid, fm
            else:
                b = mid
        roots.append(0.5 * (a + b))
    edges = [0.0] + roots + [half]
    width = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        if _nu_at(p, 0.5 * (a + b)) < 0.0:
            width += b - a
    return "PAAL", width


# ---------------------------------------------------------------------------
# Region tests, R1 = 0 family (plane (tau, rho))


def _check_r1zero_domain(tau: float, rho: float) -> None:
    if not (tau > 0.0 and 0.0 < rho < 1.0):
        raise OutOfElasticDomain(
            f"(tau, rho) = ({tau}, {rho}) outside tau > 0, 0 < rho < 1"
        )


def region_r1zero_taal(tau: float, rho: float) -> RegionResult:
    """TAAL sets for square-symmetric plies.

    Set A (tau < (1-rho)/2): every xi1 in [0, 1] gives a TAAL.
    Set B ((1-rho)/2 < tau < 1/2): TAAL for xi1 in [0, (1-2 tau)/rho].
    """
    _check_r1zero_domain(tau, rho)
    b_low = (1.0 - rho) / 2.0
    if abs(tau - b_low) < BOUNDARY_TOL or abs(tau - 0.5) < BOUNDARY_TOL:
        return RegionResult(label="None", xi_interval="empty", boundary=True)
    if tau < b_low:
        return RegionResult(label="A", xi_interval="all")
    if tau < 0.5:
        return RegionResult(label="B", xi_interval=(0.0, (1.0 - 2.0 * tau) / rho))
    return RegionResult(label="None", xi_interval="empty")


def region_r1zero_paal(tau: float, rho: float) -> RegionResult:
    """PAAL set C for square-symmetric plies.

    1/2 < tau < (1+rho)/2 with xi1 in [(2 tau - 1)/rho, 1].
    """
    _check_r1zero_domain(tau, rho)
    hi = (1.0 + rho) / 2.0
    if abs(tau - 0.5) < BOUNDARY_TOL or abs(tau - hi) < BOUNDARY_TOL:
        return RegionResult(label="None", xi_interval="empty", boundary=True)
    if 0.5 < tau < hi:
        return RegionResult(label="C", xi_interval=((2.0 * tau - 1.0) / rho, 1.0))
    return RegionResult(label="None", xi_interval="empty")


def r1zero_label(tau: float, rho: float) -> str:
    """Combined A/B/C/None label of a (tau, rho) point."""
    taal = region_r1zero_taal(tau, rho)
    if taal.label != "None":
        return taal.label
    return region_r1zero_paal(tau, rho).label


def nu_laminate_r1zero(tau: float, rho: float, xi1, theta) -> np.ndarray:
    """Closed-form nu12A of an R1 = 0 laminate in the normalized frame.

    nu = (2 tau - 1 + rho^2 xi1^2 - 2 tau rho xi1 cos4theta)
         / (2 tau + 1 - rho^2 xi1^2 - 2 tau rho xi1 cos4theta)
    """
    xi1 = np.asarray(xi1, dtype=float)
    c = np.cos(4.0 * np.asarray(theta, dtype=float))
    num = 2.0 * tau - 1.0 + rho**2 * xi1**2 - 2.0 * tau * rho * xi1 * c
    den = 2.0 * tau + 1.0 - rho**2 * xi1**2 - 2.0 * tau * rho * xi1 * c
    return num / den


def nu_candidates_r1zero(tau: float, rho: float) -> tuple[float, float, float]:
    """Stationary values of nu12A over (xi1, theta) in [0,1] x [0, pi/4].

    Returned in order: the xi1 = 0 (isotropic) value, the xi1 = 1 value at
    theta = 0 and the xi1 = 1 value at theta = pi/4.  The global minimum
    over the elastic domain is the second one.
    """
    v1 = (2.0 * tau - 1.0) / (2.0 * tau + 1.0)
    v2 = (2.0 * tau - 1.0 + rho**2 - 2.0 * tau * rho) / (
        2.0 * tau + 1.0 - rho**2 - 2.0 * tau * rho
    )
    v3 = (2.0 * tau - 1.0 + rho**2 + 2.0 * tau * rho) / (
        2.0 * tau + 1.0 - rho**2 + 2.0 * tau * rho
    )
    return v1, v2, v3


def min_nu_r1zero(
    tau: float, rho: float, xi1: float, samples: int = 3601
) -> tuple[float, float]:
    """Minimum nu12A of an R1 = 0 laminate and the attaining direction.

    Numeric minimum of the homogenized profile; the closed-form stationary
    candidates (:func:`nu_candidates_r1zero`) serve as cross-checks in the
    test suite.  For xi1 = 0 the profile is a constant.
    """
    _check_r1zero_domain(tau, rho)
    if not 0.0 <= xi1 <= 1.0:
        raise OutOfElasticDomain(f"xi1 = {xi1} outside [0, 1]")
    a = homogenize_point(ply_r1zero(tau, rho), LaminationPoint(xi1=xi1))
    nu_min, theta_min = _refine_minimum(a, samples)
    return nu_min, theta_min


def zone_lambda_r1zero(tau: float, rho: float, xi1) -> np.ndarray:
    """Threshold lambda(xi1): the laminate is auxetic where cos4theta > lambda."""
    xi1 = np.asarray(xi1, dtype=float)
    return (2.0 * tau - 1.0 + rho**2 * xi1**2) / (2.0 * tau * rho * xi1)


def maximize_auxetic_zone_r1zero(tau: float, rho: float) -> ZoneOptimum:
    """Widest auxetic zone reachable by choosing xi1, for a set B or C ply.

    In set B, lambda reaches -1 at xi1 = (1 - 2 tau)/rho: the zone is the
    whole quarter period (TAAL).  In set C the minimum of lambda over
    (0, 1] is sqrt(2 tau - 1)/tau at xi1 = sqrt(2 tau - 1)/rho when
    rho > sqrt(2 tau - 1); otherwise lambda decreases all the way to
    xi1 = 1 and the single ply is already optimal.
    """
    label = r1zero_label(tau, rho)
    if label == "B":
        # lambda(xi1) = -1 exactly on the TAAL admissible bound
        return ZoneOptimum(
            xi_opt=(1.0 - 2.0 * tau) / rho,
            lambda_min=-1.0,
            delta_alpha=math.pi / 2.0,
            taal=True,
            single_ply_optimal=False,
        )
    if label != "C":
        raise NotInBorC(f"(tau, rho) = ({tau}, {rho}) is in {label}, not B or C")
    s = math.sqrt(2.0 * tau - 1.0)
    if rho > s:
        xi_opt, lam, single = s / rho, s / tau, False
    else:
        xi_opt, single = 1.0, True
        lam = float(zone_lambda_r1zero(tau, rho, 1.0))
    dalpha = math.acos(min(1.0, max(-1.0, lam))) / 2.0
    return ZoneOptimum(
        xi_opt=xi_opt,
        lambda_min=lam,
        delta_alpha=dalpha,
        taal=False,
        single_ply_optimal=single,
    )


# ---------------------------------------------------------------------------
# Region tests, R0 = 0 family (plane (sigma, tau))


def _check_r0zero_domain(tau: float, sigma: float) -> None:
    if not (sigma > 0.0 and tau > 2.0 * sigma**2):
        raise OutOfElasticDomain(
            f"(tau, sigma) = ({tau}, {sigma}) outside sigma > 0, tau > 2 sigma^2"
        )


def region_r0zero(tau: float, sigma: float) -> RegionResult:
    """TAAL set T and PAAL set P for R0 = 0 plies.

    Set T (2 sigma^2 < tau < 1/2): TAAL for every xi3, the condition does
    not involve the stacking sequence.  Set P (max{1/2, 2 sigma^2} < tau
    < 1/2 + 2 sigma^2): PAAL for xi3 in [sqrt(2 tau - 1)/(2 sigma), 1].
    """
    _check_r0zero_domain(tau, sigma)
    hi = 0.5 + 2.0 * sigma**2
    if abs(tau - 0.5) < BOUNDARY_TOL or abs(tau - hi) < BOUNDARY_TOL:
        return RegionResult(label="None", xi_interval="empty", boundary=True)
    if tau < 0.5:
        return RegionResult(label="T", xi_interval="all")
    if tau < hi:
        return RegionResult(
            label="P", xi_interval=(math.sqrt(2.0 * tau - 1.0) / (2.0 * sigma), 1.0)
        )
    return RegionResult(label="None", xi_interval="empty")


def min_nu_r0zero_analytic(
    tau: float, sigma: float, xi3: float = 1.0
) -> tuple[float, float]:
    """Closed-form minimum of nu12A for an R0 = 0 laminate.

    The homogenized tensor is again R0 = 0 with effective sigma*xi3, so
    min nu = 1 - 1/sqrt(2 tau - 4 sigma^2 xi3^2) at
    theta = arccos[(1 - sqrt(2 tau - 4 sigma^2 xi3^2))/(2 sigma xi3)]/2.
    Valid only while the arccos argument lies in [-1, 1].
    """
    se = sigma * xi3
    rad = 2.0 * tau - 4.0 * se**2
    if rad <= 0.0:
        raise OutOfRegion(f"2 tau - 4 (sigma xi3)^2 = {rad:g} <= 0")
    arg = (1.0 - math.sqrt(rad)) / (2.0 * se)
    if not -1.0 <= arg <= 1.0:
        raise OutOfRegion(
            f"stationary direction undefined: arccos argument {arg:g} outside [-1, 1]"
        )
    return 1.0 - 1.0 / math.sqrt(rad), math.acos(arg) / 2.0


def min_nu_r0zero(
    tau: float, sigma: float, xi3: float, samples: int = 3601
) -> tuple[float, float]:
    """Minimum nu12A of an R0 = 0 laminate and the attaining direction.

    Numeric minimum of the homogenized profile; the analytic expression
    (:func:`min_nu_r0zero_analytic`) is the cross-check where defined.
    """
    _check_r0zero_domain(tau, sigma)
    if not 0.0 <= xi3 <= 1.0:
        raise OutOfElasticDomain(f"xi3 = {xi3} outside [0, 1]")
    if region_r0zero(tau, sigma).label == "None":
        raise OutOfRegion(
            f"(tau, sigma) = ({tau}, {sigma}) is neither in set T nor in set P"
        )
    a = homogenize_point(ply_r0zero(tau, sigma), LaminationPoint(xi1=0.0, xi3=xi3))
    return _refine_minimum(a, samples)


def auxetic_zone_r0zero(tau: float, sigma: float, xi3: float) -> float:
    """Auxetic-zone width (radians) of an R0 = 0 laminate in set P.

    Delta_alpha = pi/2 - arccos[(1 - 2 tau + 2 sigma^2 xi3^2)
    / (2 sigma^2 xi3^2)]/2, clamped to zero when xi3 is at or below the
    admissibility threshold.  Nondecreasing in xi3; the single ply
    (xi3 = 1) has the widest zone.
    """
    _check_r0zero_domain(tau, sigma)
    if not 0.0 <= xi3 <= 1.0:
        raise OutOfElasticDomain(f"xi3 = {xi3} outside [0, 1]")
    if region_r0zero(tau, sigma).label != "P":
        raise OutOfRegion(
            f"(tau, sigma) = ({tau}, {sigma}) not in set P"
        )
    if xi3 == 0.0:
        return 0.0
    psi = (1.0 - 2.0 * tau + 2.0 * (sigma * xi3) ** 2) / (2.0 * (sigma * xi3) ** 2)
    return math.pi / 2.0 - math.acos(min(1.0, max(-1.0, psi))) / 2.0


# ---------------------------------------------------------------------------
# r0 = 0 (compliance) family


def require_r0compliance(p: PolarStiffness, tol: float = 1e-3) -> tuple[float, float]:
    """Validate the compliance-isotropy identities and return (tau, rho).

    The family requires R0*T1 = R1^2 (within ``tol`` relative) together
    with Phi0 = Phi1 mod pi/2 (ordinary orthotropy with K = 0).
    """
    lhs, rhs = p.r0 * p.t1, p.r1**2
    scale = max(abs(lhs), abs(rhs), 1e-300)
    if abs(lhs - rhs) > tol * scale:
        raise NotR0Compliant(
            f"R0*T1 = {lhs:g} differs from R1^2 = {rhs:g} beyond {tol:g} relative"
        )
    dk = 4.0 * (p.phi0 - p.phi1) / math.pi
    if abs(dk - round(dk)) > 1e-6 or round(dk) % 2 != 0:
        raise NotR0Compliant(
            f"Phi0 - Phi1 = {p.phi0 - p.phi1:g} rad is not a multiple of pi/2 (K must be 0)"
        )
    return p.t1 / p.t0, p.r0 / p.t0


def r0_auxetic_ply(tau: float, rho: float) -> bool:
    """Auxeticity of a compliance-r0 = 0 ply: tau < (1 + rho)/2.

    The condition is isotropic (t0 < 2 t1 in compliance): such plies are
    either totally auxetic or totally non-auxetic, never partially.
    """
    if not (tau > 0.0 and 0.0 < rho < 1.0):
        raise OutOfElasticDomain(
            f"(tau, rho) = ({tau}, {rho}) outside tau > 0, 0 < rho < 1"
        )
    return tau < (1.0 + rho) / 2.0


def r0_laminate_design(tau: float, rho: float) -> tuple[float, float]:
    """Admissible xi3 interval for a totally auxetic r0-preserving laminate.

    Pairing each xi3 with xi1 = xi3^2 keeps the laminate compliance-r0
    orthotropic; the laminate is then totally auxetic for
    sqrt((2 tau - 1)/rho) < xi3 < 1, the lower bound collapsing to 0 when
    tau < 1/2 (auxetic for every xi3 on the parabola).
    """
    if not r0_auxetic_ply(tau, rho):
        raise NotAuxeticPly(
            f"(tau, rho) = ({tau}, {rho}) fails tau < (1 + rho)/2: ply not auxetic"
        )
    lo = math.sqrt((2.0 * tau - 1.0) / rho) if tau >= 0.5 else 0.0
    return lo, 1.0


# ---------------------------------------------------------------------------
# Equivalent bound formulations


def _canonical_qm(bundle: PlyBundle) -> tuple[float, float, float, float, TechnicalModuli]:
    """Cartesian components and moduli in the E1 >= E2 frame."""
    q, m = bundle.cartesian, bundle.moduli
    if bundle.dimensionless.frame_flipped:
        return q.q22, q.q12, q.q11, q.q66, TechnicalModuli(
            e1=m.e2, e2=m.e1, nu12=m.nu21, g12=m.g12
        )
    return q.q11, q.q12, q.q22, q.q66, m


def equivalent_bounds_r1zero(bundle: PlyBundle) -> BoundsCheck:
    """Evaluate every equivalent A/B/C formulation for an R1 = 0 ply.

    The dimensionless polar (tau, rho) predicates are the reference; the
    Cartesian, (alpha, beta), (alpha, gamma), (alpha, Gamma) and
    technical-moduli forms are evaluated exactly as stated, with the
    unknown kept inside the absolute values.
    """
    d = bundle.dimensionless
    ref = r1zero_label(d.tau, d.rho)
    q11, q12, _, q66, m = _canonical_qm(bundle)
    a, b, g = d.alpha, d.beta, d.gamma

    u = abs(q11 - q12 - q66)
    cart = _abc(q66 > q11 + 3 * q12 + u,
                q11 + 3 * q12 < q66 < q11 + 3 * q12 + u,
                q66 < q11 + 3 * q12 < q66 + u)
    u = abs(1.0 - a - b)
    ab = _abc(b > 1 + 3 * a + u,
              1 + 3 * a < b < 1 + 3 * a + u,
              b < 1 + 3 * a < b + u)
    t = (1 + 3 * a) / (2 * (1 - a**2))
    u = abs(1.0 / (2 * (1 + a)) - g)
    ag = _abc(g > t + u, t < g < t + u, g < t < g + u)
    t = (1 + 3 * m.nu12) * m.e1 / (2 * (1 - m.nu12**2))
    u = abs(m.e1 / (2 * (1 + m.nu12)) - m.g12)
    mod = _abc(m.g12 > t + u, t < m.g12 < t + u, m.g12 < t < m.g12 + u)
    labels = {"polar": ref, "cartesian": cart, "alpha_beta": ab,
              "alpha_gamma": ag, "moduli": mod}
    if d.big_gamma is not None:
        bg = d.big_gamma
        t = (1 + 3 * a) / (1 - a)
        u = abs(1.0 - bg)
        labels["alpha_big_gamma"] = _abc(bg > t + u, t < bg < t + u, bg < t < bg + u)
    return BoundsCheck(
        reference=ref,
        labels=labels,
        unanimous=all(v == ref for v in labels.values()),
    )


def _abc(is_a: bool, is_b: bool, is_c: bool) -> str:
    if is_a:
        return "A"
    if is_b:
        return "B"
    if is_c:
        return "C"
    return "None"


def equivalent_bounds_r0zero(bundle: PlyBundle) -> BoundsCheck:
    """Evaluate every equivalent T/P formulation for an R0 = 0 ply.

    Reference predicate: the (sigma, tau) bounds.  The long Cartesian
    polynomials, the simplified Q forms, (alpha, beta), (alpha, epsilon)
    and the technical-moduli forms are checked against it.
    """
    d = bundle.dimensionless
    ref = region_r0zero(d.tau, d.sigma).label
    q11, q12, q22, q66, m = _canonical_qm(bundle)
    a, b, eps = d.alpha, d.beta, d.epsilon
    e1, e2, nu = m.e1, m.e2, m.nu12

    long_t1 = (
        q11**2 - 6 * q11 * q22 + q22**2 + 4 * q12**2
        - 2 * q66 * (q11 + 2 * q12 + q22)
    )
    long_t2 = q11 + 6 * q12 + q22 - 2 * q66
    long_p2 = (
        q11**2 - 6 * q11 * q22 + q22**2 + 4 * q12 * (q12 - q66)
        - 2 * q66 * (q11 + q22)
    )
    long_p3 = (
        3 * q11**2 + 12 * q12**2 + 3 * q22**2 + 4 * q66**2
        - 2 * q11 * (2 * q12 + 5 * q22) - 4 * q12 * (q22 + 4 * q66)
    )
    cart = _tp(long_t1 < 0 and long_t2 < 0,
               long_t2 > 0 and long_p2 < 0 and long_p3 > 0)
    simple = _tp(
        q12 < 0 and 2 * q22 * q66 > (q12 - q22) ** 2,
        q12 > 0 and 2 * q22 * q66 > (q12 - q22) ** 2
        and (q12 - q22) ** 2 + (q66 - q22) ** 2 > q22**2,
    )
    ab = _tp(
        a < 0 and b > 0.5 * (a - 1) ** 2,
        a > 0 and b > 0.5 * (a - 1) ** 2 and (a - 1) ** 2 + (b - 1) ** 2 > 1,
    )
    ae = _tp(
        a < 0 and eps > a**2,
        a > 0 and eps > a**2 and 8 * a**2 + (eps - 1) ** 2 - 4 * a * (1 + eps) > 0,
    )
    mod = _tp(
        nu < 0 and e1 > nu**2 * e2,
        nu > 0 and e1 > nu**2 * e2
        and (e1 - e2) ** 2 - 4 * nu * e2 * (e1 + e2) + 8 * nu**2 * e2**2 > 0,
    )
    labels = {"polar": ref, "cartesian": cart, "cartesian_simple": simple,
              "alpha_beta": ab, "alpha_epsilon": ae, "moduli": mod}
    return BoundsCheck(
        reference=ref,
        labels=labels,
        unanimous=all(v == ref for v in labels.values()),
    )


def _tp(is_t: bool, is_p: bool) -> str:
    if is_t:
        return "T"
    if is_p:
        return "P"
    return "None"
