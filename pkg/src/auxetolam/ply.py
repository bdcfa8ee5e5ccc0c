"""Technical moduli, dimensionless ply parameters and family constructors.

The three special-orthotropy families handled by the region mathematics
are identified by the algebraic condition they satisfy:

* ``r1zero``  - square-symmetric plies, R1 = 0 (balanced fabrics);
* ``r0zero``  - plies with R0 = 0 (e.g. 45-degree cross-plies);
* ``r0compliance`` - plies with compliance r0 = 0 (paper-like materials,
  R0*T1 = R1^2 with Phi0 = Phi1).

Each family has a constructor that synthesizes a consistent ply from its
dimensionless pair plus a scale T0, so the region mathematics can be
exercised directly on (tau, rho) or (tau, sigma) sweeps without material
files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    NotInOrthotropyFrame,
    OutOfElasticDomain,
    ReciprocityViolation,
)
from .polar import (
    DEFAULT_TOL,
    CartesianStiffness,
    PolarStiffness,
    cartesian_to_polar,
    polar_to_cartesian,
)

FAMILIES = ("r1zero", "r0zero", "r0compliance")


@dataclass(frozen=True)
class TechnicalModuli:
    """Engineering constants of an orthotropic ply.

    e1, e2 and g12 are positive moduli (consistent stress units), nu12 is
    the major Poisson's ratio.  The reciprocity condition requires
    1 - nu12*nu21 > 0 with nu21 = nu12*e2/e1.
    """

    e1: float
    e2: float
    nu12: float
    g12: float

    @property
    def nu21(self) -> float:
        return self.nu12 * self.e2 / self.e1


@dataclass(frozen=True)
class DimensionlessPly:
    """All dimensionless ply parameters used by the region tests.

    tau = T1/T0, rho = R0/T0 and sigma = R1/T0 come from the polar
    invariants; alpha = q12/q22, beta = q66/q22, gamma = G12/E2 and
    epsilon = E1/E2 from the Cartesian/technical description, evaluated in
    the frame with E1 >= E2 (``frame_flipped`` records whether the input
    had to be rotated by pi/2 to satisfy this).  big_gamma = G12/G_iso
    with G_iso = E1/(2(1+nu12)) is defined only for R1 = 0 plies and is
    ``None`` otherwise; undefined values are never silently zero.
    """

    tau: float
    rho: float
    sigma: float
    alpha: float
    beta: float
    gamma: float
    epsilon: float
    big_gamma: float | None
    frame_flipped: bool = False


def moduli_to_stiffness(m: TechnicalModuli) -> CartesianStiffness:
    """Kelvin stiffness components of an orthotropic ply.

    q11 = E1/(1 - nu12*nu21), q12 = nu12*E2/(1 - nu12*nu21),
    q22 = E2/(1 - nu12*nu21), q66 = 2*G12 (Kelvin convention), q16=q26=0.

    Raises
    ------
    ReciprocityViolation
        If 1 - nu12*nu21 <= 0.
    """
    if m.e1 <= 0.0 or m.e2 <= 0.0 or m.g12 <= 0.0:
        raise ReciprocityViolation(
            f"moduli must be positive: e1={m.e1}, e2={m.e2}, g12={m.g12}"
        )
    den = 1.0 - m.nu12 * m.nu21
    if den <= 0.0:
        raise ReciprocityViolation(
            f"1 - nu12*nu21 = {den:g} <= 0 (nu12={m.nu12}, nu21={m.nu21:g})"
        )
    return CartesianStiffness(
        q11=m.e1 / den,
        q12=m.nu12 * m.e2 / den,
        q22=m.e2 / den,
        q66=2.0 * m.g12,
    )


def stiffness_to_moduli(q: CartesianStiffness, tol: float = DEFAULT_TOL) -> TechnicalModuli:
    """Engineering constants from orthotropic-frame Kelvin components.

    Inverse of :func:`moduli_to_stiffness`; roundtrips to 1e-12 relative.
    """
    scale = max(abs(q.q11), abs(q.q22), abs(q.q66))
    if abs(q.q16) + abs(q.q26) > tol * scale:
        raise NotInOrthotropyFrame(f"q16={q.q16}, q26={q.q26} not negligible")
    det = q.q11 * q.q22 - q.q12**2
    return TechnicalModuli(
        e1=det / q.q22,
        e2=det / q.q11,
        nu12=q.q12 / q.q22,
        g12=q.q66 / 2.0,
    )


def dimensionless(
    p: PolarStiffness,
    q: CartesianStiffness,
    m: TechnicalModuli,
    tol: float = DEFAULT_TOL,
) -> DimensionlessPly:
    """Dimensionless parameters of a consistent (polar, Cartesian, moduli) triple.

    The Cartesian/moduli parameters are reported in the frame with
    E1 >= E2; if the input is the other way round the ply is silently
    rotated by pi/2 (components swapped) and ``frame_flipped`` is set.
    """
    flipped = m.e1 < m.e2
    if flipped:
        q = CartesianStiffness(q11=q.q22, q12=q.q12, q22=q.q11, q66=q.q66)
        m = TechnicalModuli(e1=m.e2, e2=m.e1, nu12=m.nu21, g12=m.g12)
    big_gamma = None
    if p.r1 < tol * p.t0:
        g_iso = m.e1 / (2.0 * (1.0 + m.nu12))
        big_gamma = m.g12 / g_iso
    return DimensionlessPly(
        tau=p.t1 / p.t0,
        rho=p.r0 / p.t0,
        sigma=p.r1 / p.t0,
        alpha=q.q12 / q.q22,
        beta=q.q66 / q.q22,
        gamma=m.g12 / m.e2,
        epsilon=m.e1 / m.e2,
        big_gamma=big_gamma,
        frame_flipped=flipped,
    )


# ---------------------------------------------------------------------------
# Family constructors (dimensionless pair + scale -> consistent ply)


def ply_r1zero(tau: float, rho: float, t0: float = 1.0) -> PolarStiffness:
    """Square-symmetric ply (R1 = 0) from tau = T1/T0 and rho = R0/T0.

    Elastic bounds: tau > 0 and 0 < rho < 1.
    """
    if not (tau > 0.0 and 0.0 < rho < 1.0):
        raise OutOfElasticDomain(
            f"r1zero family requires tau > 0 and 0 < rho < 1, got ({tau}, {rho})"
        )
    return PolarStiffness(t0=t0, t1=tau * t0, r0=rho * t0, r1=0.0)


def ply_r0zero(tau: float, sigma: float, t0: float = 1.0) -> PolarStiffness:
    """R0 = 0 ply from tau = T1/T0 and sigma = R1/T0.

    Elastic bounds: sigma > 0 and tau > 2*sigma^2.
    """
    if not (sigma > 0.0 and tau > 2.0 * sigma**2):
        raise OutOfElasticDomain(
            f"r0zero family requires sigma > 0 and tau > 2 sigma^2, got ({tau}, {sigma})"
        )
    return PolarStiffness(t0=t0, t1=tau * t0, r0=0.0, r1=sigma * t0)


def ply_r0compliance(tau: float, rho: float, t0: float = 1.0) -> PolarStiffness:
    """Compliance-r0 = 0 ply from tau and rho.

    The family identity fixes R1 = sqrt(R0*T1), with Phi0 = Phi1 (K = 0),
    so the whole ply follows from (tau, rho) and the scale.  Elastic
    bounds: tau > 0 and 0 < rho < 1.
    """
    if not (tau > 0.0 and 0.0 < rho < 1.0):
        raise OutOfElasticDomain(
            f"r0compliance family requires tau > 0 and 0 < rho < 1, got ({tau}, {rho})"
        )
    return PolarStiffness(
        t0=t0, t1=tau * t0, r0=rho * t0, r1=math.sqrt(tau * rho) * t0
    )


# ---------------------------------------------------------------------------
# Bundled view of one material


@dataclass(frozen=True)
class PlyBundle:
    """Consistent polar + Cartesian + technical + dimensionless description."""

    polar: PolarStiffness
    cartesian: CartesianStiffness
    moduli: TechnicalModuli
    dimensionless: DimensionlessPly

    @classmethod
    def from_polar(cls, p: PolarStiffness, tol: float = DEFAULT_TOL) -> "PlyBundle":
        q = polar_to_cartesian(p)
        m = stiffness_to_moduli(q, tol=tol)
        return cls(polar=p, cartesian=q, moduli=m, dimensionless=dimensionless(p, q, m, tol))

    @classmethod
    def from_cartesian(cls, q: CartesianStiffness, tol: float = DEFAULT_TOL) -> "PlyBundle":
        p = cartesian_to_polar(q, tol=tol)
        m = stiffness_to_moduli(q, tol=tol)
        return cls(polar=p, cartesian=q, moduli=m, dimensionless=dimensionless(p, q, m, tol))

    @classmethod
    def from_moduli(cls, m: TechnicalModuli, tol: float = DEFAULT_TOL) -> "PlyBundle":
        q = moduli_to_stiffness(m)
        p = cartesian_to_polar(q, tol=tol)
        return cls(polar=p, cartesian=q, moduli=m, dimensionless=dimensionless(p, q, m, tol))
