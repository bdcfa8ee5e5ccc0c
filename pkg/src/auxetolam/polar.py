"""Polar representation of plane elasticity tensors in Kelvin notation.

A plane stiffness tensor is described either by its six Kelvin components
(q11, q12, q16, q22, q26, q66, with q66 = 2*G12) or by the invariant
moduli (T0, T1, R0, R1) and the two polar angles (Phi0, Phi1).  The polar
decomposition splits the tensor into an isotropic part (T0, T1), a
harmonic varying with 4*theta (R0, Phi0) and a harmonic varying with
2*theta (R1, Phi1).  All angles are radians; conversion to degrees happens
only at the I/O boundary.

The Kelvin components in a frame rotated by ``theta`` are::

    q11(theta) =  T0 + 2 T1 + R0 cos4(Phi0-theta) + 4 R1 cos2(Phi1-theta)
    q12(theta) = -T0 + 2 T1 - R0 cos4(Phi0-theta)
    q16(theta) =  sqrt(2) [ R0 sin4(Phi0-theta) + 2 R1 sin2(Phi1-theta)]
    q22(theta) =  T0 + 2 T1 + R0 cos4(Phi0-theta) - 4 R1 cos2(Phi1-theta)
    q26(theta) =  sqrt(2) [-R0 sin4(Phi0-theta) + 2 R1 sin2(Phi1-theta)]
    q66(theta) =  2 [T0 - R0 cos4(Phi0-theta)]

which is equivalent to the orthogonal congruence rotation of the Kelvin
matrix (checked by the test suite against a brute-force tensor rotation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    NotInOrthotropyFrame,
    NotPositiveDefinite,
    SingularTensor,
)

SQRT2 = math.sqrt(2.0)

#: Default relative tolerance for symmetry detection.  Inputs are usually
#: exactly constructed materials, so the tolerance can be tight.
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class CartesianStiffness:
    """Kelvin-notation components of a plane (reduced) stiffness tensor.

    The shear entry follows the Kelvin convention, q66 = 2*G12.  For a ply
    given in its orthotropy frame q16 = q26 = 0.
    """

    q11: float
    q12: float
    q22: float
    q66: float
    q16: float = 0.0
    q26: float = 0.0

    def matrix(self) -> np.ndarray:
        """Assemble the symmetric 3x3 Kelvin matrix."""
        return np.array(
            [
                [self.q11, self.q12, self.q16],
                [self.q12, self.q22, self.q26],
                [self.q16, self.q26, self.q66],
            ]
        )

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "CartesianStiffness":
        return cls(
            q11=float(m[0, 0]),
            q12=float(m[0, 1]),
            q22=float(m[1, 1]),
            q66=float(m[2, 2]),
            q16=float(m[0, 2]),
            q26=float(m[1, 2]),
        )

    def is_positive_definite(self) -> bool:
        return bool(np.all(np.linalg.eigvalsh(self.matrix()) > 0.0))


@dataclass(frozen=True)
class PolarStiffness:
    """Polar invariants and angles of a plane stiffness tensor.

    t0, t1 are the isotropic moduli, r0 and r1 the anisotropic harmonic
    amplitudes (all non-negative, stress units), phi0 and phi1 the polar
    angles in radians.  Under a frame rotation by ``theta`` the moduli are
    unchanged and both angles shift by ``-theta``... the angles themselves
    are frame choices; their difference is the fifth invariant.
    """

    t0: float
    t1: float
    r0: float
    r1: float
    phi0: float = 0.0
    phi1: float = 0.0

    def __post_init__(self) -> None:
        if not (self.t0 > 0.0 and self.t1 > 0.0):
            raise NotPositiveDefinite(
                f"isotropic moduli must be positive, got t0={self.t0}, t1={self.t1}"
            )
        if self.r0 < 0.0 or self.r1 < 0.0:
            raise NotPositiveDefinite(
                f"anisotropic moduli must be non-negative, got r0={self.r0}, r1={self.r1}"
            )


@dataclass(frozen=True)
class PolarCompliance:
    """Polar parameters of the compliance tensor (1/stress units).

    ``source`` tags how the parameters were obtained:

    * ``"analytic-partial"``: t0c, t1c, r0c, phi0c from the closed-form
      relations; the 2*theta harmonic (r1c, phi1c) is left unset because
      no closed form is used for it.
    * ``"numeric-full"``: additionally r1c, phi1c from a least-squares
      harmonic fit of sampled s11(theta).
    """

    t0c: float
    t1c: float
    r0c: float
    phi0c: float
    r1c: float | None = None
    phi1c: float | None = None
    source: str = "analytic-partial"


class ComplianceComponents(NamedTuple):
    """Kelvin compliance components at one frame angle."""

    s11: float
    s12: float
    s66: float
    s16: float
    s26: float
    s22: float


@dataclass(frozen=True)
class SymmetryClass:
    """Detected elastic symmetry.

    ``conditions`` lists every algebraic condition satisfied within
    tolerance, drawn from {"R0_zero", "R1_zero", "r0_zero", "K0", "K1",
    "isotropic"}.  ``kind`` names the most special one; the naming follows
    the algebraic condition (e.g. "R1-orthotropic" means R1 = 0, i.e.
    square symmetry).  ``k`` is the ordinary-orthotropy integer, present
    only when ordinary orthotropy is detected.
    """

    kind: str
    k: int | None
    conditions: tuple[str, ...]


# ---------------------------------------------------------------------------
# Kelvin <-> polar conversions


def kelvin_components(p: PolarStiffness, theta) -> np.ndarray:
    """Kelvin components of ``p`` in the frame rotated by ``theta``.

    ``theta`` may be a scalar or an array; the result has shape
    ``theta.shape + (6,)`` with components ordered
    (q11, q12, q16, q22, q26, q66).
    """
    theta = np.asarray(theta, dtype=float)
    c4 = np.cos(4.0 * (p.phi0 - theta))
    s4 = np.sin(4.0 * (p.phi0 - theta))
    c2 = np.cos(2.0 * (p.phi1 - theta))
    s2 = np.sin(2.0 * (p.phi1 - theta))
    iso = p.t0 + 2.0 * p.t1
    return np.stack(
        [
            iso + p.r0 * c4 + 4.0 * p.r1 * c2,
            -p.t0 + 2.0 * p.t1 - p.r0 * c4,
            SQRT2 * (p.r0 * s4 + 2.0 * p.r1 * s2),
            iso + p.r0 * c4 - 4.0 * p.r1 * c2,
            SQRT2 * (-p.r0 * s4 + 2.0 * p.r1 * s2),
            2.0 * (p.t0 - p.r0 * c4),
        ],
        axis=-1,
    )


def kelvin_matrices(p: PolarStiffness, thetas) -> np.ndarray:
    """Stacked 3x3 Kelvin matrices of ``p`` at the given frame angles."""
    q = kelvin_components(p, thetas)
    m = np.empty(q.shape[:-1] + (3, 3))
    m[..., 0, 0] = q[..., 0]
    m[..., 0, 1] = m[..., 1, 0] = q[..., 1]
    m[..., 0, 2] = m[..., 2, 0] = q[..., 2]
    m[..., 1, 1] = q[..., 3]
    m[..., 1, 2] = m[..., 2, 1] = q[..., 4]
    m[..., 2, 2] = q[..., 5]
    return m


def polar_to_cartesian(p: PolarStiffness, theta: float = 0.0) -> CartesianStiffness:
    """Kelvin components of ``p`` in the frame at angle ``theta``."""
    q11, q12, q16, q22, q26, q66 = kelvin_components(p, float(theta))
    return CartesianStiffness(
        q11=float(q11), q12=float(q12), q22=float(q22),
        q66=float(q66), q16=float(q16), q26=float(q26),
    )


def cartesian_to_polar(
    q: CartesianStiffness, tol: float = DEFAULT_TOL
) -> PolarStiffness:
    """Extract the polar parameters of a ply given in its orthotropy frame.

    Parameters
    ----------
    q : CartesianStiffness
        Kelvin components with q16 = q26 = 0 (within ``tol`` relative to
        the tensor scale).
    tol : float
        Relative tolerance for the orthotropy-frame check.

    Returns
    -------
    PolarStiffness
        Invariants with Phi0 in {0, pi/4} and Phi1 in {0, pi/2} selected
        by the sign of the corresponding component combination; a zero
        combination resolves to Phi = 0.

    Raises
    ------
    NotInOrthotropyFrame
        If the shear-coupling components are not negligible.
    NotPositiveDefinite
        If the Kelvin matrix is not positive definite.
    """
    scale = max(abs(q.q11), abs(q.q22), abs(q.q66), 1e-300)
    if abs(q.q16) + abs(q.q26) > tol * scale:
        raise NotInOrthotropyFrame(
            f"q16={q.q16}, q26={q.q26} exceed tolerance {tol:g} relative to {scale:g}"
        )
    if not q.is_positive_definite():
        raise NotPositiveDefinite(
            "Kelvin matrix has a non-positive eigenvalue: "
            f"{np.linalg.eigvalsh(q.matrix())}"
        )
    t0 = (q.q11 - 2.0 * q.q12 + 2.0 * q.q66 + q.q22) / 8.0
    t1 = (q.q11 + 2.0 * q.q12 + q.q22) / 8.0
    c0 = q.q11 - 2.0 * q.q12 - 2.0 * q.q66 + q.q22
    c1 = q.q11 - q.q22
    phi0 = 0.0 if c0 >= 0.0 else math.pi / 4.0
    phi1 = 0.0 if c1 >= 0.0 else math.pi / 2.0
    return PolarStiffness(
        t0=t0, t1=t1, r0=abs(c0) / 8.0, r1=abs(c1) / 8.0, phi0=phi0, phi1=phi1
    )


def polar_from_rotation_samples(matrices: np.ndarray, thetas: np.ndarray) -> PolarStiffness:
    """Recover polar parameters from Kelvin matrices sampled over angles.

    Least-squares fit of the isotropic, 2*theta and 4*theta harmonics in
    q66 and q11 -/+ q22; exact for any plane elasticity tensor once at
    least 8 distinct angles over a half period are given.  Works for
    tensors in an arbitrary frame (general Phi0, Phi1), unlike
    :func:`cartesian_to_polar`.
    """
    thetas = np.asarray(thetas, dtype=float)
    q11 = matrices[..., 0, 0]
    q22 = matrices[..., 1, 1]
    q66 = matrices[..., 2, 2]
    ones = np.ones_like(thetas)
    basis4 = np.stack([ones, np.cos(4.0 * thetas), np.sin(4.0 * thetas)], axis=-1)
    basis2 = np.stack([np.cos(2.0 * thetas), np.sin(2.0 * thetas)], axis=-1)
    # q66 = 2 t0 - 2 r0 cos4phi0 cos4theta - 2 r0 sin4phi0 sin4theta
    c = np.linalg.lstsq(basis4, q66, rcond=None)[0]
    t0 = float(c[0]) / 2.0
    z4 = complex(-c[1], -c[2]) / 2.0  # r0 e^{4i phi0}
    # q11 + q22 = 2 t0 + 4 t1 + 2 r0 cos4(phi0 - theta)
    e = np.linalg.lstsq(basis4, q11 + q22, rcond=None)[0]
    t1 = (float(e[0]) - 2.0 * t0) / 4.0
    # q11 - q22 = 8 r1 cos2phi1 cos2theta + 8 r1 sin2phi1 sin2theta
    d = np.linalg.lstsq(basis2, q11 - q22, rcond=None)[0]
    z2 = complex(d[0], d[1]) / 8.0  # r1 e^{2i phi1}
    return PolarStiffness(
        t0=t0,
        t1=t1,
        r0=abs(z4),
        r1=abs(z2),
        phi0=np.angle(z4) / 4.0,
        phi1=np.angle(z2) / 2.0,
    )


# ---------------------------------------------------------------------------
# Invariant function and compliance


def polar_delta(p: PolarStiffness) -> float:
    """Invariant Delta = 4 T1 (T0^2 - R0^2) - 8 R1^2 [T0 - R0 cos4(Phi0-Phi1)].

    Positive for any physically admissible tensor.  The determinant of the
    Kelvin matrix equals 4*Delta (constant calibrated once, asserted by the
    test suite); callers needing a positivity check use this function.
    """
    return 4.0 * p.t1 * (p.t0**2 - p.r0**2) - 8.0 * p.r1**2 * (
        p.t0 - p.r0 * math.cos(4.0 * (p.phi0 - p.phi1))
    )


def compliance_polar_partial(p: PolarStiffness) -> PolarCompliance:
    """Closed-form compliance polar parameters t0c, t1c, r0c, phi0c.

    The 2*theta compliance harmonic has no closed form here; use
    :func:`compliance_polar_full` when r1c, phi1c are needed.

    Note: the closed-form relations require twice the value returned by
    :func:`polar_delta` as normalizer; with D = 2*Delta they reproduce the
    numeric inverse of the Kelvin matrix exactly (cross-checked in tests).

    Raises
    ------
    SingularTensor
        If Delta <= 0.
    """
    delta = polar_delta(p)
    if delta <= 0.0:
        raise SingularTensor(f"Delta = {delta:g} <= 0")
    d = 2.0 * delta
    t0c = 2.0 * (p.t0 * p.t1 - p.r1**2) / d
    t1c = (p.t0**2 - p.r0**2) / (2.0 * d)
    z = (2.0 / d) * (
        p.r1**2 * np.exp(4j * p.phi1) - p.t1 * p.r0 * np.exp(4j * p.phi0)
    )
    r0c = abs(z)
    phi0c = float(np.angle(z)) / 4.0 if r0c > 0.0 else 0.0
    return PolarCompliance(t0c=t0c, t1c=t1c, r0c=r0c, phi0c=phi0c)


def compliance_polar_full(p: PolarStiffness, n_angles: int = 8) -> PolarCompliance:
    """Full compliance polar parameters, r1c/phi1c by harmonic fit.

    s11(theta) = t0c + 2 t1c + r0c cos4(phi0c-theta) + 4 r1c cos2(phi1c-theta)
    is sampled at ``n_angles`` equally spaced angles (exact for the
    3-harmonic signal when n_angles >= 8) and the 2*theta term is fitted
    by projection.
    """
    part = compliance_polar_partial(p)
    thetas = np.arange(n_angles) * math.pi / n_angles
    s = compliance_components(p, thetas)
    resid = s[..., 0] - (
        part.t0c
        + 2.0 * part.t1c
        + part.r0c * np.cos(4.0 * (part.phi0c - thetas))
    )
    a = 2.0 * np.mean(resid * np.cos(2.0 * thetas))
    b = 2.0 * np.mean(resid * np.sin(2.0 * thetas))
    z = complex(a / 4.0, b / 4.0)  # r1c e^{2i phi1c}
    return PolarCompliance(
        t0c=part.t0c,
        t1c=part.t1c,
        r0c=part.r0c,
        phi0c=part.phi0c,
        r1c=abs(z),
        phi1c=np.angle(z) / 2.0 if abs(z) > 0.0 else 0.0,
        source="numeric-full",
    )


def compliance_components(p: PolarStiffness, thetas) -> np.ndarray:
    """Kelvin compliance components by numeric inversion, vectorized.

    Returns ``thetas.shape + (6,)`` arrays ordered like
    :func:`kelvin_components` (s11, s12, s16, s22, s26, s66).
    """
    if polar_delta(p) <= 0.0:
        raise SingularTensor(f"Delta = {polar_delta(p):g} <= 0")
    m = kelvin_matrices(p, thetas)
    s = np.linalg.inv(m)
    return np.stack(
        [s[..., 0, 0], s[..., 0, 1], s[..., 0, 2],
         s[..., 1, 1], s[..., 1, 2], s[..., 2, 2]],
        axis=-1,
    )


def compliance_numeric(p: PolarStiffness, theta: float = 0.0) -> ComplianceComponents:
    """Compliance components at one frame angle (3x3 Kelvin inversion)."""
    s = compliance_components(p, float(theta))
    return ComplianceComponents(
        s11=float(s[0]), s12=float(s[1]), s66=float(s[5]),
        s16=float(s[2]), s26=float(s[4]), s22=float(s[3]),
    )


# ---------------------------------------------------------------------------
# Symmetry classification


def classify_symmetry(p: PolarStiffness, tol: float = DEFAULT_TOL) -> SymmetryClass:
    """Detect the elastic symmetry of ``p``.

    Tests, on invariants normalized by T0: R0 < tol -> "R0_zero";
    R1 < tol -> "R1_zero"; compliance r0c < tol*t0c -> "r0_zero";
    |sin4(Phi0-Phi1)| < tol (with both R moduli significant) -> ordinary
    orthotropy with K = round(4(Phi0-Phi1)/pi) mod 2.  Both R moduli below
    tolerance means isotropy.
    """
    conditions: list[str] = []
    r0_zero = p.r0 < tol * p.t0
    r1_zero = p.r1 < tol * p.t0
    if r0_zero:
        conditions.append("R0_zero")
    if r1_zero:
        conditions.append("R1_zero")
    comp = compliance_polar_partial(p)
    r0c_zero = comp.r0c < tol * comp.t0c
    if r0c_zero:
        conditions.append("r0_zero")
    k: int | None = None
    if not r0_zero and not r1_zero:
        if abs(math.sin(4.0 * (p.phi0 - p.phi1))) < tol:
            k = round(4.0 * (p.phi0 - p.phi1) / math.pi) % 2
            conditions.append(f"K{k}")
    if r0_zero and r1_zero:
        kind = "isotropic"
    elif r1_zero:
        kind = "R1-orthotropic"
    elif r0_zero:
        kind = "R0-orthotropic"
    elif r0c_zero:
        kind = "r0-orthotropic"
    elif k is not None:
        kind = "ordinary-orthotropic"
    else:
        kind = "generic-anisotropic"
    return SymmetryClass(kind=kind, k=k, conditions=tuple(conditions))
