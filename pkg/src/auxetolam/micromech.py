"""Constituent-level homogenization and existence-domain scans.

Fiber/matrix properties enter only through the dimensionless ratios
E = E_f/E_m and nu = nu_f/nu_m together with the fiber volume fraction
and the matrix Poisson's ratio; all ply-level outputs are normalized by
E_m (the "hat" quantities).  Two constructions are provided:

* balanced fabric (equal fiber counts warp/weft) -> R1 = 0 ply;
* equal fiber volumes along two directions 45 degrees apart, homogenized
  through the laminate machinery -> R0 = 0 ply.

The existence scans rasterize the (E, nu, v_f) box and mark the cells
whose synthesized ply lands in the requested auxeticity region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import EmptyGrid, OutOfElasticDomain
from .laminate import StackingSequence, homogenize
from .ply import TechnicalModuli, moduli_to_stiffness
from .polar import PolarStiffness, cartesian_to_polar

SCAN_FAMILIES = ("r1zero-taal", "r1zero-paal", "r0zero-taal", "r0zero-paal")


@dataclass(frozen=True)
class Constituents:
    """Dimensionless fiber/matrix description.

    e_ratio = E_f/E_m > 1 (fibers reinforce the matrix), nu_ratio =
    nu_f/nu_m constrained to (-1/nu_m, 1/(2 nu_m)) so the fiber Poisson's
    ratio stays in (-1, 1/2), v_f the fiber volume fraction.
    """

    e_ratio: float
    nu_ratio: float
    v_f: float
    nu_m: float = 0.25

    def __post_init__(self) -> None:
        # E = 1 (identical phases) is allowed as a degenerate reference case
        if not self.e_ratio >= 1.0:
            raise OutOfElasticDomain(f"E_f/E_m = {self.e_ratio} must be at least 1")
        if not 0.0 < self.nu_m < 0.5:
            raise OutOfElasticDomain(f"nu_m = {self.nu_m} outside (0, 0.5)")
        if not -1.0 / self.nu_m < self.nu_ratio < 1.0 / (2.0 * self.nu_m):
            raise OutOfElasticDomain(
                f"nu_f/nu_m = {self.nu_ratio} outside (-1/nu_m, 1/(2 nu_m))"
            )
        if not 0.0 <= self.v_f <= 1.0:
            raise OutOfElasticDomain(f"v_f = {self.v_f} outside [0, 1]")


@dataclass(frozen=True)
class UDPlyHat:
    """Unidirectional-ply properties normalized by the matrix modulus."""

    e_l_hat: float
    e_t_hat: float
    nu_lt_hat: float
    g_lt_hat: float


def rule_of_mixtures(c: Constituents) -> UDPlyHat:
    """Dimensionless rule-of-mixtures UD ply.

    E_l-hat = 1 + v_f (E - 1);  E_t-hat = E/(v_f + (1 - v_f) E);
    nu_lt-hat = 1 + v_f (nu - 1);
    G_lt-hat = E / (2 [v_f (1 + nu nu_m) + (1 - v_f)(1 + nu_m) E]).
    """
    e, nu, vf = c.e_ratio, c.nu_ratio, c.v_f
    return UDPlyHat(
        e_l_hat=1.0 + vf * (e - 1.0),
        e_t_hat=e / (vf + (1.0 - vf) * e),
        nu_lt_hat=1.0 + vf * (nu - 1.0),
        g_lt_hat=e / (2.0 * (vf * (1.0 + nu * c.nu_m) + (1.0 - vf) * (1.0 + c.nu_m) * e)),
    )


def ud_moduli(c: Constituents) -> TechnicalModuli:
    """UD-ply technical moduli in matrix-modulus units (E_m = 1)."""
    h = rule_of_mixtures(c)
    return TechnicalModuli(
        e1=h.e_l_hat, e2=h.e_t_hat, nu12=c.nu_m * h.nu_lt_hat, g12=h.g_lt_hat
    )


def fabric_ply(c: Constituents, f_r: float) -> TechnicalModuli:
    """Fabric ply from two orthogonal UD sub-layers with fiber ratio f_r.

    E1 = f_r E_l + (1 - f_r) E_t, E2 with the ratios swapped, G12 = G_lt,
    nu12 = nu_lt E_t / (f_r E_t + (1 - f_r) E_l); all per matrix modulus.
    """
    if not 0.0 <= f_r <= 1.0:
        raise OutOfElasticDomain(f"fiber ratio f_r = {f_r} outside [0, 1]")
    h = rule_of_mixtures(c)
    nu_lt = c.nu_m * h.nu_lt_hat
    return TechnicalModuli(
        e1=f_r * h.e_l_hat + (1.0 - f_r) * h.e_t_hat,
        e2=(1.0 - f_r) * h.e_l_hat + f_r * h.e_t_hat,
        nu12=nu_lt * h.e_t_hat / (f_r * h.e_t_hat + (1.0 - f_r) * h.e_l_hat),
        g12=h.g_lt_hat,
    )


def balanced_fabric_ply(c: Constituents) -> TechnicalModuli:
    """Balanced fabric (f_r = 1/2): E1 = E2, hence an R1 = 0 ply."""
    return fabric_ply(c, 0.5)


def r0_ply_from_crossply45(c: Constituents) -> PolarStiffness:
    """R0 = 0 ply: equal fiber volumes along directions 45 degrees apart.

    The UD ply is homogenized as a two-layer [0, 45] stack; the 4*theta
    lamination phasor (1 + e^{i pi})/2 vanishes, so R0 of the result is
    exactly zero whatever the constituents.
    """
    p = cartesian_to_polar(moduli_to_stiffness(ud_moduli(c)))
    return homogenize(p, StackingSequence(angles=(0.0, math.pi / 4.0)))


def fabric_ply_clpt(c: Constituents) -> PolarStiffness:
    """Experimental: fabric as a [0, 90] two-layer stack (CLPT variant).

    Alternative to :func:`balanced_fabric_ply`; kills the 2*theta phasor
    instead, giving an R1 = 0 ply with slightly different moduli.  Kept
    for comparison only, not used by the scans.
    """
    p = cartesian_to_polar(moduli_to_stiffness(ud_moduli(c)))
    return homogenize(p, StackingSequence(angles=(0.0, math.pi / 2.0)))


# ---------------------------------------------------------------------------
# Existence-domain scans


@dataclass(frozen=True)
class GridSpec:
    """Scan grid: E log-spaced over (1, e_max], nu uniform over the open
    admissible interval, v_f uniform over [0, 1] (endpoints degenerate)."""

    n_e: int = 101
    n_nu: int = 101
    n_vf: int = 21
    e_max: float = 100.0

    def axes(self, nu_m: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if min(self.n_e, self.n_nu, self.n_vf) < 1 or self.e_max <= 1.0:
            raise EmptyGrid(
                f"grid {self.n_e}x{self.n_nu}x{self.n_vf}, e_max={self.e_max} is empty"
            )
        e = np.logspace(0.0, math.log10(self.e_max), self.n_e + 1)[1:]
        nu = np.linspace(-1.0 / nu_m, 1.0 / (2.0 * nu_m), self.n_nu + 2)[1:-1]
        vf = np.linspace(0.0, 1.0, self.n_vf)
        return e, nu, vf


@dataclass
class ScanResult:
    """Raster of region membership over the constituent grid."""

    family: str
    nu_m: float
    e: np.ndarray
    nu: np.ndarray
    vf: np.ndarray
    member: np.ndarray  # bool, shape (n_e, n_nu, n_vf)
    degenerate: np.ndarray = field(repr=False, default=None)  # same shape as member

    @property
    def member_count(self) -> int:
        return int(self.member.sum())

    def member_nu_range(self) -> tuple[float, float] | None:
        """Min and max constituent nu ratio among member cells."""
        if self.member_count == 0:
            return None
        nus = np.broadcast_to(
            self.nu[None, :, None], self.member.shape
        )[self.member]
        return float(nus.min()), float(nus.max())

    def summary(self) -> dict:
        rng = self.member_nu_range()
        return {
            "family": self.family,
            "nu_m": self.nu_m,
            "grid": [len(self.e), len(self.nu), len(self.vf)],
            "cells": int(self.member.size),
            "members": self.member_count,
            "degenerate_cells": int(self.degenerate.sum()),
            "member_nu_min": None if rng is None else rng[0],
            "member_nu_max": None if rng is None else rng[1],
        }

    def write_csv(self, path: str | Path) -> Path:
        """Raster as CSV rows (E, nu, vf, member) in grid order."""
        path = Path(path)
        ee, nn, vv = np.meshgrid(self.e, self.nu, self.vf, indexing="ij")
        data = np.column_stack(
            [ee.ravel(), nn.ravel(), vv.ravel(), self.member.ravel().astype(int)]
        )
        header = (
            f"family={self.family} nu_m={self.nu_m} "
            f"grid={len(self.e)}x{len(self.nu)}x{len(self.vf)}\n"
            "E,nu,vf,member"
        )
        np.savetxt(path, data, fmt=["%.10g", "%.10g", "%.10g", "%d"],
                   delimiter=",", header=header)
        return path


def _r1zero_tau_rho(E, NU, VF, nu_m):
    """Vectorized balanced-fabric ply -> (tau, rho, validity mask)."""
    d = VF + (1.0 - VF) * E
    num = E + (1.0 + VF * (E - 1.0)) * d
    e1 = num / (2.0 * d)
    nu12 = nu_m * 2.0 * E * (1.0 + VF * (NU - 1.0)) / num
    g12 = E / (2.0 * (VF * (1.0 + NU * nu_m) + (1.0 - VF) * (1.0 + nu_m) * E))
    valid = (np.abs(nu12) < 1.0) & (e1 > 0.0) & (g12 > 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        den = 1.0 - nu12**2
        q11 = e1 / den
        q12 = nu12 * q11
        q66 = 2.0 * g12
        t0 = (2.0 * q11 - 2.0 * q12 + 2.0 * q66) / 8.0
        t1 = (2.0 * q11 + 2.0 * q12) / 8.0
        r0 = np.abs(2.0 * q11 - 2.0 * q12 - 2.0 * q66) / 8.0
        tau = t1 / t0
        rho = r0 / t0
    # plies with rho below the symmetry floor are isotropic, not members
    valid &= (t0 > 0.0) & (t1 > 0.0) & (rho > 1e-9) & (rho < 1.0)
    return tau, rho, valid


def _r0zero_tau_sigma(E, NU, VF, nu_m):
    """Vectorized 45-degree cross-ply -> (tau, sigma_A, validity mask)."""
    e_l = 1.0 + VF * (E - 1.0)
    e_t = E / (VF + (1.0 - VF) * E)
    nu_lt = nu_m * (1.0 + VF * (NU - 1.0))
    g_lt = E / (2.0 * (VF * (1.0 + NU * nu_m) + (1.0 - VF) * (1.0 + nu_m) * E))
    den = 1.0 - nu_lt**2 * e_t / e_l
    valid = (den > 0.0) & (e_l > 0.0) & (e_t > 0.0) & (g_lt > 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        q11 = e_l / den
        q12 = nu_lt * e_t / den
        q22 = e_t / den
        q66 = 2.0 * g_lt
        t0 = (q11 - 2.0 * q12 + 2.0 * q66 + q22) / 8.0
        t1 = (q11 + 2.0 * q12 + q22) / 8.0
        r1 = np.abs(q11 - q22) / 8.0
        # [0, 45] stack scales the 2*theta harmonic by |1 + i|/2 = sqrt(2)/2
        sigma = r1 * (math.sqrt(2.0) / 2.0) / t0
        tau = t1 / t0
    # sigma below the symmetry floor means an isotropic ply, not a member
    valid &= (t0 > 0.0) & (t1 > 0.0) & (sigma > 1e-9) & (tau > 2.0 * sigma**2)
    return tau, sigma, valid


def existence_scan(
    family: str, grid: GridSpec | None = None, nu_m: float = 0.25
) -> ScanResult:
    """Rasterize the constituent domain producing the requested laminates.

    Parameters
    ----------
    family : str
        One of "r1zero-taal", "r1zero-paal" (sets A+B and C of the
        balanced-fabric construction), "r0zero-taal", "r0zero-paal"
        (sets T and P of the 45-degree cross-ply construction).
    grid : GridSpec
        Grid resolution and E range; defaults resolve the domain shapes
        in a couple of seconds.
    nu_m : float
        Matrix Poisson's ratio (low influence on the domains).

    Returns
    -------
    ScanResult
        Boolean membership per cell, with v_f endpoint cells flagged
        degenerate; evaluation is pure and deterministic in grid order.
    """
    if family not in SCAN_FAMILIES:
        raise ValueError(f"unknown scan family {family!r}; expected {SCAN_FAMILIES}")
    grid = grid or GridSpec()
    e, nu, vf = grid.axes(nu_m)
    E, NU, VF = np.meshgrid(e, nu, vf, indexing="ij")
    if family.startswith("r1zero"):
        tau, rho, valid = _r1zero_tau_rho(E, NU, VF, nu_m)
        if family.endswith("taal"):
            in_a = tau < (1.0 - rho) / 2.0
            in_b = ((1.0 - rho) / 2.0 < tau) & (tau < 0.5)
            member = valid & (in_a | in_b)
        else:
            member = valid & (0.5 < tau) & (tau < (1.0 + rho) / 2.0)
    else:
        tau, sigma, valid = _r0zero_tau_sigma(E, NU, VF, nu_m)
        if family.endswith("taal"):
            member = valid & (tau < 0.5)
        else:
            member = valid & (0.5 < tau) & (tau < 0.5 + 2.0 * sigma**2)
    degenerate = np.zeros_like(member)
    degenerate[:, :, vf == 0.0] = True
    degenerate[:, :, vf == 1.0] = True
    return ScanResult(
        family=family, nu_m=nu_m, e=e, nu=nu, vf=vf,
        member=member, degenerate=degenerate,
    )
