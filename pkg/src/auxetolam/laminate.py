"""Stacking sequences, lamination parameters and extension homogenization.

Only the in-plane (extension) stiffness A of an uncoupled laminate made of
identical plies is modelled.  Uncoupling (B = 0) is a declared assumption:
stacks are treated as orientation multisets, ply ordering and thickness
never enter.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import InfeasibleLaminationPoint
from .polar import DEFAULT_TOL, PolarStiffness, SymmetryClass, classify_symmetry


@dataclass(frozen=True)
class StackingSequence:
    """Ply orientation angles in radians, interpreted mod pi."""

    angles: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.angles) < 1:
            raise ValueError("a stacking sequence needs at least one ply")

    @property
    def n(self) -> int:
        return len(self.angles)


@dataclass(frozen=True)
class LaminationPoint:
    """Lamination parameters (xi1, xi2) at 4*delta and (xi3, xi4) at 2*delta."""

    xi1: float
    xi2: float = 0.0
    xi3: float = 0.0
    xi4: float = 0.0

    @property
    def z4(self) -> complex:
        return complex(self.xi1, self.xi2)

    @property
    def z2(self) -> complex:
        return complex(self.xi3, self.xi4)


def lamination_parameters(s: StackingSequence) -> LaminationPoint:
    """xi1 + i xi2 = mean(e^{4i delta_j}); xi3 + i xi4 = mean(e^{2i delta_j})."""
    z4 = sum(cmath.exp(4j * d) for d in s.angles) / s.n
    z2 = sum(cmath.exp(2j * d) for d in s.angles) / s.n
    return LaminationPoint(xi1=z4.real, xi2=z4.imag, xi3=z2.real, xi4=z2.imag)


def make_angle_ply(delta: float) -> StackingSequence:
    """Balanced [+delta, -delta] pair."""
    return StackingSequence(angles=(delta, -delta))


def make_quasi_isotropic() -> StackingSequence:
    """Symmetric six-ply [0, 60, -60] stack with xi = (0, 0, 0, 0)."""
    d = math.radians(60.0)
    return StackingSequence(angles=(0.0, d, -d, -d, d, 0.0))


def homogenize_point(ply: PolarStiffness, point: LaminationPoint) -> PolarStiffness:
    """Extension-stiffness polar of a laminate of identical plies.

    T0 and T1 carry over unchanged (the isotropic part cannot be affected
    by orientations); the anisotropic harmonics are scaled by the complex
    lamination parameters::

        R0A e^{4i Phi0A} = R0 e^{4i Phi0} (xi1 + i xi2)
        R1A e^{2i Phi1A} = R1 e^{2i Phi1} (xi3 + i xi4)
    """
    w0 = ply.r0 * cmath.exp(4j * ply.phi0) * point.z4
    w1 = ply.r1 * cmath.exp(2j * ply.phi1) * point.z2
    return PolarStiffness(
        t0=ply.t0,
        t1=ply.t1,
        r0=abs(w0),
        r1=abs(w1),
        phi0=cmath.phase(w0) / 4.0 if abs(w0) > 0.0 else 0.0,
        phi1=cmath.phase(w1) / 2.0 if abs(w1) > 0.0 else 0.0,
    )


def homogenize(ply: PolarStiffness, s: StackingSequence) -> PolarStiffness:
    """Homogenize a stack of identical plies (see :func:`homogenize_point`)."""
    return homogenize_point(ply, lamination_parameters(s))


def preserves_special_symmetry(
    ply: PolarStiffness, point: LaminationPoint, tol: float = DEFAULT_TOL
) -> SymmetryClass:
    """Symmetry class of the homogenized tensor A.

    R0 = 0 and R1 = 0 are always preserved; compliance r0 = 0 survives
    only on stacks satisfying :func:`r0_preserving_constraint`.
    """
    return classify_symmetry(homogenize_point(ply, point), tol=tol)


def r0_preserving_constraint(point: LaminationPoint, tol: float = 1e-9) -> bool:
    """True when the stack keeps a compliance-r0 = 0 ply's symmetry.

    In the frame with xi2 = xi4 = 0 the condition is xi1 = xi3^2; the
    frame-free statement checked here is xi1 + i xi2 = (xi3 + i xi4)^2.
    """
    return abs(point.z4 - point.z2**2) < tol


def miki_feasible(point: LaminationPoint, tol: float = 1e-12) -> bool:
    """Admissibility of (xi3, xi1): 2 xi3^2 - 1 <= xi1 <= 1.

    Every lamination point of a real stack satisfies this; explicit xi
    requests from the CLI are rejected when they fall outside.
    """
    return (2.0 * point.xi3**2 - 1.0 <= point.xi1 + tol) and point.xi1 <= 1.0 + tol


def require_miki_feasible(point: LaminationPoint) -> None:
    if not miki_feasible(point):
        raise InfeasibleLaminationPoint(
            f"(xi1, xi3) = ({point.xi1:g}, {point.xi3:g}) violates "
            f"2 xi3^2 - 1 <= xi1 <= 1"
        )


def normalize_xi2(point: LaminationPoint) -> tuple[LaminationPoint, float]:
    """Rotate the laminate frame so that xi2 = 0 (and xi1 >= 0).

    Returns the normalized point and the rotation angle applied to the
    frame; a rotation by psi multiplies xi1+i*xi2 by e^{-4i psi} and
    xi3+i*xi4 by e^{-2i psi}.
    """
    psi = cmath.phase(point.z4) / 4.0 if abs(point.z4) > 0.0 else 0.0
    return _rotated(point, psi), psi


def normalize_xi4(point: LaminationPoint) -> tuple[LaminationPoint, float]:
    """Rotate the laminate frame so that xi4 = 0 (and xi3 >= 0)."""
    psi = cmath.phase(point.z2) / 2.0 if abs(point.z2) > 0.0 else 0.0
    return _rotated(point, psi), psi


def _rotated(point: LaminationPoint, psi: float) -> LaminationPoint:
    z4 = point.z4 * cmath.exp(-4j * psi)
    z2 = point.z2 * cmath.exp(-2j * psi)
    return LaminationPoint(xi1=z4.real, xi2=z4.imag, xi3=z2.real, xi4=z2.imag)
