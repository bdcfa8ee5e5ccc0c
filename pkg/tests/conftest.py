"""Shared fixtures: worked example materials, random-ply generators, tolerances."""

from __future__ import annotations

import math

import numpy as np
import pytest

from auxetolam.io import Material, load_material
from auxetolam.polar import PolarStiffness

EXAMPLE_NAMES = [f"example{i}" for i in range(1, 8)]


@pytest.fixture(scope="session")
def examples() -> dict[str, Material]:
    return {name: load_material(name) for name in EXAMPLE_NAMES}


def assert_close_to_paper(computed, printed, rel=1e-2, decimals=None, label=""):
    """Compare against a value as printed in the reference tables/figures.

    Passes within ``rel`` relative tolerance or within half an ulp of the
    printed decimal precision (for values rounded to few digits).
    """
    tol = rel * abs(printed)
    if decimals is not None:
        tol = max(tol, 0.5 * 10.0 ** (-decimals))
    assert abs(computed - printed) <= tol, (
        f"{label or 'value'}: computed {computed!r} vs printed {printed!r} "
        f"(tol {tol:g})"
    )


# ---------------------------------------------------------------------------
# random admissible plies


def random_r1zero_pairs(rng: np.random.Generator, n: int):
    """(tau, rho) uniform over the elastic rectangle, away from boundaries."""
    tau = rng.uniform(0.02, 1.2, n)
    rho = rng.uniform(0.02, 0.98, n)
    return tau, rho


def random_r0zero_pairs(rng: np.random.Generator, n: int):
    """(tau, sigma) with tau > 2 sigma^2, away from boundaries."""
    sigma = rng.uniform(0.02, 0.68, n)
    tau = 2.0 * sigma**2 + rng.uniform(0.02, 1.0, n)
    return tau, sigma


def random_r0compliance_pairs(rng: np.random.Generator, n: int):
    tau = rng.uniform(0.02, 1.2, n)
    rho = rng.uniform(0.02, 0.98, n)
    return tau, rho


def random_generic_polar(rng: np.random.Generator) -> PolarStiffness:
    """Random admissible tensor with general polar angles (PD, Delta > 0)."""
    from auxetolam.polar import polar_delta, polar_to_cartesian

    while True:
        p = PolarStiffness(
            t0=1.0,
            t1=rng.uniform(0.05, 1.2),
            r0=rng.uniform(0.0, 0.9),
            r1=rng.uniform(0.0, 0.7),
            phi0=rng.uniform(0.0, math.pi),
            phi1=rng.uniform(0.0, math.pi),
        )
        if polar_delta(p) <= 0.0:
            continue
        if polar_to_cartesian(p).is_positive_definite():
            return p


def random_stack(rng: np.random.Generator, max_plies: int = 8):
    from auxetolam.laminate import StackingSequence

    n = int(rng.integers(1, max_plies + 1))
    return StackingSequence(angles=tuple(rng.uniform(-math.pi / 2, math.pi / 2, n)))
