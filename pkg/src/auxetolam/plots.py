"""Figure rendering for the report path.

Polar diagrams of the directional engineering constants mirror the usual
presentation: one figure with E1(theta) and G12(theta), one with
nu12(theta) drawn around an offset circle (the thin dashed circle marks
nu = 0; the curve lies inside it where the material is auxetic).
Figures are written as SVG next to the delimited output.

matplotlib is imported lazily so that non-figure commands stay light.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .auxetic import moduli_profile
from .polar import PolarStiffness


def _plt():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def _full_circle(p: PolarStiffness, samples: int):
    """Profiles over the full circle for polar plotting (pi-periodic)."""
    thetas, e1, g12, nu = moduli_profile(p, samples)
    th = np.concatenate([thetas, thetas + math.pi, [2.0 * math.pi]])
    wrap = lambda a: np.concatenate([a, a, [a[0]]])
    return th, wrap(e1), wrap(g12), wrap(nu)


def _nu_offset(*nus: np.ndarray) -> float:
    """Radial offset putting the most negative nu comfortably inside."""
    lo = min(float(np.min(n)) for n in nus)
    if lo >= 0.0:
        return 0.0
    return math.ceil(-lo * 12.0) / 10.0


def save_ply_figures(
    name: str, p: PolarStiffness, out_dir: Path, samples: int = 720
) -> list[Path]:
    """Write <name>_moduli_polar.svg and <name>_nu_polar.svg."""
    plt = _plt()
    th, e1, g12, nu = _full_circle(p, samples)
    paths = []

    fig, ax = plt.subplots(subplot_kw={"projection": "polar"}, figsize=(5, 5))
    ax.plot(th, e1, lw=2.2, color="k", label="E1")
    ax.plot(th, g12, lw=1.0, color="k", label="G12")
    ax.set_title(f"{name}: E1(theta) thick, G12(theta) thin")
    path = out_dir / f"{name}_moduli_polar.svg"
    fig.savefig(path)
    plt.close(fig)
    paths.append(path)

    off = _nu_offset(nu)
    fig, ax = plt.subplots(subplot_kw={"projection": "polar"}, figsize=(5, 5))
    ax.plot(th, off + nu, lw=2.2, color="k")
    ax.plot(th, np.full_like(th, off), lw=0.8, ls="--", color="0.4")
    ax.set_title(f"{name}: nu12(theta), dashed circle = 0")
    path = out_dir / f"{name}_nu_polar.svg"
    fig.savefig(path)
    plt.close(fig)
    paths.append(path)
    return paths


def save_comparison_figure(
    name: str,
    ply: PolarStiffness,
    laminate: PolarStiffness,
    out_dir: Path,
    samples: int = 720,
) -> Path:
    """nu12 of ply (dashed) and laminate (solid): polar plus 0..90 deg plot."""
    plt = _plt()
    th, _, _, nu_p = _full_circle(ply, samples)
    _, _, _, nu_l = _full_circle(laminate, samples)
    off = _nu_offset(nu_p, nu_l)

    fig, (axp, axc) = plt.subplots(
        1, 2, figsize=(10, 4.5),
        subplot_kw=None, gridspec_kw={"width_ratios": [1, 1.2]},
    )
    axp.remove()
    axp = fig.add_subplot(1, 2, 1, projection="polar")
    axp.plot(th, off + nu_l, lw=2.0, color="k")
    axp.plot(th, off + nu_p, lw=1.4, ls="--", color="k")
    axp.plot(th, np.full_like(th, off), lw=0.8, ls=":", color="0.4")
    axp.set_title("nu12: ply dashed, laminate solid")

    deg = np.degrees(th)
    sel = deg <= 90.0
    axc.plot(deg[sel], nu_l[sel], lw=2.0, color="k", label="laminate")
    axc.plot(deg[sel], nu_p[sel], lw=1.4, ls="--", color="k", label="ply")
    axc.axhline(0.0, lw=0.8, color="0.4")
    axc.set_xlim(0, 90)
    axc.set_xticks(range(0, 91, 15))
    axc.set_xlabel("theta [deg]")
    axc.set_ylabel("nu12")
    axc.legend(frameon=False)
    path = out_dir / f"{name}_nu_comparison.svg"
    fig.savefig(path)
    plt.close(fig)
    return path


def save_scan_slice(result, vf: float, out_dir: Path) -> Path:
    """Membership raster at the v_f grid plane closest to ``vf``."""
    plt = _plt()
    k = int(np.argmin(np.abs(result.vf - vf)))
    fig, ax = plt.subplots(figsize=(5.5, 4.5))
    ax.pcolormesh(
        result.nu, result.e, result.member[:, :, k].astype(float),
        cmap="Greys", vmin=0.0, vmax=1.3, shading="auto",
    )
    ax.set_yscale("log")
    ax.set_xlabel("nu_f / nu_m")
    ax.set_ylabel("E_f / E_m")
    ax.set_title(f"{result.family} members at v_f = {result.vf[k]:.3g}")
    path = out_dir / f"{result.family}_slice_vf{result.vf[k]:.3g}.svg"
    fig.savefig(path)
    plt.close(fig)
    return path
