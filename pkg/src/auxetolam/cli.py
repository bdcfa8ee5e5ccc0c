"""Command-line front end.

Five subcommands::

    auxetolam analyze-ply       MATERIAL
    auxetolam analyze-laminate  MATERIAL STACK
    auxetolam optimize          MATERIAL [--objective max-zone]
    auxetolam scan              FAMILY [grid flags]
    auxetolam region            FAMILY TAU RHO_OR_SIGMA

MATERIAL is a JSON material file path or a bundled name (example1 ..
example7).  STACK is an angle list in degrees ("0,60,-60"),
"angleply:<deg>", "quasiiso", or an explicit lamination point
"xi:(xi1,xi2,xi3,xi4)" (checked against the feasible domain).

Structured results go to stdout as JSON and, per --format, to files in
--out: JSON report, CSV profiles/rasters and SVG polar diagrams.  All
user-facing angles are degrees, reports carry 6 significant digits.

Exit codes: 0 success, 2 parse/validation error, 3 domain error,
4 infeasible request.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__
from .auxetic import (
    AuxeticityReport,
    RegionResult,
    auxetic_zone_r0zero,
    classify,
    maximize_auxetic_zone_r1zero,
    moduli_profile,
    r0_auxetic_ply,
    r0_laminate_design,
    r1zero_label,
    region_r0zero,
    region_r1zero_paal,
    region_r1zero_taal,
)
from .errors import AuxetolamError, NotAuxeticPly, OutOfRegion, ParseError
from .io import Material, RunConfig, load_material
from .laminate import (
    LaminationPoint,
    StackingSequence,
    homogenize_point,
    lamination_parameters,
    make_angle_ply,
    make_quasi_isotropic,
    normalize_xi2,
    normalize_xi4,
    r0_preserving_constraint,
    require_miki_feasible,
)
from .micromech import SCAN_FAMILIES, GridSpec, existence_scan
from .polar import PolarStiffness, classify_symmetry, compliance_numeric

_CLASSIFY_SAMPLES = 3601


def sig6(x: float) -> float:
    """Round to 6 significant digits for reports."""
    return float(f"{x:.6g}")


def _deg(x: float) -> float:
    return sig6(math.degrees(x))


# ---------------------------------------------------------------------------
# payload builders


def _polar_dict(p: PolarStiffness) -> dict:
    return {
        "t0": sig6(p.t0), "t1": sig6(p.t1),
        "r0": sig6(p.r0), "r1": sig6(p.r1),
        "phi0_deg": _deg(p.phi0), "phi1_deg": _deg(p.phi1),
    }


def _aux_dict(rep: AuxeticityReport) -> dict:
    return {
        "classification": rep.classification,
        "nu_min": sig6(rep.nu_min),
        "theta_min_deg": _deg(rep.theta_min),
        "delta_alpha_deg": _deg(rep.delta_alpha),
        "method": rep.method,
    }


def _region_dict(r: RegionResult) -> dict:
    xi = r.xi_interval
    return {
        "label": r.label,
        "xi_interval": xi if isinstance(xi, str) else [sig6(xi[0]), sig6(xi[1])],
        "boundary": r.boundary,
    }


def _engineering_at_zero(p: PolarStiffness) -> dict:
    s = compliance_numeric(p, 0.0)
    return {
        "e1": sig6(1.0 / s.s11),
        "e2": sig6(1.0 / s.s22),
        "nu12": sig6(-s.s12 / s.s11),
        "g12": sig6(1.0 / (2.0 * s.s66)),
    }


def _family_region(mat: Material) -> dict:
    d = mat.bundle.dimensionless
    out: dict = {"family": mat.family}
    if mat.family == "r1zero":
        out.update(
            tau=sig6(d.tau), rho=sig6(d.rho),
            taal=_region_dict(region_r1zero_taal(d.tau, d.rho)),
            paal=_region_dict(region_r1zero_paal(d.tau, d.rho)),
        )
    elif mat.family == "r0zero":
        out.update(
            tau=sig6(d.tau), sigma=sig6(d.sigma),
            region=_region_dict(region_r0zero(d.tau, d.sigma)),
        )
    elif mat.family == "r0compliance":
        auxetic = r0_auxetic_ply(d.tau, d.rho)
        out.update(tau=sig6(d.tau), rho=sig6(d.rho), auxetic=auxetic)
        if auxetic:
            lo, hi = r0_laminate_design(d.tau, d.rho)
            out["laminate_xi3_interval"] = [sig6(lo), sig6(hi)]
        else:
            out["laminate_xi3_interval"] = None
    return out


def _write_profile_csv(path: Path, p: PolarStiffness, samples: int) -> None:
    import numpy as np

    thetas, e1, g12, nu = moduli_profile(p, samples)
    data = np.column_stack([np.degrees(thetas), e1, g12, nu])
    np.savetxt(
        path, data, fmt="%.8g", delimiter=",",
        header="theta_deg,E1,G12,nu12",
    )


def _emit(payload: dict, cfg: RunConfig, command: str, outputs: list[Path]) -> int:
    report = {
        "tool": "auxetolam",
        "version": __version__,
        "command": command,
        "config": cfg.as_dict(),
        **payload,
        "outputs": [str(o) for o in outputs],
    }
    if "json" in cfg.formats:
        name = payload.get("material", {}).get("name") or payload.get("family", command)
        path = cfg.out_dir / f"{name}_{command.replace('-', '_')}.json"
        path.write_text(json.dumps(report, indent=2) + "\n")
        report["outputs"].append(str(path))
    print(json.dumps(report, indent=2))
    return 0


# ---------------------------------------------------------------------------
# commands


def _material_header(mat: Material) -> dict:
    return {"name": mat.name, "kind": mat.kind, "units": mat.units,
            "family": mat.family}


def cmd_analyze_ply(args: argparse.Namespace) -> int:
    cfg = _config(args)
    mat = load_material(args.material, tol=cfg.tol)
    b = mat.bundle
    sym = classify_symmetry(b.polar, tol=cfg.tol)
    rep = classify(b.polar, samples=_CLASSIFY_SAMPLES)
    d = b.dimensionless
    payload = {
        "material": _material_header(mat),
        "polar": _polar_dict(b.polar),
        "technical_moduli": {
            "e1": sig6(b.moduli.e1), "e2": sig6(b.moduli.e2),
            "nu12": sig6(b.moduli.nu12), "g12": sig6(b.moduli.g12),
        },
        "dimensionless": {
            "tau": sig6(d.tau), "rho": sig6(d.rho), "sigma": sig6(d.sigma),
            "alpha": sig6(d.alpha), "beta": sig6(d.beta),
            "gamma": sig6(d.gamma), "epsilon": sig6(d.epsilon),
            "big_gamma": None if d.big_gamma is None else sig6(d.big_gamma),
            "frame_flipped": d.frame_flipped,
        },
        "symmetry": {"kind": sym.kind, "k": sym.k, "conditions": list(sym.conditions)},
        "auxeticity": _aux_dict(rep),
        "region": _family_region(mat),
    }
    outputs: list[Path] = []
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    if "csv" in cfg.formats:
        path = cfg.out_dir / f"{mat.name}_ply_profile.csv"
        _write_profile_csv(path, b.polar, cfg.samples)
        outputs.append(path)
    if "svg" in cfg.formats:
        from .plots import save_ply_figures

        outputs += save_ply_figures(mat.name, b.polar, cfg.out_dir, cfg.samples)
    return _emit(payload, cfg, "analyze-ply", outputs)


def _parse_stack(spec: str) -> tuple[StackingSequence | None, LaminationPoint]:
    """Angle list / angleply:<deg> / quasiiso / xi:(...) -> stack and point."""
    spec = spec.strip()
    if spec == "quasiiso":
        stack = make_quasi_isotropic()
        return stack, lamination_parameters(stack)
    if spec.startswith("angleply:"):
        try:
            delta = float(spec.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"bad angle-ply spec {spec!r}: expected angleply:<deg>")
        stack = make_angle_ply(math.radians(delta))
        return stack, lamination_parameters(stack)
    if spec.startswith("xi:"):
        body = spec[3:].strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        parts = body.split(",")
        if len(parts) != 4:
            raise ParseError(f"bad lamination point {spec!r}: expected xi:(x1,x2,x3,x4)")
        try:
            xi = [float(x) for x in parts]
        except ValueError:
            raise ParseError(f"bad lamination point {spec!r}: non-numeric entry")
        point = LaminationPoint(xi1=xi[0], xi2=xi[1], xi3=xi[2], xi4=xi[3])
        require_miki_feasible(point)
        return None, point
    try:
        angles = tuple(math.radians(float(x)) for x in spec.split(","))
    except ValueError:
        raise ParseError(
            f"bad stack spec {spec!r}: expected an angle list in degrees, "
            "'angleply:<deg>', 'quasiiso' or 'xi:(x1,x2,x3,x4)'"
        )
    stack = StackingSequence(angles=angles)
    return stack, lamination_parameters(stack)


def cmd_analyze_laminate(args: argparse.Namespace) -> int:
    cfg = _config(args)
    mat = load_material(args.material, tol=cfg.tol)
    stack, point = _parse_stack(args.stack)
    a = homogenize_point(mat.bundle.polar, point)
    rep = classify(a, samples=_CLASSIFY_SAMPLES)
    sym = classify_symmetry(a, tol=cfg.tol)
    _, psi2 = normalize_xi2(point)
    _, psi4 = normalize_xi4(point)
    payload = {
        "material": _material_header(mat),
        "stack": {
            "spec": args.stack,
            "angles_deg": None if stack is None
            else [sig6(math.degrees(x)) for x in stack.angles],
            "lamination_point": {
                "xi1": sig6(point.xi1), "xi2": sig6(point.xi2),
                "xi3": sig6(point.xi3), "xi4": sig6(point.xi4),
            },
        },
        "laminate_polar": _polar_dict(a),
        "laminate_engineering": _engineering_at_zero(a),
        "symmetry": {"kind": sym.kind, "k": sym.k, "conditions": list(sym.conditions)},
        "auxeticity": _aux_dict(rep),
        "frame_normalization": {
            "rotation_deg_for_xi2_zero": _deg(psi2),
            "rotation_deg_for_xi4_zero": _deg(psi4),
        },
    }
    if mat.family == "r0compliance":
        payload["r0_preserving_stack"] = r0_preserving_constraint(point)
    outputs: list[Path] = []
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    if "csv" in cfg.formats:
        path = cfg.out_dir / f"{mat.name}_laminate_profile.csv"
        _write_profile_csv(path, a, cfg.samples)
        outputs.append(path)
    if "svg" in cfg.formats:
        from .plots import save_comparison_figure, save_ply_figures

        outputs += save_ply_figures(
            f"{mat.name}_laminate", a, cfg.out_dir, cfg.samples
        )
        outputs.append(
            save_comparison_figure(mat.name, mat.bundle.polar, a, cfg.out_dir, cfg.samples)
        )
    return _emit(payload, cfg, "analyze-laminate", outputs)


def cmd_optimize(args: argparse.Namespace) -> int:
    cfg = _config(args)
    mat = load_material(args.material, tol=cfg.tol)
    d = mat.bundle.dimensionless
    ply_rep = classify(mat.bundle.polar, samples=_CLASSIFY_SAMPLES)
    payload: dict = {
        "material": _material_header(mat),
        "objective": args.objective,
        "single_ply_delta_alpha_deg": _deg(ply_rep.delta_alpha),
    }
    if mat.family == "r1zero":
        label = r1zero_label(d.tau, d.rho)
        payload["region"] = label
        if label == "A":
            payload.update(
                nothing_to_optimize=True,
                note="set A: every stacking sequence yields a totally auxetic laminate",
            )
        elif label in ("B", "C"):
            zo = maximize_auxetic_zone_r1zero(d.tau, d.rho)
            payload.update(
                xi1_opt=sig6(zo.xi_opt),
                lambda_min=sig6(zo.lambda_min),
                delta_alpha_opt_deg=_deg(zo.delta_alpha),
                angle_ply_delta_deg=sig6(math.degrees(math.acos(min(1.0, zo.xi_opt)) / 4.0)),
                taal_reachable=zo.taal,
                nothing_to_optimize=zo.single_ply_optimal,
            )
            if zo.single_ply_optimal:
                payload["note"] = (
                    "rho < sqrt(2 tau - 1): the single ply (xi1 = 1) already has "
                    "the widest auxetic zone"
                )
        else:
            raise OutOfRegion(
                f"(tau, rho) = ({d.tau:.6g}, {d.rho:.6g}) is outside sets A, B and C: "
                "nothing to design"
            )
    elif mat.family == "r0zero":
        region = region_r0zero(d.tau, d.sigma)
        payload["region"] = region.label
        if region.label == "T":
            payload.update(
                nothing_to_optimize=True,
                note="set T: totally auxetic for every xi3, independent of the stack",
            )
        elif region.label == "P":
            payload.update(
                xi3_opt=1.0,
                delta_alpha_opt_deg=_deg(auxetic_zone_r0zero(d.tau, d.sigma, 1.0)),
                nothing_to_optimize=True,
                note="the largest auxetic zone is that of the single layer (xi3 = 1)",
            )
        else:
            raise OutOfRegion(
                f"(tau, sigma) = ({d.tau:.6g}, {d.sigma:.6g}) is outside sets T and P"
            )
    elif mat.family == "r0compliance":
        auxetic = r0_auxetic_ply(d.tau, d.rho)
        payload["auxetic"] = auxetic
        if not auxetic:
            raise NotAuxeticPly(
                f"(tau, rho) = ({d.tau:.6g}, {d.rho:.6g}): ply not auxetic, "
                "no laminate on the xi1 = xi3^2 parabola can be"
            )
        lo, hi = r0_laminate_design(d.tau, d.rho)
        payload.update(
            nothing_to_optimize=True,
            laminate_xi3_interval=[sig6(lo), sig6(hi)],
            note="every xi3 in the interval (with xi1 = xi3^2) gives a totally "
            "auxetic laminate; the zone is the full quarter period",
        )
    else:
        raise OutOfRegion(
            "no special-orthotropy family detected; zone optimization is only "
            "defined for r1zero, r0zero and r0compliance plies"
        )
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    return _emit(payload, cfg, "optimize", [])


def cmd_region(args: argparse.Namespace) -> int:
    cfg = _config(args)
    tau, second = args.tau, args.rho_or_sigma
    payload: dict = {"family": args.family, "tau": tau}
    if args.family == "r1zero":
        payload["rho"] = second
        payload["taal"] = _region_dict(region_r1zero_taal(tau, second))
        payload["paal"] = _region_dict(region_r1zero_paal(tau, second))
    elif args.family == "r0zero":
        payload["sigma"] = second
        payload["region"] = _region_dict(region_r0zero(tau, second))
    else:  # r0compliance
        payload["rho"] = second
        auxetic = r0_auxetic_ply(tau, second)
        payload["auxetic"] = auxetic
        payload["laminate_xi3_interval"] = (
            [sig6(x) for x in r0_laminate_design(tau, second)] if auxetic else None
        )
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    return _emit(payload, cfg, "region", [])


def cmd_scan(args: argparse.Namespace) -> int:
    cfg = _config(args)
    grid = GridSpec(n_e=args.ne, n_nu=args.nnu, n_vf=args.nvf, e_max=args.e_max)
    result = existence_scan(args.family, grid=grid, nu_m=args.nu_m)
    payload = {"family": args.family, "summary": result.summary()}
    outputs: list[Path] = []
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    if "csv" in cfg.formats:
        outputs.append(result.write_csv(cfg.out_dir / f"{args.family}_scan.csv"))
    if "svg" in cfg.formats and args.slice_vf is not None:
        from .plots import save_scan_slice

        outputs.append(save_scan_slice(result, args.slice_vf, cfg.out_dir))
    return _emit(payload, cfg, "scan", outputs)


# ---------------------------------------------------------------------------
# parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        tol=args.tol,
        samples=args.samples,
        out_dir=Path(args.out),
        formats=tuple(f.strip() for f in args.format.split(",") if f.strip()),
    )


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--tol", type=float, default=1e-9,
                    help="relative tolerance for symmetry detection (default 1e-9)")
    sp.add_argument("--samples", type=int, default=720,
                    help="profile/diagram sample count (default 720)")
    sp.add_argument("--out", default=".", help="output directory (default .)")
    sp.add_argument("--format", default="json,csv,svg",
                    help="comma list of outputs to write: json,csv,svg")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="auxetolam",
        description="Auxetic laminate analysis for specially orthotropic plies",
    )
    parser.add_argument("--version", action="version", version=f"auxetolam {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze-ply", help="classify a single ply material")
    sp.add_argument("material", help="material file path or bundled name")
    _add_common(sp)
    sp.set_defaults(func=cmd_analyze_ply)

    sp = sub.add_parser("analyze-laminate", help="homogenize and classify a laminate")
    sp.add_argument("material")
    sp.add_argument("stack", help="'0,60,-60' | angleply:<deg> | quasiiso | xi:(a,b,c,d)")
    _add_common(sp)
    sp.set_defaults(func=cmd_analyze_laminate)

    sp = sub.add_parser("optimize", help="maximize the auxetic zone over the stack")
    sp.add_argument("material")
    sp.add_argument("--objective", choices=("max-zone",), default="max-zone")
    _add_common(sp)
    sp.set_defaults(func=cmd_optimize)

    sp = sub.add_parser("scan", help="existence-domain scan over constituents")
    sp.add_argument("family", choices=SCAN_FAMILIES)
    sp.add_argument("--nu-m", dest="nu_m", type=float, default=0.25,
                    help="matrix Poisson's ratio (default 0.25)")
    sp.add_argument("--e-max", dest="e_max", type=float, default=100.0)
    sp.add_argument("--ne", type=int, default=101, help="E grid points")
    sp.add_argument("--nnu", type=int, default=101, help="nu grid points")
    sp.add_argument("--nvf", type=int, default=21, help="v_f grid points")
    sp.add_argument("--slice-vf", dest="slice_vf", type=float, default=None,
                    help="also render the membership slice nearest this v_f")
    _add_common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("region", help="region membership of a dimensionless point")
    sp.add_argument("family", choices=("r1zero", "r0zero", "r0compliance"))
    sp.add_argument("tau", type=float)
    sp.add_argument("rho_or_sigma", type=float)
    _add_common(sp)
    sp.set_defaults(func=cmd_region)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AuxetolamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
