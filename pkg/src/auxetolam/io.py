"""Material files and run configuration.

A material file is a small JSON document::

    {
      "name": "example1",
      "kind": "technical" | "cartesian" | "polar" | "dimensionless",
      "units": "free-form label",          (optional)
      "family": "r1zero|r0zero|r0compliance",  (optional, auto-detected)
      "values": { ... }
    }

Value keys per kind (angles in degrees at this boundary):

* technical:     e1, e2, nu12, g12
* cartesian:     q11, q12, q22, q66 [, q16, q26, notation="kelvin"|"voigt"]
* polar:         t0, t1, r0, r1 [, phi0_deg, phi1_deg]
* dimensionless: family-specific pair [, t0]; r1zero/(tau, rho),
                 r0zero/(tau, sigma), r0compliance/(tau, rho)

The seven worked materials ship with the package and can be referenced
by bare name (e.g. ``example5``) instead of a path.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import AuxetolamError, ParseError
from .ply import (
    FAMILIES,
    PlyBundle,
    TechnicalModuli,
    ply_r0compliance,
    ply_r0zero,
    ply_r1zero,
)
from .polar import SQRT2, CartesianStiffness, PolarStiffness, classify_symmetry

KINDS = ("technical", "cartesian", "polar", "dimensionless")


@dataclass
class RunConfig:
    """Resolved command configuration echoed into every JSON report."""

    tol: float = 1e-9
    samples: int = 720
    out_dir: Path = Path(".")
    formats: tuple[str, ...] = ("json", "csv", "svg")

    def __post_init__(self) -> None:
        if self.samples < 8:
            raise ParseError(f"samples must be >= 8, got {self.samples}")
        bad = [f for f in self.formats if f not in ("json", "csv", "svg")]
        if bad:
            raise ParseError(f"unknown output format(s): {', '.join(bad)}")
        self.out_dir = Path(self.out_dir)

    def as_dict(self) -> dict:
        return {
            "tol": self.tol,
            "samples": self.samples,
            "out": str(self.out_dir),
            "formats": list(self.formats),
        }


@dataclass(frozen=True)
class Material:
    """Parsed material: the bundle plus bookkeeping fields."""

    name: str
    kind: str
    units: str | None
    family: str | None
    bundle: PlyBundle


def bundled_material_names() -> list[str]:
    root = resources.files("auxetolam").joinpath("data")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_material(source: str | Path, tol: float = 1e-9) -> Material:
    """Load a material from a JSON file path or a bundled name."""
    path = Path(source)
    if not path.exists() and not str(source).endswith(".json"):
        candidate = resources.files("auxetolam").joinpath(f"data/{source}.json")
        if candidate.is_file():
            return parse_material(json.loads(candidate.read_text()), tol=tol)
        raise ParseError(
            f"no such file or bundled material: {source!r} "
            f"(bundled: {', '.join(bundled_material_names())})"
        )
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return parse_material(doc, tol=tol)


def _values(doc: dict, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    values = doc.get("values")
    if not isinstance(values, dict):
        raise ParseError("field 'values' must be an object")
    missing = [k for k in required if k not in values]
    if missing:
        raise ParseError(f"missing value field(s): {', '.join(missing)}")
    unknown = [k for k in values if k not in required + optional]
    if unknown:
        raise ParseError(f"unknown value field(s): {', '.join(unknown)}")
    out = {}
    for k, v in values.items():
        if k == "notation":
            out[k] = v
            continue
        if not isinstance(v, (int, float)) or isinstance(v, bool):
            raise ParseError(f"value field {k!r} must be a number, got {v!r}")
        out[k] = float(v)
    return out


def parse_material(doc: dict, tol: float = 1e-9) -> Material:
    """Build a :class:`Material` from a decoded JSON document."""
    if not isinstance(doc, dict):
        raise ParseError("material document must be a JSON object")
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise ParseError("field 'name' must be a non-empty string")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ParseError(f"field 'kind' must be one of {KINDS}, got {kind!r}")
    family = doc.get("family")
    if family is not None and family not in FAMILIES:
        raise ParseError(f"field 'family' must be one of {FAMILIES}, got {family!r}")
    try:
        if kind == "technical":
            v = _values(doc, ("e1", "e2", "nu12", "g12"))
            bundle = PlyBundle.from_moduli(
                TechnicalModuli(e1=v["e1"], e2=v["e2"], nu12=v["nu12"], g12=v["g12"]),
                tol=tol,
            )
        elif kind == "cartesian":
            v = _values(doc, ("q11", "q12", "q22", "q66"),
                        optional=("q16", "q26", "notation"))
            notation = v.get("notation", "kelvin")
            if notation not in ("kelvin", "voigt"):
                raise ParseError(f"notation must be 'kelvin' or 'voigt', got {notation!r}")
            q16 = v.get("q16", 0.0)
            q26 = v.get("q26", 0.0)
            q66 = v["q66"]
            if notation == "voigt":
                q66, q16, q26 = 2.0 * q66, SQRT2 * q16, SQRT2 * q26
            bundle = PlyBundle.from_cartesian(
                CartesianStiffness(q11=v["q11"], q12=v["q12"], q22=v["q22"],
                                   q66=q66, q16=q16, q26=q26),
                tol=tol,
            )
        elif kind == "polar":
            v = _values(doc, ("t0", "t1", "r0", "r1"), optional=("phi0_deg", "phi1_deg"))
            bundle = PlyBundle.from_polar(
                PolarStiffness(
                    t0=v["t0"], t1=v["t1"], r0=v["r0"], r1=v["r1"],
                    phi0=math.radians(v.get("phi0_deg", 0.0)),
                    phi1=math.radians(v.get("phi1_deg", 0.0)),
                ),
                tol=tol,
            )
        else:  # dimensionless
            if family is None:
                raise ParseError("kind 'dimensionless' requires the 'family' field")
            if family == "r0zero":
                v = _values(doc, ("tau", "sigma"), optional=("t0",))
                p = ply_r0zero(v["tau"], v["sigma"], t0=v.get("t0", 1.0))
            elif family == "r1zero":
                v = _values(doc, ("tau", "rho"), optional=("t0",))
                p = ply_r1zero(v["tau"], v["rho"], t0=v.get("t0", 1.0))
            else:
                v = _values(doc, ("tau", "rho"), optional=("t0",))
                p = ply_r0compliance(v["tau"], v["rho"], t0=v.get("t0", 1.0))
            bundle = PlyBundle.from_polar(p, tol=tol)
    except ParseError:
        raise
    except AuxetolamError as exc:
        raise type(exc)(f"material {name!r}: {exc}") from exc
    if family is None:
        family = detect_family(bundle, tol=tol)
    units = doc.get("units")
    if units is not None and not isinstance(units, str):
        raise ParseError("field 'units' must be a string")
    return Material(name=name, kind=kind, units=units, family=family, bundle=bundle)


def detect_family(bundle: PlyBundle, tol: float = 1e-9) -> str | None:
    """Map the detected symmetry class onto a special-orthotropy family."""
    sym = classify_symmetry(bundle.polar, tol=tol)
    if sym.kind == "R1-orthotropic":
        return "r1zero"
    if sym.kind == "R0-orthotropic":
        return "r0zero"
    if sym.kind == "r0-orthotropic":
        return "r0compliance"
    return None
