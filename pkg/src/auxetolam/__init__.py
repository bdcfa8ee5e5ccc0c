"""Auxetic composite laminates from specially orthotropic plies.

Library layers:

* :mod:`auxetolam.polar` - Kelvin/polar tensor conversions, compliance,
  symmetry detection;
* :mod:`auxetolam.ply` - technical moduli, dimensionless parameters and
  the three special-family constructors;
* :mod:`auxetolam.laminate` - lamination parameters and extension
  homogenization;
* :mod:`auxetolam.auxetic` - TAAL/PAAL classification, region tests,
  extremal Poisson's ratios, zone optimization;
* :mod:`auxetolam.micromech` - rule-of-mixtures constructions and
  existence-domain scans;
* :mod:`auxetolam.cli` - the ``auxetolam`` command.
"""

__version__ = "0.1.0"

from .auxetic import (
    AuxeticityReport,
    BoundsCheck,
    RegionResult,
    ZoneOptimum,
    auxetic_zone_r0zero,
    classify,
    equivalent_bounds_r0zero,
    equivalent_bounds_r1zero,
    maximize_auxetic_zone_r1zero,
    min_nu_r0zero,
    min_nu_r1zero,
    nu12_profile,
    r0_auxetic_ply,
    r0_laminate_design,
    region_r0zero,
    region_r1zero_paal,
    region_r1zero_taal,
)
from .errors import AuxetolamError
from .io import Material, RunConfig, load_material
from .laminate import (
    LaminationPoint,
    StackingSequence,
    homogenize,
    homogenize_point,
    lamination_parameters,
    make_angle_ply,
    make_quasi_isotropic,
    miki_feasible,
    preserves_special_symmetry,
    r0_preserving_constraint,
)
from .micromech import (
    Constituents,
    GridSpec,
    ScanResult,
    balanced_fabric_ply,
    existence_scan,
    r0_ply_from_crossply45,
    rule_of_mixtures,
)
from .ply import (
    DimensionlessPly,
    PlyBundle,
    TechnicalModuli,
    dimensionless,
    moduli_to_stiffness,
    ply_r0compliance,
    ply_r0zero,
    ply_r1zero,
    stiffness_to_moduli,
)
from .polar import (
    CartesianStiffness,
    PolarCompliance,
    PolarStiffness,
    SymmetryClass,
    cartesian_to_polar,
    classify_symmetry,
    compliance_numeric,
    compliance_polar_full,
    compliance_polar_partial,
    polar_delta,
    polar_to_cartesian,
)
