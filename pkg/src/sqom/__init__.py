"""Squeezing-engineered optomechanical couplings for an OPA-driven
coupled-cavity system: two-stage mode transformations, regime
classification, phonon-laser gain/threshold, and an exact-diagonalization
oracle that cross-checks every closed form.
"""

from .branch_bs import BsCouplings, bs_couplings, rwa_validity_bs
from .branch_tms import TmsCouplings, rwa_validity_tms, tms_couplings
from .errors import (
    ConfigError,
    NegativeParameter,
    NonPositiveParameter,
    NumericalDegeneracy,
    SqomError,
    Stage1Unstable,
    TmsUnstable,
    ZeroCoupling,
)
from .laser import (
    LaserInput,
    LaserResult,
    PhononNumber,
    ThresholdResult,
    laser_point,
    mechanical_gain,
    phonon_number,
    threshold,
)
from .oracle import (
    CoefficientSet,
    LinearMap,
    QuadraticForm,
    SymplecticFrequencies,
    analytic_coefficients,
    build_photonic_form,
    conjugate_coupling,
    rwa_error_report,
    symplectic_frequencies,
)
from .params import (
    Config,
    PhysicalParams,
    ValidatedParams,
    canonical_delta_phi,
    load_config,
    parse_config,
    validate,
)
from .regime import Branch, RegimeReport, classify
from .stage1 import Stage1Result, squeeze_param, stage1_transform
from .sweep import (
    GridSpec,
    PipelineOptions,
    SweepSpec,
    analyze,
    evaluate_point,
    run_grid,
    run_sweep,
)
from .contours import ContourSet, extract_contours
from .validity import RwaTerm, ValidityReport

__all__ = [
    "Branch",
    "BsCouplings",
    "CoefficientSet",
    "Config",
    "ConfigError",
    "ContourSet",
    "GridSpec",
    "LaserInput",
    "LaserResult",
    "LinearMap",
    "NegativeParameter",
    "NonPositiveParameter",
    "NumericalDegeneracy",
    "PhononNumber",
    "PhysicalParams",
    "PipelineOptions",
    "QuadraticForm",
    "RegimeReport",
    "RwaTerm",
    "SqomError",
    "Stage1Result",
    "Stage1Unstable",
    "SweepSpec",
    "SymplecticFrequencies",
    "ThresholdResult",
    "TmsCouplings",
    "TmsUnstable",
    "ValidatedParams",
    "ValidityReport",
    "ZeroCoupling",
    "analytic_coefficients",
    "analyze",
    "bs_couplings",
    "build_photonic_form",
    "canonical_delta_phi",
    "classify",
    "conjugate_coupling",
    "evaluate_point",
    "extract_contours",
    "laser_point",
    "load_config",
    "mechanical_gain",
    "parse_config",
    "phonon_number",
    "run_grid",
    "run_sweep",
    "rwa_error_report",
    "rwa_validity_bs",
    "rwa_validity_tms",
    "squeeze_param",
    "stage1_transform",
    "symplectic_frequencies",
    "threshold",
    "tms_couplings",
    "validate",
]

__version__ = "0.1.0"
