"""Transverse conductivity and permittivity of a quantum collisional
Maxwellian plasma, with oracle-grade cross-validation.

Quick use::

    from qplasma import DimensionlessPoint, sigma_full
    print(sigma_full(DimensionlessPoint(x=0.1, y=0.01, q=0.5)).full)
"""

__version__ = "0.1.0"

from .conductivity import (
    ConsistencyError,
    epsilon_tr,
    sigma_classical,
    sigma_difference,
    sigma_full,
    sigma_k0,
    sigma_lindhard,
    sigma_quantum_parts,
    sigma_smallq,
    smallq_coefficients,
)
from .degeneracy import DegeneracyParams, fermi_f2, sigma_degenerate
from .dispersion import PolePairArgs, lambda_c, t_fn, t_pole_pair
from .oracle import (
    RefinementError,
    quantum_term_3d,
    resolve_sigma2_coefficient,
    sigma_3d_bruteforce,
)
from .params import (
    CGS,
    Constants,
    DimensionlessPoint,
    EvalSettings,
    InvalidParams,
    PhysicalParams,
    SigmaBreakdown,
    from_dimensionless,
    plasma_frequency,
    static_conductivity,
    to_dimensionless,
)
from .sweep import MODELS, SweepRow, SweepSpec, render_csv, render_json, run_sweep
from .verify import run_verify

__all__ = [
    "CGS",
    "Constants",
    "ConsistencyError",
    "DegeneracyParams",
    "DimensionlessPoint",
    "EvalSettings",
    "InvalidParams",
    "MODELS",
    "PhysicalParams",
    "PolePairArgs",
    "RefinementError",
    "SigmaBreakdown",
    "SweepRow",
    "SweepSpec",
    "epsilon_tr",
    "fermi_f2",
    "from_dimensionless",
    "lambda_c",
    "plasma_frequency",
    "quantum_term_3d",
    "render_csv",
    "render_json",
    "resolve_sigma2_coefficient",
    "run_sweep",
    "run_verify",
    "sigma_3d_bruteforce",
    "sigma_classical",
    "sigma_degenerate",
    "sigma_difference",
    "sigma_full",
    "sigma_k0",
    "sigma_lindhard",
    "sigma_quantum_parts",
    "sigma_smallq",
    "smallq_coefficients",
    "static_conductivity",
    "t_fn",
    "t_pole_pair",
    "to_dimensionless",
]
