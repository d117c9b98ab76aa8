"""Parameter models: dimensional plasma inputs and the dimensionless evaluation point.

Units are Gaussian/CGS throughout (statC, g, erg, cm, s, K).  The response
formulas carry explicit 4*pi factors that only close in this system, e.g.
eps = 1 + 4*pi*i*sigma/omega, so no SI mode is offered.

Derived scales:
    v_T     = sqrt(2 k_B T / m)      thermal speed [cm/s]
    k_T     = m v_T / hbar           thermal wavenumber [1/cm]
    tau     = 1 / nu                 collision time [s]
    sigma0  = e^2 N0 / (m nu)        static conductivity [1/s]
    E_T     = m v_T^2 / 2            thermal energy [erg]
    omega_p = sqrt(4 pi e^2 N0 / m)  plasma frequency [rad/s]

The dimensionless coordinate of every response formula is (x, y, q) with
x = omega/(k_T v_T), y = nu/(k_T v_T), q = k/k_T and z = x + i*y.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "CGS",
    "Constants",
    "DimensionlessPoint",
    "EvalSettings",
    "InvalidParams",
    "PhysicalParams",
    "SigmaBreakdown",
    "X_MIN",
    "from_dimensionless",
    "plasma_frequency",
    "static_conductivity",
    "to_dimensionless",
]

# Quantum terms carry an explicit 1/x prefactor; |x| below this is rejected
# rather than regularized.  Negative x is allowed (response-reality checks),
# x = 0 never is.
X_MIN = 1e-8


class InvalidParams(ValueError):
    """Raised when a parameter set violates its domain constraints."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParams(msg)


def require_finite(value: complex, label: str) -> complex:
    """Guard: no NaN/Inf escapes a public operation."""
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ArithmeticError(f"{label} is not finite: {value!r}")
    return value


@dataclass(frozen=True)
class Constants:
    """Fundamental constants in CGS (2018 CODATA)."""

    e: float = 4.80320425e-10  # statC
    m: float = 9.1093837015e-28  # g
    hbar: float = 1.054571817e-27  # erg s
    k_B: float = 1.380649e-16  # erg/K
    c: float = 2.99792458e10  # cm/s


CGS = Constants()


@dataclass(frozen=True)
class PhysicalParams:
    """Dimensional plasma state: field frequency, collision rate, wavenumber,
    temperature and electron density."""

    omega: float  # rad/s
    nu: float  # 1/s
    k: float  # 1/cm
    temperature: float  # K
    density_n0: float  # 1/cm^3
    constants: Constants = field(default=CGS)

    def __post_init__(self) -> None:
        _require(self.omega > 0, "omega must be positive")
        _require(self.nu > 0, "nu must be positive")
        _require(self.k >= 0, "k must be non-negative")
        _require(self.temperature > 0, "temperature must be positive")
        _require(self.density_n0 > 0, "density_n0 must be positive")

    @property
    def v_T(self) -> float:
        c = self.constants
        return math.sqrt(2.0 * c.k_B * self.temperature / c.m)

    @property
    def k_T(self) -> float:
        return self.constants.m * self.v_T / self.constants.hbar

    @property
    def tau(self) -> float:
        return 1.0 / self.nu

    @property
    def sigma0(self) -> float:
        c = self.constants
        return c.e**2 * self.density_n0 / (c.m * self.nu)

    @property
    def thermal_energy(self) -> float:
        return 0.5 * self.constants.m * self.v_T**2

    @property
    def omega_p(self) -> float:
        c = self.constants
        return math.sqrt(4.0 * math.pi * c.e**2 * self.density_n0 / c.m)


@dataclass(frozen=True)
class DimensionlessPoint:
    """Evaluation coordinate (x, y, q) of every response formula.

    x = omega/(k_T v_T), y = nu/(k_T v_T), q = k/k_T.  y and q must be
    positive; |x| must exceed X_MIN (the quantum terms carry 1/x).  Negative
    x is admitted so the reality symmetry sigma(-x) = conj(sigma(x)) can be
    checked through the public API; physical inputs always map to x > 0.
    """

    x: float
    y: float
    q: float

    def __post_init__(self) -> None:
        for name in ("x", "y", "q"):
            v = getattr(self, name)
            _require(math.isfinite(v), f"{name} must be finite")
        _require(self.y > 0, "y must be positive (collisional plasma)")
        _require(self.q > 0, "q must be positive; use sigma_k0 for the k=0 limit")
        _require(abs(self.x) >= X_MIN, f"|x| must be >= {X_MIN:g} (1/x prefactor)")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @property
    def omega_tau(self) -> float:
        return self.x / self.y

    @property
    def lk(self) -> float:
        return self.q / self.y


@dataclass(frozen=True)
class EvalSettings:
    """Numerical evaluation controls.

    backend selects how the dispersion functions are computed: "rational"
    (fast analytic evaluation) or "quadrature" (adaptive integration, the
    oracle path).  truncation_radius=None lets each integral pick the
    pole-aware default.  tol_abs is the absolute floor used alongside
    tol_rel whenever two routes to the same number are compared.
    """

    tol_rel: float = 1e-10
    tol_abs: float = 1e-12
    truncation_radius: float | None = None
    backend: str = "rational"
    grid_n_3d: int = 96

    def __post_init__(self) -> None:
        _require(self.tol_rel > 0, "tol_rel must be positive")
        _require(self.tol_abs > 0, "tol_abs must be positive")
        _require(
            self.backend in ("rational", "quadrature"),
            "backend must be 'rational' or 'quadrature'",
        )
        _require(self.grid_n_3d >= 16, "grid_n_3d must be >= 16")
        if self.truncation_radius is not None:
            _require(self.truncation_radius > 0, "truncation_radius must be positive")


DEFAULT_SETTINGS = EvalSettings()


@dataclass(frozen=True)
class SigmaBreakdown:
    """All conductivity pieces at one point, in units of sigma0.

    full = classic + sigma1 + sigma2 and difference = full - lindhard hold
    by construction; both are re-verified against independent quadrature in
    the test suite.
    """

    classic: complex
    sigma1: complex
    sigma2: complex
    full: complex
    lindhard: complex
    difference: complex


def to_dimensionless(p: PhysicalParams) -> DimensionlessPoint:
    """Map dimensional inputs onto (x, y, q) using the thermal scales."""
    scale = p.k_T * p.v_T
    return DimensionlessPoint(x=p.omega / scale, y=p.nu / scale, q=p.k / p.k_T)


def from_dimensionless(pt: DimensionlessPoint, temperature: float,
                       density_n0: float,
                       constants: Constants = CGS) -> PhysicalParams:
    """Reconstruct dimensional inputs realizing pt at the given plasma state.

    Inverse of to_dimensionless once (k_T, v_T) are fixed by temperature.
    """
    _require(pt.x > 0, "physical omega requires x > 0")
    probe = PhysicalParams(omega=1.0, nu=1.0, k=0.0, temperature=temperature,
                           density_n0=density_n0, constants=constants)
    scale = probe.k_T * probe.v_T
    return PhysicalParams(omega=pt.x * scale, nu=pt.y * scale,
                          k=pt.q * probe.k_T, temperature=temperature,
                          density_n0=density_n0, constants=constants)


def static_conductivity(p: PhysicalParams) -> float:
    """sigma0 = e^2 N0 / (m nu), the static (Drude) conductivity."""
    return p.sigma0


def plasma_frequency(p: PhysicalParams) -> float:
    """omega_p = sqrt(4 pi e^2 N0 / m)."""
    return p.omega_p
