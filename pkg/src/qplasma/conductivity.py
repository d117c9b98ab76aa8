"""Transverse conductivity of the collisional quantum Maxwellian plasma.

Everything is normalized by the static conductivity sigma0 and expressed in
the dimensionless coordinates (x, y, q), z = x + i*y, a = z/q:

    classic = -i (y/q) t(a)
    sigma1  =  i (y/x) lam(a)
    sigma2  =  i (y/(2x)) T(z, q),   T(z, q) = [t(a + q/2) - t(a - q/2)]/q
    full    = classic + sigma1 + sigma2

The sigma2 prefactor is y/(2x), not y/x: the pole-pair reduction of the
shifted-Gaussian term fixes the 1/2, and the 3-D brute-force integral in
the oracle module adjudicates the same factor numerically.

The Lindhard form with collisions inserted as omega -> omega + i*nu is
lindhard = i (y/x) + sigma2; it shares the quantum pole-pair term, so the
difference from `full` collapses to the closed form

    full - lindhard = -(y^2/(x q)) t(a),

which decays as q -> inf but does NOT vanish as q -> 0: the Lindhard limit
keeps only the collisionless i/(omega tau) and loses the dissipative real
part of the classical Drude response.

Each closed form has an independent 1-D quadrature route in the original
integration variables (denominator 1 - i*omega*tau + i*l*k*mu); sigma_full
always re-evaluates itself through that route and refuses to return when
the two disagree.
"""

from __future__ import annotations

import math

from .dispersion import (
    SQRT_PI,
    PolePairArgs,
    _GAUSS_SUPPORT,
    _pole_breakpoints,
    _quad_complex,
    t_fn,
    lambda_c,
    t_pole_pair,
)
from .params import (
    DEFAULT_SETTINGS,
    DimensionlessPoint,
    EvalSettings,
    InvalidParams,
    PhysicalParams,
    SigmaBreakdown,
    require_finite,
    to_dimensionless,
)

__all__ = [
    "ConsistencyError",
    "epsilon_tr",
    "sigma_classical",
    "sigma_difference",
    "sigma_full",
    "sigma_k0",
    "sigma_lindhard",
    "sigma_quantum_parts",
    "sigma_smallq",
    "smallq_coefficients",
]


class ConsistencyError(ArithmeticError):
    """Two independent evaluation routes disagreed beyond tolerance."""


def _pole(pt: DimensionlessPoint) -> complex:
    return pt.z / pt.q


def sigma_classical(pt: DimensionlessPoint,
                    settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Classical (recoil-free) part, -i (y/q) t(z/q)."""
    return require_finite(-1j * (pt.y / pt.q) * t_fn(_pole(pt), settings),
                          "sigma_classical")


def sigma_quantum_parts(pt: DimensionlessPoint,
                        settings: EvalSettings = DEFAULT_SETTINGS,
                        ) -> tuple[complex, complex]:
    """Both quantum terms: the drift term i(y/x) lam(z/q) and the recoil
    pole-pair term i(y/(2x)) T(z,q)."""
    a = _pole(pt)
    s1 = 1j * (pt.y / pt.x) * lambda_c(a, settings)
    s2 = 1j * (pt.y / (2.0 * pt.x)) * t_pole_pair(
        PolePairArgs(a, pt.q / 2.0), settings)
    return require_finite(s1, "sigma1"), require_finite(s2, "sigma2")


def sigma_full(pt: DimensionlessPoint,
               settings: EvalSettings = DEFAULT_SETTINGS) -> SigmaBreakdown:
    """Full breakdown at one point.

    The three-term sum is cross-checked against a single adaptive quadrature
    of the combined 1-D integrand; disagreement beyond
    max(tol_rel*|sum|, tol_abs) raises ConsistencyError instead of returning
    a number that the two routes cannot agree on.
    """
    classic = sigma_classical(pt, settings)
    s1, s2 = sigma_quantum_parts(pt, settings)
    total = classic + s1 + s2

    check = _full_1d_quadrature(pt, settings)
    if abs(total - check) > max(settings.tol_rel * abs(total), settings.tol_abs):
        raise ConsistencyError(
            f"closed form {total!r} vs 1-D quadrature {check!r} at "
            f"(x={pt.x:g}, y={pt.y:g}, q={pt.q:g})")

    return SigmaBreakdown(
        classic=classic,
        sigma1=s1,
        sigma2=s2,
        full=require_finite(total, "sigma_full"),
        lindhard=1j * (pt.y / pt.x) + s2,
        difference=sigma_difference(pt, settings),
    )


def sigma_smallq(pt: DimensionlessPoint,
                 settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Small-q approximant -i(y/q) t(a) - i(y/x) q^2 [1/2 + (a^2 - 3/2) lam(a)]."""
    a = _pole(pt)
    bracket = 0.5 + (a * a - 1.5) * lambda_c(a, settings)
    val = -1j * (pt.y / pt.q) * t_fn(a, settings) \
        - 1j * (pt.y / pt.x) * pt.q**2 * bracket
    return require_finite(val, "sigma_smallq")


def sigma_lindhard(pt: DimensionlessPoint,
                   settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Lindhard transverse conductivity with omega -> omega + i*nu,
    i(y/x) plus the shared quantum pole-pair term."""
    _, s2 = sigma_quantum_parts(pt, settings)
    return require_finite(1j * (pt.y / pt.x) + s2, "sigma_lindhard")


def sigma_difference(pt: DimensionlessPoint,
                     settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Closed form of full - lindhard: -(y^2/(x q)) t(z/q)."""
    val = -(pt.y**2 / (pt.x * pt.q)) * t_fn(_pole(pt), settings)
    return require_finite(val, "sigma_difference")


def sigma_k0(x: float, y: float) -> complex:
    """k = 0 limit of the classical term: 1/(1 - i x/y), the Drude form.

    Serves q -> 0, which DimensionlessPoint itself excludes.
    """
    if y <= 0:
        raise InvalidParams("y must be positive")
    return 1.0 / (1.0 - 1j * x / y)


def smallq_coefficients(x: float, y: float) -> dict[str, complex]:
    """Leading q-expansion of full/sigma0 at fixed (x, y).

    full = c0 + c2 q^2 + c4 q^4 + O(q^6); the quantum correction only enters
    at O(q^6), so these coefficients come from the large-argument series of
    t alone: c0 = i y/z, c2 = i y/(2 z^3), c4 = 3 i y/(4 z^5).
    """
    if y <= 0:
        raise InvalidParams("y must be positive")
    z = complex(x, y)
    return {
        "c0": 1j * y / z,
        "c2": 1j * y / (2.0 * z**3),
        "c4": 3j * y / (4.0 * z**5),
    }


def epsilon_tr(pt: DimensionlessPoint, p: PhysicalParams,
               settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Transverse permittivity, 1 + (4 pi i / omega) sigma_tr.

    pt must be the dimensionless image of p (checked to 1e-12 relative);
    passing an inconsistent pair silently mixes two parameter sets, so it
    is rejected.
    """
    image = to_dimensionless(p)
    for name in ("x", "y", "q"):
        have, want = getattr(pt, name), getattr(image, name)
        if abs(have - want) > 1e-12 * max(abs(want), 1.0):
            raise InvalidParams(
                f"pt.{name} = {have!r} does not match to_dimensionless(p)."
                f"{name} = {want!r}")
    sigma_hat = sigma_full(pt, settings).full
    val = 1.0 + 1j * (4.0 * math.pi * p.sigma0 / p.omega) * sigma_hat
    return require_finite(val, "epsilon_tr")


# ---------------------------------------------------------------------------
# 1-D quadrature routes (oracle paths; original integration variables)

def _denominator_pieces(pt: DimensionlessPoint):
    omega_tau = pt.x / pt.y
    lk = pt.q / pt.y

    def denom(mu: float) -> complex:
        return complex(1.0, lk * mu - omega_tau)

    return denom


def _kernel_quad(pt: DimensionlessPoint, settings: EvalSettings, kernel) -> complex:
    """Integrate kernel(mu)/(1 - i*omega*tau + i*l*k*mu) over the real line."""
    denom = _denominator_pieces(pt)
    pole = _pole(pt)
    radius = settings.truncation_radius
    if radius is None:
        radius = max(_GAUSS_SUPPORT + pt.q / 2.0,
                     abs(pole.real) + _GAUSS_SUPPORT)
    pts = [-_GAUSS_SUPPORT - pt.q / 2.0, 0.0, _GAUSS_SUPPORT + pt.q / 2.0]
    pts += _pole_breakpoints(pole, -radius, radius)
    return _quad_complex(lambda mu: kernel(mu) / denom(mu),
                         -radius, radius, pts) / SQRT_PI


def classic_1d_quadrature(pt: DimensionlessPoint,
                          settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Oracle for sigma_classical: (1/sqrt(pi)) int exp(-mu^2) / D(mu) dmu."""
    return _kernel_quad(pt, settings, lambda mu: math.exp(-mu * mu))


def sigma1_1d_quadrature(pt: DimensionlessPoint,
                         settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Oracle for sigma1: the drift moment -(q/x) (1/sqrt(pi)) int mu exp(-mu^2)/D."""
    c = -pt.q / pt.x
    return c * _kernel_quad(pt, settings, lambda mu: mu * math.exp(-mu * mu))


def _shifted_gauss_diff(mu: float, q: float) -> float:
    # exp(-q^2/4)(e^{q mu} - e^{-q mu}) e^{-mu^2} rewritten as a difference of
    # shifted Gaussians; the raw product overflows for q*mu beyond ~700.
    return math.exp(-(mu - q / 2.0) ** 2) - math.exp(-(mu + q / 2.0) ** 2)


def sigma2_1d_quadrature(pt: DimensionlessPoint,
                         settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Oracle for sigma2: the shifted-Gaussian (sinh kernel) moment."""
    c = 1.0 / (2.0 * pt.x)
    return c * _kernel_quad(pt, settings,
                            lambda mu: _shifted_gauss_diff(mu, pt.q))


def _full_1d_quadrature(pt: DimensionlessPoint, settings: EvalSettings) -> complex:
    q, x = pt.q, pt.x

    def kernel(mu: float) -> float:
        return ((1.0 - (q / x) * mu) * math.exp(-mu * mu)
                + _shifted_gauss_diff(mu, q) / (2.0 * x))

    return _kernel_quad(pt, settings, kernel)


def full_1d_quadrature(pt: DimensionlessPoint,
                       settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Oracle for sigma_full: single quadrature of the combined integrand."""
    return _full_1d_quadrature(pt, settings)


def moment3_quadrature(a: complex,
                       settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """(1/sqrt(pi)) int s(s^2 - 3/2) exp(-s^2)/(s - a) ds.

    Equals 1/2 + (a^2 - 3/2) lam(a) exactly; oracle for the sigma_smallq
    bracket.
    """
    if not (a.imag > 0):
        raise InvalidParams("Im(a) must be positive")
    radius = max(_GAUSS_SUPPORT, abs(a.real) + _GAUSS_SUPPORT)
    pts = [-_GAUSS_SUPPORT, 0.0, _GAUSS_SUPPORT]
    pts += _pole_breakpoints(a, -radius, radius)
    return _quad_complex(
        lambda s: s * (s * s - 1.5) * math.exp(-s * s) / (s - a),
        -radius, radius, pts) / SQRT_PI
