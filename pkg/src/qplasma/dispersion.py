"""Dispersion functions on the upper half-plane.

Three ingredients feed every reduced conductivity formula:

    t(z)    = (1/sqrt(pi)) int exp(-s^2) / (s - z) ds        (Im z > 0)
    lam(z)  = 1 + z t(z)  = (1/sqrt(pi)) int s exp(-s^2)/(s - z) ds
    T(a, b) = (1/sqrt(pi)) int exp(-s^2) / ((s - a)^2 - b^2) ds

t is the Cauchy transform of the unit Gaussian (the plasma dispersion
function); T carries the quantum recoil poles at a +/- b.  Two backends are
provided: "rational" evaluates t(z) = i sqrt(pi) w(z) through the Faddeeva
function and T through the partial-fraction identity
T(a,b) = [t(a+b) - t(a-b)]/(2b); "quadrature" integrates the defining
integrals adaptively and serves as the independent oracle.

Only Im z > 0 is supported; the collisional formulas never leave it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad
from scipy.special import wofz

from .params import DEFAULT_SETTINGS, EvalSettings, InvalidParams, require_finite

__all__ = ["PolePairArgs", "lambda_c", "t_fn", "t_pole_pair"]

SQRT_PI = math.sqrt(math.pi)

# Adaptive-quadrature targets for the oracle backend.  Kept tighter than any
# advertised tolerance so backend comparisons measure the analytic path.
_QUAD_EPSABS = 1e-14
_QUAD_EPSREL = 1e-13
_QUAD_LIMIT = 800

# Gaussian tail: exp(-64) ~ 1.6e-28, negligible against _QUAD_EPSABS.
_GAUSS_SUPPORT = 8.0


@dataclass(frozen=True)
class PolePairArgs:
    """Pole-pair coordinates for T: center a (upper half-plane) and real
    half-separation b > 0, so the poles sit at a - b and a + b."""

    a: complex
    b: float

    def __post_init__(self) -> None:
        if not (self.a.imag > 0):
            raise InvalidParams("PolePairArgs: Im(a) must be positive")
        if not (self.b > 0):
            raise InvalidParams("PolePairArgs: b must be positive")


def _check_upper(z: complex) -> complex:
    z = complex(z)
    if not (z.imag > 0):
        raise InvalidParams(f"Im(z) must be positive, got z = {z!r}")
    return z


def _quad_complex(f, lo: float, hi: float, points) -> complex:
    pts = sorted({p for p in points if lo < p < hi})
    re, _ = quad(lambda s: f(s).real, lo, hi, points=pts or None,
                 epsabs=_QUAD_EPSABS, epsrel=_QUAD_EPSREL, limit=_QUAD_LIMIT,
                 full_output=1)[:2]
    im, _ = quad(lambda s: f(s).imag, lo, hi, points=pts or None,
                 epsabs=_QUAD_EPSABS, epsrel=_QUAD_EPSREL, limit=_QUAD_LIMIT,
                 full_output=1)[:2]
    return complex(re, im)


def _pole_breakpoints(pole: complex, lo: float, hi: float) -> list[float]:
    """Breakpoints steering the adaptive scheme into the near-pole region.

    The integrand is analytic (the pole sits Im(pole) above the axis), but
    for small Im(pole) it varies on that scale around Re(pole); subdividing
    inside the 10*Im(pole) window keeps the panels resolved.
    """
    pr, pi = pole.real, pole.imag
    pts = [pr]
    if pi < 0.1:
        w = 10.0 * pi
        pts += [pr - w, pr + w]
    return [p for p in pts if lo < p < hi]


def t_fn(z: complex, settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Cauchy transform of the unit Gaussian at z, Im z > 0."""
    z = _check_upper(z)
    if settings.backend == "rational":
        val = 1j * SQRT_PI * wofz(z)
    else:
        val = _t_quadrature(z, settings, moment=0)
    return require_finite(val, "t(z)")


def lambda_c(z: complex, settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """First-moment transform 1 + z t(z).

    On the quadrature backend this integrates the s-weighted kernel
    directly, giving an evaluation independent of t_fn.
    """
    z = _check_upper(z)
    if settings.backend == "rational":
        val = 1.0 + z * (1j * SQRT_PI * wofz(z))
    else:
        val = _t_quadrature(z, settings, moment=1)
    return require_finite(val, "lambda_c(z)")


def t_pole_pair(args: PolePairArgs,
                settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """T(a, b): Gaussian integrated against 1/((s-a)^2 - b^2).

    The rational backend uses the exact partial-fraction split
    [t(a+b) - t(a-b)]/(2b); the quadrature backend integrates the pole-pair
    kernel directly and is the oracle for that identity.
    """
    a, b = args.a, args.b
    if settings.backend == "rational":
        val = (t_fn(a + b, settings) - t_fn(a - b, settings)) / (2.0 * b)
    else:
        radius = settings.truncation_radius
        if radius is None:
            radius = max(_GAUSS_SUPPORT, abs(a.real) + _GAUSS_SUPPORT * (1.0 + b))
        pts = [-_GAUSS_SUPPORT, 0.0, _GAUSS_SUPPORT]
        for pole in (a - b, a + b):
            pts += _pole_breakpoints(pole, -radius, radius)

        def kernel(s: float) -> complex:
            return math.exp(-s * s) / ((s - a) ** 2 - b * b)

        val = _quad_complex(kernel, -radius, radius, pts) / SQRT_PI
    return require_finite(val, "T(a,b)")


def _t_quadrature(z: complex, settings: EvalSettings, moment: int) -> complex:
    radius = settings.truncation_radius
    if radius is None:
        radius = max(_GAUSS_SUPPORT, abs(z.real) + _GAUSS_SUPPORT)
    pts = [-_GAUSS_SUPPORT, 0.0, _GAUSS_SUPPORT]
    pts += _pole_breakpoints(z, -radius, radius)

    if moment == 0:
        def kernel(s: float) -> complex:
            return math.exp(-s * s) / (s - z)
    else:
        def kernel(s: float) -> complex:
            return s * math.exp(-s * s) / (s - z)

    return _quad_complex(kernel, -radius, radius, pts) / SQRT_PI
