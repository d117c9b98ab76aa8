"""Conductivity at arbitrary electron degeneracy by 3-D quadrature.

The Fermi-weighted momentum integral generalizes the Maxwellian form: the
Gaussian weight becomes g(P) = e^{P^2-a}/(1+e^{P^2-a})^2, the shifted
Gaussians become shifted Fermi occupations f+(P), f-(P) with the same
-/+ q/2 momentum shifts, and the normalization 1/pi^{3/2} becomes
1/(4 pi f2(a)) with f2 the order-2 Fermi integral.  As the reduced chemical
potential a -> -inf all three weights collapse onto their Maxwellian
counterparts and the result must approach sigma_full; that limit is the
module's acceptance anchor.

All exponentials are evaluated in overflow-safe forms (logistic for the
occupations, sech^2 for g), so the practical range |a| <= 40 never leaves
double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import expit, roots_legendre

from ._quadgrid import RefinementError, panel_nodes, pole_refined_edges
from .params import (
    DEFAULT_SETTINGS,
    DimensionlessPoint,
    EvalSettings,
    InvalidParams,
    require_finite,
)

__all__ = [
    "DegeneracyParams",
    "fermi_f2",
    "fermi_norm_3d",
    "fermi_occupation",
    "fermi_weight_g",
    "sigma_degenerate",
]

ALPHA_RANGE = 40.0

# n-vs-2n agreement demanded of sigma_degenerate before a value is returned.
SELF_CHECK_TOL = 1e-3

_PN_CHUNK = 32


@dataclass(frozen=True)
class DegeneracyParams:
    """Reduced chemical potential alpha = mu / (k_B T)."""

    alpha: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.alpha) or abs(self.alpha) > ALPHA_RANGE:
            raise InvalidParams(f"alpha must be finite with |alpha| <= {ALPHA_RANGE:g}")


def fermi_occupation(p_sq, alpha: float):
    """Fermi factor 1/(1 + exp(p_sq - alpha)); accepts arrays."""
    return expit(alpha - np.asarray(p_sq, dtype=float))


def fermi_weight_g(p_sq, alpha: float):
    """g = e^{u}/(1+e^{u})^2 with u = p_sq - alpha, via the stable
    e^{-|u|}/(1+e^{-|u|})^2 form."""
    u = np.abs(np.asarray(p_sq, dtype=float) - alpha)
    e = np.exp(-u)
    return e / (1.0 + e) ** 2


def fermi_f2(d: DegeneracyParams,
             settings: EvalSettings = DEFAULT_SETTINGS) -> float:
    """Order-2 Fermi integral int_0^inf s^2 / (1 + exp(s^2 - alpha)) ds."""
    alpha = d.alpha
    upper = math.sqrt(max(alpha, 0.0)) + 12.0
    pts = [math.sqrt(alpha)] if alpha > 0 else None
    val, _ = quad(lambda s: s * s * expit(alpha - s * s), 0.0, upper,
                  points=pts, epsabs=0.0, epsrel=1e-12, limit=200)
    return val


def _grid(pt: DimensionlessPoint, alpha: float, n_axis: int):
    span = math.sqrt(max(alpha, 0.0)) + 10.0
    pole = pt.z / pt.q
    half = span + pt.q / 2.0
    edges = pole_refined_edges(-half, half, pole.real, pole.imag,
                               n_panels=max(10, n_axis // 8))
    if alpha > 0.5:
        # resolve the Fermi edge at |P_n| ~ sqrt(alpha)
        edge = math.sqrt(alpha)
        extra = [s * (edge + d) for s in (-1.0, 1.0) for d in (-0.8, -0.4, -0.2, 0.0, 0.2, 0.4, 0.8)]
        edges = np.array(sorted(set(edges) | {e for e in extra if -half < e < half}))
    pn, wn = panel_nodes(edges, max(2, n_axis // 8))
    xg, wg = roots_legendre(n_axis)
    tg = span * xg
    wg = span * wg
    return pn, wn, tg, wg


def _integral(pt: DimensionlessPoint, alpha: float, n_axis: int) -> complex:
    q, x, y = pt.q, pt.x, pt.y
    pn, wn, tg, wg = _grid(pt, alpha, n_axis)
    perp2 = tg[:, None] ** 2 + tg[None, :] ** 2
    wperp = wg[:, None] * wg[None, :]

    total = 0.0 + 0.0j
    for start in range(0, pn.size, _PN_CHUNK):
        a = pn[start:start + _PN_CHUNK][:, None, None]
        w = wn[start:start + _PN_CHUNK][:, None, None]
        p_sq = a ** 2 + perp2
        f_plus = fermi_occupation((a - q / 2.0) ** 2 + perp2, alpha)
        f_minus = fermi_occupation((a + q / 2.0) ** 2 + perp2, alpha)
        numer = ((1.0 - (q / x) * a) * fermi_weight_g(p_sq, alpha)
                 + (f_plus - f_minus) / (2.0 * x))
        denom = 1.0 - 1j * (x / y) + 1j * (q / y) * a
        total += np.sum(w * numer / denom * perp2 * wperp)
    return total


def sigma_degenerate(pt: DimensionlessPoint, d: DegeneracyParams,
                     settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """sigma/sigma0 at degeneracy alpha, from the 3-D Fermi integral."""
    if settings.grid_n_3d < 48:
        raise InvalidParams("sigma_degenerate needs grid_n_3d >= 48")
    norm = 4.0 * math.pi * fermi_f2(d, settings)
    n = settings.grid_n_3d
    coarse = _integral(pt, d.alpha, n) / norm
    fine = _integral(pt, d.alpha, 2 * n) / norm
    scale = max(abs(fine), abs(coarse), 1e-300)
    if abs(fine - coarse) > SELF_CHECK_TOL * scale:
        raise RefinementError(
            f"sigma_degenerate: grid {n} vs {2 * n} differ by "
            f"{abs(fine - coarse) / scale:.2e} (> {SELF_CHECK_TOL:g}) at "
            f"(x={pt.x:g}, y={pt.y:g}, q={pt.q:g}, alpha={d.alpha:g})")
    return require_finite(fine, "sigma_degenerate")


def fermi_norm_3d(pt: DimensionlessPoint, d: DegeneracyParams,
                  settings: EvalSettings = DEFAULT_SETTINGS) -> float:
    """int f_F(P) d^3P on the same tensor grid sigma_degenerate uses.

    Consistency target: 4 pi f2(alpha) from the radial reduction.
    """
    pn, wn, tg, wg = _grid(pt, d.alpha, settings.grid_n_3d)
    perp2 = tg[:, None] ** 2 + tg[None, :] ** 2
    wperp = wg[:, None] * wg[None, :]
    total = 0.0
    for start in range(0, pn.size, _PN_CHUNK):
        a = pn[start:start + _PN_CHUNK][:, None, None]
        w = wn[start:start + _PN_CHUNK][:, None, None]
        total += float(np.sum(w * fermi_occupation(a ** 2 + perp2, d.alpha) * wperp))
    return total
