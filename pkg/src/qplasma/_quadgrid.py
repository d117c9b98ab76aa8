"""Shared grid machinery for the 3-D tensor quadratures.

The field direction P_n is the only nontrivial axis: the integrands carry a
complex pole at P_n = z/q sitting Im(z)/q above the real axis, which for the
collision rates of interest can be 1e-3 or closer.  Panels are refined
geometrically toward Re(pole) down to the pole's off-axis distance, then a
fixed-order Gauss-Legendre rule is mapped onto every panel.  Both the panel
count and the per-panel order scale with the requested per-axis node count,
so halving/doubling the grid moves the result through a measurable
convergence sequence instead of saturating instantly.
"""

from __future__ import annotations

import numpy as np
from scipy.special import roots_legendre

__all__ = ["RefinementError", "panel_nodes", "pole_refined_edges"]


class RefinementError(ArithmeticError):
    """Grid too coarse: results at n and 2n points disagree beyond tolerance."""


def pole_refined_edges(lo: float, hi: float, pole_re: float, pole_im: float,
                       n_panels: int) -> np.ndarray:
    """Panel edges on [lo, hi], geometrically refined around pole_re.

    Refinement shells shrink by factors of two from the base panel width
    down to the off-axis distance pole_im, where the integrand is smooth at
    the panel scale.
    """
    edges = set(np.linspace(lo, hi, n_panels + 1))
    base_width = (hi - lo) / n_panels
    if lo < pole_re < hi and pole_im < base_width:
        w = max(pole_im, 1e-9)
        while w < base_width:
            edges.add(min(hi, pole_re + w))
            edges.add(max(lo, pole_re - w))
            w *= 2.0
        edges.add(pole_re)
    out = np.array(sorted(edges))
    # drop near-duplicate edges produced by the clipping above
    keep = np.concatenate(([True], np.diff(out) > 1e-12))
    return out[keep]


def panel_nodes(edges: np.ndarray, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes and weights over the given panels."""
    xg, wg = roots_legendre(order)
    lo = edges[:-1][:, None]
    hi = edges[1:][:, None]
    half = 0.5 * (hi - lo)
    nodes = (0.5 * (hi + lo) + half * xg[None, :]).ravel()
    weights = (half * wg[None, :]).ravel()
    return nodes, weights
