"""Whole-library verification suite.

Every identity, limit and cross-route agreement promised by the public
operations is exercised here and reported as one pass/fail line with the
measured residual: dispersion identities, the three-way reduction chain
(closed form / 1-D quadrature / 3-D brute force), the Lindhard difference
identity, the quantum-coefficient adjudication, the degeneracy limit, the
symmetry and positivity properties, and the figure-level coincidence
claims.  The report is plain text; the CLI turns overall failure into a
nonzero exit status.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import conductivity as cond
from . import degeneracy as deg
from . import oracle
from .dispersion import PolePairArgs, t_fn, t_pole_pair, lambda_c
from .params import (
    DEFAULT_SETTINGS,
    DimensionlessPoint,
    EvalSettings,
    from_dimensionless,
    to_dimensionless,
)
from .sweep import SweepSpec, render_csv, run_sweep

__all__ = [
    "CheckResult",
    "VerifyReport",
    "acceptance_grid",
    "run_verify",
    "upper_half_plane_grid",
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    measured: float
    requirement: str
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  [{self.detail}]" if self.detail else ""
        return (f"[{status}] {self.name}: measured={self.measured:.3e} "
                f"require {self.requirement}{extra}")


@dataclass
class VerifyReport:
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [c.line() for c in self.checks]
        n_fail = sum(not c.passed for c in self.checks)
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


def upper_half_plane_grid(n_radii: int = 10, n_angles: int = 10) -> list[complex]:
    """Deterministic Im z > 0 grid covering small, near-axis and large |z|."""
    radii = np.geomspace(0.05, 20.0, n_radii)
    angles = np.linspace(0.05 * np.pi, 0.95 * np.pi, n_angles)
    return [complex(r * math.cos(t), r * math.sin(t))
            for r in radii for t in angles]


def acceptance_grid() -> list[DimensionlessPoint]:
    """The 27-point (x, y, q) product grid used by the cross-route checks."""
    return [DimensionlessPoint(x, y, q)
            for x in (0.001, 0.1, 1.0)
            for y in (0.005, 0.01, 0.05)
            for q in (0.1, 0.5, 2.0)]


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def _spread(values: np.ndarray) -> float:
    return float((values.max() - values.min()) / np.abs(values).max())


def run_verify(settings: EvalSettings = DEFAULT_SETTINGS,
               agreement_tol: float | None = None) -> VerifyReport:
    """Run every check; agreement_tol, when given, replaces the tolerance of
    the quadrature/backend agreement checks so that tightening it exposes
    the true residuals."""
    checks: list[CheckResult] = []
    rat = replace(settings, backend="rational")
    quad = replace(settings, backend="quadrature")

    def tunable(default: float) -> float:
        return agreement_tol if agreement_tol is not None else default

    def add(name, passed, measured, requirement, detail=""):
        checks.append(CheckResult(name, bool(passed), float(measured),
                                  requirement, detail))

    # -- dispersion identities -------------------------------------------
    zgrid = upper_half_plane_grid()

    worst = max(abs(lambda_c(z, rat) - 1.0 - z * t_fn(z, rat)) for z in zgrid)
    add("lambda_identity_rational", worst <= 1e-13, worst, "<= 1e-13")

    worst = max(abs(lambda_c(z, quad) - 1.0 - z * t_fn(z, quad)) for z in zgrid)
    add("lambda_identity_quadrature", worst <= 1e-13, worst, "<= 1e-13")

    tol = tunable(1e-10)
    bvals = (0.05, 0.25, 1.0, 4.0)
    worst = 0.0
    for i, z in enumerate(zgrid):
        args = PolePairArgs(z, bvals[i % len(bvals)])
        direct = t_pole_pair(args, quad)
        split = t_pole_pair(args, rat)
        worst = max(worst, _rel(direct, split))
    add("pole_pair_identity", worst <= tol, worst, f"<= {tol:g}",
        "direct quadrature vs t-difference split")

    min_im = min(t_fn(z, rat).imag for z in zgrid)
    add("nevanlinna_property", min_im > 0, min_im, "> 0",
        "Im t(z) > 0 on the upper half-plane")

    worst = max(abs(t_fn(complex(-z.real, z.imag), rat)
                    + t_fn(z, rat).conjugate()) for z in zgrid)
    add("reflection_symmetry", worst <= 1e-13, worst, "<= 1e-13",
        "t(-conj z) = -conj t(z)")

    tol = tunable(1e-10)
    worst = max(_rel(t_fn(z, quad), t_fn(z, rat)) for z in zgrid)
    add("backend_agreement", worst <= tol, worst, f"<= {tol:g}")

    # -- conductivity reductions on the 27-point grid ---------------------
    grid = acceptance_grid()
    breakdown = {pt: cond.sigma_full(pt, rat) for pt in grid}
    brute = {pt: oracle.sigma_3d_bruteforce(pt, settings) for pt in grid}

    worst = max(_rel(b.classic + b.sigma1 + b.sigma2, b.full)
                for b in breakdown.values())
    add("decomposition", worst <= 1e-12, worst, "<= 1e-12")

    tol = tunable(1e-9)
    worst = max(_rel(cond.full_1d_quadrature(pt, rat), b.full)
                for pt, b in breakdown.items())
    add("reduction_1d", worst <= tol, worst, f"<= {tol:g}",
        "closed three-term form vs combined 1-D quadrature")

    worst = max(_rel(brute[pt], b.full) for pt, b in breakdown.items())
    add("reduction_3d", worst <= 1e-4, worst, "<= 1e-4",
        "closed form vs 3-D brute force")

    tol = tunable(1e-10)
    worst = max(_rel(b.full - b.lindhard, b.difference)
                for b in breakdown.values())
    add("difference_identity", worst <= tol, worst, f"<= {tol:g}",
        "full - lindhard vs -(y^2/xq) t(z/q)")

    diffs = [abs(cond.sigma_full(DimensionlessPoint(0.1, 0.01, q), rat).full
                 - cond.sigma_lindhard(DimensionlessPoint(0.1, 0.01, q), rat))
             for q in (2.0, 4.0, 8.0, 16.0)]
    ratio = max(b / a for a, b in zip(diffs, diffs[1:]))
    add("difference_monotone", ratio < 1.0, ratio, "< 1",
        "|full - lindhard| decreasing along q = 2,4,8,16")

    # -- k = 0 and small-q limits -----------------------------------------
    worst = max(
        _rel(cond.sigma_classical(DimensionlessPoint(x, y, 1e-6), rat),
             cond.sigma_k0(x, y))
        for x, y in ((0.1, 0.01), (1.0, 0.1)))
    add("k0_closed_form", worst <= 1e-8, worst, "<= 1e-8",
        "classic at q=1e-6 vs Drude form")

    pts = [DimensionlessPoint(0.1, 0.01, q) for q in (0.2, 0.1, 0.05)]
    dc = [abs(breakdown_pt.full - breakdown_pt.classic)
          for breakdown_pt in (cond.sigma_full(p, rat) for p in pts)]
    min_ratio = min(dc[0] / dc[1], dc[1] / dc[2])
    add("classical_limit_ratio", min_ratio >= 4.0, min_ratio, ">= 4",
        "|full - classic| shrinking by >= 4x per q halving")

    ds = [abs(cond.sigma_full(p, rat).full - cond.sigma_smallq(p, rat))
          for p in pts]
    ratio = max(b / a for a, b in zip(ds, ds[1:]))
    add("smallq_error_ordering", ratio < 1.0, ratio, "< 1",
        "|full - smallq| decreasing along q = 0.2,0.1,0.05")

    tol = tunable(1e-10)
    a = complex(0.1, 0.01) / 0.05
    lhs = cond.moment3_quadrature(a, rat)
    rhs = 0.5 + (a * a - 1.5) * lambda_c(a, rat)
    add("smallq_bracket_identity", _rel(lhs, rhs) <= tol, _rel(lhs, rhs),
        f"<= {tol:g}", "third-moment quadrature vs closed bracket")

    p_small = DimensionlessPoint(0.1, 0.01, 1e-3)
    gap = abs(cond.sigma_smallq(p_small, rat) - cond.sigma_classical(p_small, rat))
    add("smallq_to_classic", gap <= 1e-12, gap, "<= 1e-12",
        "q^2 correction vanishes at q = 1e-3")

    gap = _rel(cond.sigma_lindhard(p_small, rat), cond.sigma_k0(0.1, 0.01))
    add("lindhard_wrong_k0_limit", gap > 0.05, gap, "> 0.05",
        "Lindhard q->0 limit must NOT reproduce the classical Drude form")

    # -- quantum coefficient adjudication ----------------------------------
    cs = [oracle.resolve_sigma2_coefficient(DimensionlessPoint(0.1, 0.01, 0.5),
                                            settings),
          oracle.resolve_sigma2_coefficient(DimensionlessPoint(0.001, 0.01, 2.0),
                                            settings)]
    worst = max(abs(c - 0.5) for c in cs)
    add("sigma2_coefficient", worst <= 1e-3, worst, "<= 1e-3",
        f"fits: {cs[0]:.6f}, {cs[1]:.6f}")

    pt = DimensionlessPoint(0.1, 0.01, 0.5)
    b = breakdown[pt]
    mut_full = b.classic + b.sigma1 + 2.0 * b.sigma2
    mut_lind = 1j * (pt.y / pt.x) + 2.0 * b.sigma2
    ident = _rel(mut_full - mut_lind, b.difference)
    brute_dev = _rel(mut_full, brute[pt])
    add("sigma2_mutation_isolated", ident <= 1e-10 and brute_dev > 1e-3,
        brute_dev, "> 1e-3",
        f"doubled sigma2: difference identity residual {ident:.2e} still "
        "passes; only the 3-D oracle catches the mutation")

    # -- degeneracy ---------------------------------------------------------
    st48 = replace(settings, grid_n_3d=max(48, min(settings.grid_n_3d, 64)))
    full_ref = breakdown[pt].full
    sd = deg.sigma_degenerate(pt, deg.DegeneracyParams(-20.0), st48)
    add("degeneracy_limit", _rel(sd, full_ref) <= 1e-3, _rel(sd, full_ref),
        "<= 1e-3", "alpha = -20 vs Maxwellian full")

    f2 = deg.fermi_f2(deg.DegeneracyParams(-30.0), settings)
    want = math.exp(-30.0) * math.sqrt(math.pi) / 4.0
    add("f2_maxwell_limit", abs(f2 - want) / want <= 1e-10,
        abs(f2 - want) / want, "<= 1e-10")

    dd = [abs(deg.sigma_degenerate(pt, deg.DegeneracyParams(a), st48) - full_ref)
          for a in (-5.0, -10.0, -20.0)]
    ratio = max(b / a for a, b in zip(dd, dd[1:]))
    add("degeneracy_monotone", ratio < 1.0, ratio, "< 1",
        "|degenerate - full| decreasing along alpha = -5,-10,-20")

    lhs = deg.fermi_weight_g(1.0, -25.0) / (4.0 * math.pi
                                            * deg.fermi_f2(deg.DegeneracyParams(-25.0)))
    rhs = math.exp(-1.0) / math.pi**1.5
    add("limiting_weights", abs(lhs - rhs) / rhs <= 1e-8, abs(lhs - rhs) / rhs,
        "<= 1e-8", "g/(4 pi f2) -> Gaussian weight at alpha = -25, P = 1")

    worst = 0.0
    for alpha in (-5.0, 0.0):
        d = deg.DegeneracyParams(alpha)
        n3 = deg.fermi_norm_3d(pt, d, settings)
        n1 = 4.0 * math.pi * deg.fermi_f2(d, settings)
        worst = max(worst, abs(n3 - n1) / n1)
    add("fermi_norm_consistency", worst <= 1e-6, worst, "<= 1e-6",
        "3-D grid integral of f_F vs 4 pi f2")

    # -- symmetry and positivity -------------------------------------------
    tol = tunable(1e-10)
    worst = 0.0
    for p in grid:
        mirrored = DimensionlessPoint(-p.x, p.y, p.q)
        pairs = (
            (cond.sigma_classical(mirrored, rat), breakdown[p].classic),
            (cond.sigma_full(mirrored, rat).full, breakdown[p].full),
            (cond.sigma_lindhard(mirrored, rat), breakdown[p].lindhard),
        )
        worst = max(worst, max(_rel(m, v.conjugate()) for m, v in pairs))
    add("reality_symmetry", worst <= tol, worst, f"<= {tol:g}",
        "sigma(-x, y, q) = conj(sigma(x, y, q))")

    min_re = min(b.classic.real for b in breakdown.values())
    add("classic_positivity", min_re > 0, min_re, "> 0")

    # -- figure-level claims -------------------------------------------------
    p05 = DimensionlessPoint(0.1, 0.01, 0.05)
    rel05 = _rel(cond.sigma_full(p05, rat).full, cond.sigma_classical(p05, rat))
    peak = max(
        _rel(cond.sigma_full(DimensionlessPoint(0.1, 0.01, q), rat).full,
             cond.sigma_classical(DimensionlessPoint(0.1, 0.01, q), rat))
        for q in np.geomspace(0.12, 0.95, 13))
    add("figure_q_interval", rel05 <= 0.02 and peak >= 0.10, peak, ">= 0.10",
        f"quantum correction {rel05:.2e} at q=0.05 (<= 2e-2) and "
        f"{peak:.2e} peak inside 0.1 < q < 1")

    re_vals = np.array([cond.sigma_full(DimensionlessPoint(25.0, 0.01, q), rat)
                        .full.real for q in (2.0, 3.0, 4.0)])
    add("figure_x_re_spread", _spread(re_vals) <= 0.05, _spread(re_vals),
        "<= 0.05", "Re spread across q = 2,3,4 at x = 25")

    im_vals = np.array([cond.sigma_full(DimensionlessPoint(12.0, 0.01, q), rat)
                        .full.imag for q in (2.0, 3.0, 4.0)])
    add("figure_x_im_spread", _spread(im_vals) <= 0.05, _spread(im_vals),
        "<= 0.05", "Im spread across q = 2,3,4 at x = 12")

    # -- oracle internals ------------------------------------------------------
    norm = oracle.transverse_weight_norm(settings)
    add("transverse_weight_norm", abs(norm - 1.0) <= 1e-10, abs(norm - 1.0),
        "<= 1e-10", "(1/pi^1.5) int e^{-P^2} Pperp^2 d3P = 1")

    steps = [abs(oracle._tensor_sum(pt, 2 * n, False)
                 - oracle._tensor_sum(pt, n, False)) for n in (16, 32, 64)]
    min_ratio = min(a / max(b, 1e-300) for a, b in zip(steps, steps[1:]))
    add("oracle_grid_convergence", min_ratio >= 4.0, min_ratio, ">= 4",
        "successive grid doublings shrink the update by >= 4x")

    # -- permittivity ----------------------------------------------------------
    phys = from_dimensionless(pt, temperature=1.0e5, density_n0=1.0e22)
    eps = cond.epsilon_tr(to_dimensionless(phys), phys, rat)
    eps_printed = 1.0 + 1j * (phys.omega_p**2 / phys.omega**2) \
        * (pt.x / pt.y) * brute[pt]
    rel = abs(eps - eps_printed) / abs(eps - 1.0)
    add("epsilon_consistency", rel <= 1e-4, rel, "<= 1e-4",
        "1 + 4 pi i sigma/omega vs the permittivity integral via the 3-D oracle")

    # -- sweep determinism -------------------------------------------------------
    spec = SweepSpec(axis="q", start=0.05, stop=2.0, count=7,
                     fixed={"x": 0.1, "y": 0.01}, scale="log",
                     models=("classic", "full", "lindhard"))
    first = render_csv(run_sweep(spec, rat), spec.models)
    second = render_csv(run_sweep(spec, rat), spec.models)
    add("sweep_determinism", first == second, float(first != second), "== 0",
        "identical spec renders byte-identical CSV")

    return VerifyReport(checks)
