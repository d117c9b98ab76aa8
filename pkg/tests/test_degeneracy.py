import math

import numpy as np
import pytest

from qplasma import degeneracy as deg
from qplasma.conductivity import sigma_full
from qplasma.params import DimensionlessPoint, EvalSettings, InvalidParams

FIG_POINT = DimensionlessPoint(0.1, 0.01, 0.5)

# frozen: adaptive quadrature of the order-2 Fermi integral at alpha = 0
F2_ZERO = 0.3390469475765505


@pytest.fixture(scope="module")
def grid48():
    return EvalSettings(grid_n_3d=48)


class TestFermiF2:
    def test_maxwell_limit(self):
        got = deg.fermi_f2(deg.DegeneracyParams(-30.0))
        want = math.exp(-30.0) * math.sqrt(math.pi) / 4.0
        assert got == pytest.approx(want, rel=1e-10)

    @pytest.mark.parametrize("alpha", [-5.0, 0.0, 5.0])
    def test_monotone_in_alpha(self, alpha):
        assert deg.fermi_f2(deg.DegeneracyParams(alpha + 1.0)) > \
            deg.fermi_f2(deg.DegeneracyParams(alpha))

    def test_trapezoid_oracle_at_zero(self):
        got = deg.fermi_f2(deg.DegeneracyParams(0.0))
        assert got == pytest.approx(F2_ZERO, rel=1e-12)
        xs = np.linspace(0.0, 12.0, 10**6)
        trap = float(np.trapezoid(xs * xs / (1.0 + np.exp(xs * xs)), xs))
        assert got == pytest.approx(trap, rel=1e-8)

    def test_alpha_range_enforced(self):
        with pytest.raises(InvalidParams):
            deg.DegeneracyParams(41.0)
        with pytest.raises(InvalidParams):
            deg.DegeneracyParams(float("inf"))


class TestMaxwellianLimit:
    def test_alpha_minus_20_matches_full(self, grid48, rational):
        got = deg.sigma_degenerate(FIG_POINT, deg.DegeneracyParams(-20.0), grid48)
        want = sigma_full(FIG_POINT, rational).full
        assert abs(got - want) / abs(want) <= 1e-3

    def test_gap_decreases_with_degeneracy(self, grid48, rational):
        want = sigma_full(FIG_POINT, rational).full
        gaps = [abs(deg.sigma_degenerate(FIG_POINT, deg.DegeneracyParams(a),
                                         grid48) - want)
                for a in (-5.0, -10.0, -20.0)]
        assert gaps[0] > gaps[1] > gaps[2]

    def test_limiting_weights_pointwise(self):
        alpha = -25.0
        norm = 4.0 * math.pi * deg.fermi_f2(deg.DegeneracyParams(alpha))
        lhs = deg.fermi_weight_g(1.0, alpha) / norm
        rhs = math.exp(-1.0) / math.pi**1.5
        assert lhs == pytest.approx(rhs, rel=1e-8)


class TestStructure:
    def test_quantum_weight_vanishes_at_small_q(self):
        # the quantum numerator is f((P_n - q/2)^2 + ...) - f((P_n + q/2)^2 + ...)
        pn = 1.0
        diffs = [abs(deg.fermi_occupation((pn - q / 2) ** 2, 0.0)
                     - deg.fermi_occupation((pn + q / 2) ** 2, 0.0))
                 for q in (0.1, 0.01, 0.0)]
        assert diffs[0] > diffs[1] > diffs[2]
        assert diffs[2] == 0.0

    def test_norm_consistency_on_grid(self, rational):
        st96 = EvalSettings(grid_n_3d=96)
        for alpha in (-5.0, 0.0):
            d = deg.DegeneracyParams(alpha)
            n3 = deg.fermi_norm_3d(FIG_POINT, d, st96)
            n1 = 4.0 * math.pi * deg.fermi_f2(d)
            assert abs(n3 - n1) / n1 <= 1e-6

    def test_reality_symmetry(self, grid48):
        d = deg.DegeneracyParams(-5.0)
        plus = deg.sigma_degenerate(FIG_POINT, d, grid48)
        minus = deg.sigma_degenerate(DimensionlessPoint(-0.1, 0.01, 0.5), d,
                                     grid48)
        assert minus == pytest.approx(plus.conjugate(), rel=1e-10)

    def test_grid_minimum_enforced(self):
        with pytest.raises(InvalidParams):
            deg.sigma_degenerate(FIG_POINT, deg.DegeneracyParams(0.0),
                                 EvalSettings(grid_n_3d=32))

    def test_refinement_failure_reported(self, grid48, monkeypatch):
        monkeypatch.setattr(deg, "SELF_CHECK_TOL", 1e-18)
        with pytest.raises(deg.RefinementError):
            deg.sigma_degenerate(FIG_POINT, deg.DegeneracyParams(0.0), grid48)
