import pytest

from qplasma import oracle
from qplasma.conductivity import sigma_full, sigma_k0
from qplasma.dispersion import PolePairArgs, t_pole_pair
from qplasma.params import DimensionlessPoint, EvalSettings, InvalidParams

FIG_POINT = DimensionlessPoint(0.1, 0.01, 0.5)

# frozen tensor-grid values at (0.1, 0.01, 0.5), grid 96 with 2x self-check
SIGMA_3D_FIG = complex(0.0314384315836932, 0.01080107314481595)
QUANTUM_3D_FIG = complex(0.030686078508633526, -0.08586554939142156)


class TestBruteForce:
    def test_matches_reduced_form(self, rational):
        got = oracle.sigma_3d_bruteforce(FIG_POINT, rational)
        assert got == pytest.approx(SIGMA_3D_FIG, rel=1e-9)
        assert got == pytest.approx(sigma_full(FIG_POINT, rational).full,
                                    rel=1e-4)

    def test_transverse_weight_normalization(self, rational):
        assert oracle.transverse_weight_norm(rational) == pytest.approx(
            1.0, abs=1e-10)

    def test_k0_limit(self, rational):
        got = oracle.sigma_3d_bruteforce(DimensionlessPoint(0.1, 0.01, 1e-6),
                                         rational)
        assert got == pytest.approx(sigma_k0(0.1, 0.01), rel=1e-4)

    def test_grid_convergence(self):
        steps = [abs(oracle._tensor_sum(FIG_POINT, 2 * n, False)
                     - oracle._tensor_sum(FIG_POINT, n, False))
                 for n in (16, 32, 64)]
        for coarse, fine in zip(steps, steps[1:]):
            assert coarse >= 4.0 * fine

    def test_refinement_failure_reported(self, rational, monkeypatch):
        monkeypatch.setattr(oracle, "SELF_CHECK_TOL", 1e-18)
        with pytest.raises(oracle.RefinementError):
            oracle.sigma_3d_bruteforce(FIG_POINT, rational)


class TestQuantumTerm:
    def test_adjudicates_pole_pair_coefficient(self, rational):
        got = oracle.quantum_term_3d(FIG_POINT, rational)
        assert got == pytest.approx(QUANTUM_3D_FIG, rel=1e-9)
        pole_pair = t_pole_pair(
            PolePairArgs(FIG_POINT.z / FIG_POINT.q, FIG_POINT.q / 2.0), rational)
        half = 1j * (FIG_POINT.y / (2.0 * FIG_POINT.x)) * pole_pair
        full_coeff = 1j * (FIG_POINT.y / FIG_POINT.x) * pole_pair
        assert got == pytest.approx(half, rel=1e-4)
        assert abs(got - full_coeff) / abs(got) > 0.4

    def test_vanishes_at_small_q(self, rational):
        got = oracle.quantum_term_3d(DimensionlessPoint(0.1, 0.01, 1e-4),
                                     rational)
        assert abs(got) < 1e-7


class TestCoefficientFit:
    @pytest.mark.parametrize("x,y,q", [(0.1, 0.01, 0.5), (0.001, 0.01, 2.0)])
    def test_half(self, rational, x, y, q):
        c = oracle.resolve_sigma2_coefficient(DimensionlessPoint(x, y, q),
                                              rational)
        assert c == pytest.approx(0.5, abs=1e-3)

    def test_grid_invariance(self):
        c96 = oracle.resolve_sigma2_coefficient(
            FIG_POINT, EvalSettings(grid_n_3d=96))
        c128 = oracle.resolve_sigma2_coefficient(
            FIG_POINT, EvalSettings(grid_n_3d=128))
        assert abs(c96 - c128) < 1e-4

    def test_small_q_rejected(self, rational):
        with pytest.raises(InvalidParams):
            oracle.resolve_sigma2_coefficient(DimensionlessPoint(0.1, 0.01, 0.1),
                                              rational)
