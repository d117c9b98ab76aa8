import cmath
import math

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from qplasma.dispersion import PolePairArgs, lambda_c, t_fn, t_pole_pair
from qplasma.params import InvalidParams

# frozen from the adaptive-quadrature oracle backend
T_1_01I = complex(-0.95456354311413, 0.6614268664172887)
LAMBDA_1_01I = complex(-0.020706229755858875, 0.5659705121058757)
# direct pole-pair quadrature at a = (0.1+0.01i)/0.5, b = 0.25
THAT_FIG_POINT = complex(-1.7173109878284432, -0.6137215701726745)

upper_z = st.builds(
    complex,
    st.floats(-20.0, 20.0, allow_nan=False),
    st.floats(1e-3, 20.0, allow_nan=False),
)


class TestTFn:
    def test_pure_imaginary_argument(self, rational):
        v = t_fn(1j, rational)
        assert abs(v.real) < 1e-14
        assert v.imag > 0

    @pytest.mark.parametrize("phase", [0.2, 0.9, 1.6, 2.6])
    def test_large_argument_asymptote(self, rational, phase):
        z = 50.0 * cmath.exp(1j * phase)
        assert abs(t_fn(z, rational) + 1.0 / z) <= 3.0 / abs(z) ** 3

    def test_rational_matches_frozen_quadrature(self, rational, quadrature):
        z = 1.0 + 0.1j
        assert t_fn(z, quadrature) == pytest.approx(T_1_01I, rel=1e-12)
        assert t_fn(z, rational) == pytest.approx(T_1_01I, rel=1e-12)

    def test_backend_agreement_on_grid(self, rational, quadrature, zgrid):
        worst = max(abs(t_fn(z, quadrature) - t_fn(z, rational))
                    / abs(t_fn(z, rational)) for z in zgrid)
        assert worst <= 1e-10

    @hyp_settings(max_examples=80, deadline=None)
    @given(z=upper_z)
    def test_nevanlinna(self, rational, z):
        assert t_fn(z, rational).imag > 0

    @hyp_settings(max_examples=80, deadline=None)
    @given(z=upper_z)
    def test_reflection(self, rational, z):
        mirrored = t_fn(complex(-z.real, z.imag), rational)
        assert mirrored == pytest.approx(-t_fn(z, rational).conjugate(),
                                         rel=1e-12, abs=1e-14)

    @pytest.mark.parametrize("z", [0.5 - 0.1j, 1.0 + 0.0j, -2.0 - 3.0j])
    def test_lower_half_plane_rejected(self, rational, z):
        with pytest.raises(InvalidParams):
            t_fn(z, rational)


class TestLambdaC:
    def test_real_on_imaginary_axis(self, rational):
        for y in (0.3, 1.0, 4.0):
            v = lambda_c(1j * y, rational)
            assert abs(v.imag) < 1e-14
            assert v == pytest.approx(1.0 - y * t_fn(1j * y, rational).imag,
                                      rel=1e-13)

    def test_large_argument_decay(self, rational):
        z = 40.0 * cmath.exp(0.4j)
        assert lambda_c(z, rational) == pytest.approx(-1.0 / (2.0 * z * z),
                                                      rel=2e-3)

    def test_two_path_quadrature(self, quadrature):
        # tau-moment integral vs 1 + z * (1-moment integral), both adaptive
        z = 1.0 + 0.1j
        assert lambda_c(z, quadrature) == pytest.approx(LAMBDA_1_01I, rel=1e-12)
        assert lambda_c(z, quadrature) == pytest.approx(
            1.0 + z * t_fn(z, quadrature), rel=1e-12)

    def test_identity_on_grid(self, quadrature, zgrid):
        worst = max(abs(lambda_c(z, quadrature) - 1.0 - z * t_fn(z, quadrature))
                    for z in zgrid)
        assert worst <= 1e-13


class TestPolePair:
    def test_derivative_limit(self, rational):
        a = 0.4 + 0.8j
        want = -2.0 * lambda_c(a, rational)
        errs = [abs(t_pole_pair(PolePairArgs(a, b), rational) - want)
                for b in (1e-2, 1e-3, 1e-4)]
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] < 1e-7

    def test_direct_quadrature_matches_identity(self, rational, quadrature):
        args = PolePairArgs(complex(0.1, 0.01) / 0.5, 0.25)
        direct = t_pole_pair(args, quadrature)
        assert direct == pytest.approx(THAT_FIG_POINT, rel=1e-12)
        split = (t_fn(args.a + args.b, rational)
                 - t_fn(args.a - args.b, rational)) / (2.0 * args.b)
        assert direct == pytest.approx(split, rel=1e-10)

    def test_even_in_half_separation(self, rational):
        # the defining kernel depends on b^2 only
        a, b = 0.3 + 0.25j, 0.7
        forward = t_pole_pair(PolePairArgs(a, b), rational)
        mirrored = (t_fn(a - b, rational) - t_fn(a + b, rational)) / (-2.0 * b)
        assert forward == pytest.approx(mirrored, rel=1e-14)

    def test_wide_separation(self, rational, quadrature):
        args = PolePairArgs(0.05 + 0.002j, 8.0)
        assert t_pole_pair(args, quadrature) == pytest.approx(
            t_pole_pair(args, rational), rel=1e-10)

    @pytest.mark.parametrize("a,b", [(1.0 - 0.1j, 0.5), (1.0 + 0.1j, 0.0),
                                     (1.0 + 0.1j, -2.0)])
    def test_invalid_args(self, a, b):
        with pytest.raises(InvalidParams):
            PolePairArgs(a, b)
