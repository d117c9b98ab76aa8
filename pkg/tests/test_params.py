import math

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from qplasma.params import (
    Constants,
    DimensionlessPoint,
    EvalSettings,
    InvalidParams,
    PhysicalParams,
    from_dimensionless,
    plasma_frequency,
    static_conductivity,
    to_dimensionless,
)

UNIT = Constants(e=1.0, m=1.0, hbar=1.0, k_B=1.0, c=1.0)


def _params_for(x, y, q, temperature=1.0e5, density=1.0e22):
    return from_dimensionless(DimensionlessPoint(x, y, q), temperature, density)


class TestToDimensionless:
    def test_identity_ratios(self):
        probe = PhysicalParams(omega=1.0, nu=1.0, k=0.0, temperature=300.0,
                               density_n0=1e20)
        scale = probe.k_T * probe.v_T
        p = PhysicalParams(omega=scale, nu=scale, k=probe.k_T,
                           temperature=300.0, density_n0=1e20)
        pt = to_dimensionless(p)
        assert pt.x == pytest.approx(1.0, rel=1e-14)
        assert pt.y == pytest.approx(1.0, rel=1e-14)
        assert pt.q == pytest.approx(1.0, rel=1e-14)

    def test_figure_point(self):
        probe = PhysicalParams(omega=1.0, nu=1.0, k=0.0, temperature=1e5,
                               density_n0=1e22)
        scale = probe.k_T * probe.v_T
        p = PhysicalParams(omega=0.1 * scale, nu=0.01 * scale,
                           k=0.5 * probe.k_T, temperature=1e5,
                           density_n0=1e22)
        pt = to_dimensionless(p)
        assert (pt.x, pt.y, pt.q) == pytest.approx((0.1, 0.01, 0.5), rel=1e-13)

    def test_omega_tau_ratio(self):
        pt = DimensionlessPoint(0.1, 0.01, 0.5)
        assert pt.omega_tau == pytest.approx(10.0, rel=1e-15)

    def test_scale_invariance(self):
        # scaling omega, nu with temperature (k_T v_T ~ T) fixes (x, y)
        base = _params_for(0.3, 0.02, 0.7, temperature=2.0e4)
        for factor in (2.0, 10.0):
            probe = PhysicalParams(omega=1.0, nu=1.0, k=0.0,
                                   temperature=factor * 2.0e4, density_n0=1e22)
            scaled = PhysicalParams(omega=base.omega * factor,
                                    nu=base.nu * factor,
                                    k=0.7 * probe.k_T,
                                    temperature=factor * 2.0e4,
                                    density_n0=1e22)
            pt = to_dimensionless(scaled)
            assert pt.x == pytest.approx(0.3, rel=1e-12)
            assert pt.y == pytest.approx(0.02, rel=1e-12)
            assert pt.q == pytest.approx(0.7, rel=1e-12)

    @hyp_settings(max_examples=50, deadline=None)
    @given(x=st.floats(1e-4, 50.0), y=st.floats(1e-4, 10.0),
           q=st.floats(1e-4, 50.0))
    def test_round_trip(self, x, y, q):
        pt = DimensionlessPoint(x, y, q)
        back = to_dimensionless(from_dimensionless(pt, 3.0e4, 5.0e21))
        assert back.x == pytest.approx(x, rel=1e-14)
        assert back.y == pytest.approx(y, rel=1e-14)
        assert back.q == pytest.approx(q, rel=1e-14)

    @pytest.mark.parametrize("field,value", [
        ("omega", 0.0), ("omega", -1.0), ("nu", 0.0),
        ("temperature", -3.0), ("density_n0", 0.0),
    ])
    def test_rejects_nonpositive(self, field, value):
        kwargs = dict(omega=1e14, nu=1e12, k=1e7, temperature=1e5,
                      density_n0=1e22)
        kwargs[field] = value
        with pytest.raises(InvalidParams):
            PhysicalParams(**kwargs)


class TestStaticConductivity:
    def test_unit_inputs(self):
        p = PhysicalParams(omega=1.0, nu=1.0, k=0.0, temperature=1.0,
                           density_n0=1.0, constants=UNIT)
        assert static_conductivity(p) == pytest.approx(1.0, rel=1e-15)

    def test_linearity_in_density(self):
        p1 = PhysicalParams(omega=1e14, nu=1e13, k=0.0, temperature=1e5,
                            density_n0=1e22)
        p2 = PhysicalParams(omega=1e14, nu=1e13, k=0.0, temperature=1e5,
                            density_n0=2e22)
        assert static_conductivity(p2) == pytest.approx(
            2.0 * static_conductivity(p1), rel=1e-15)

    def test_codata_value(self):
        # arithmetic oracle: same ratio assembled in a different order
        p = PhysicalParams(omega=1e14, nu=1e13, k=0.0, temperature=1e5,
                           density_n0=1e22)
        e, m = p.constants.e, p.constants.m
        oracle = (e / m) * e * (1e22 / 1e13)
        assert oracle == pytest.approx(2.532637972360205e17, rel=1e-12)
        assert static_conductivity(p) == pytest.approx(oracle, rel=1e-13)


class TestPlasmaFrequency:
    def test_cancellation(self):
        p = PhysicalParams(omega=1.0, nu=1.0, k=0.0, temperature=1.0,
                           density_n0=1.0 / (4.0 * math.pi), constants=UNIT)
        assert plasma_frequency(p) == pytest.approx(1.0, rel=1e-15)

    def test_sqrt_density_scaling(self):
        p1 = PhysicalParams(omega=1e14, nu=1e13, k=0.0, temperature=1e5,
                            density_n0=1e22)
        p4 = PhysicalParams(omega=1e14, nu=1e13, k=0.0, temperature=1e5,
                            density_n0=4e22)
        assert plasma_frequency(p4) == pytest.approx(
            2.0 * plasma_frequency(p1), rel=1e-15)

    def test_codata_value(self):
        p = PhysicalParams(omega=1e14, nu=1e13, k=0.0, temperature=1e5,
                           density_n0=1e22)
        e, m = p.constants.e, p.constants.m
        oracle = math.sqrt(4.0 * math.pi / m) * e * math.sqrt(1e22)
        assert oracle == pytest.approx(5641459686346920.0, rel=1e-12)
        assert plasma_frequency(p) == pytest.approx(oracle, rel=1e-13)


class TestDimensionlessPoint:
    def test_z_and_lk(self):
        pt = DimensionlessPoint(0.1, 0.01, 0.5)
        assert pt.z == complex(0.1, 0.01)
        assert pt.lk == pytest.approx(50.0, rel=1e-15)

    @pytest.mark.parametrize("x,y,q", [
        (0.1, 0.0, 0.5), (0.1, -0.1, 0.5), (0.1, 0.01, 0.0),
        (0.1, 0.01, -1.0), (0.0, 0.01, 0.5), (5e-9, 0.01, 0.5),
        (float("nan"), 0.01, 0.5),
    ])
    def test_invalid(self, x, y, q):
        with pytest.raises(InvalidParams):
            DimensionlessPoint(x, y, q)

    def test_negative_x_admitted_for_symmetry_checks(self):
        pt = DimensionlessPoint(-0.1, 0.01, 0.5)
        assert pt.z == complex(-0.1, 0.01)


class TestEvalSettings:
    def test_defaults(self):
        s = EvalSettings()
        assert s.backend == "rational"
        assert s.grid_n_3d == 96

    @pytest.mark.parametrize("kwargs", [
        {"tol_rel": 0.0}, {"backend": "magic"}, {"grid_n_3d": 8},
        {"truncation_radius": -1.0},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidParams):
            EvalSettings(**kwargs)
