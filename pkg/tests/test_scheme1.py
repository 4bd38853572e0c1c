import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import optimize

from magnetomech.core import CONSTANTS, MagnetSphere
from magnetomech.errors import DomainError
from magnetomech.ringfield import RingPairConfig, axial_gradient
from magnetomech.scheme1 import (
    Scheme1Config,
    count_sign_changes,
    critical_field_check,
    linearized_extent,
    residual,
    solve_superposition_extent,
)

YIG_RHO = 5110.0
YIG_BR = 14.32e-3

OMEGA_10HZ = 2 * math.pi * 10


def make(R=40e-6, current=1e-6, omega=OMEGA_10HZ, a=25e-6, Br=YIG_BR, eta=0.5):
    return Scheme1Config(MagnetSphere(a, Br, YIG_RHO), RingPairConfig(R, current, eta), omega)


def _oracle_extent(cfg):
    # Force balance rho V omega^2 z = (Br V / mu0) dB/dz written from the
    # two loop fields directly, solved with scipy.
    R, s, current = cfg.rings.loop_radius_R, cfg.rings.eta * cfg.rings.loop_radius_R, abs(cfg.rings.current_I)

    def dbdz(z):
        one = lambda z0: -1.5 * CONSTANTS.mu0 * current * R**2 * (z - z0) / ((z - z0) ** 2 + R**2) ** 2.5
        return one(s) - one(-s)

    def balance(z):
        return cfg.magnet.density_rho * cfg.trap_omega_z**2 * z - cfg.magnet.remanence_Br / CONSTANTS.mu0 * dbdz(z)

    return 2 * optimize.brentq(balance, 1e-15, 0.5 * R, xtol=1e-20, rtol=1e-14)


def test_residual_trivial_cases():
    assert residual(0.0, make(current=0.0)) == 0.0
    assert residual(0.0, make()) < 0
    assert residual(1e3, make()) > 0


def test_residual_at_zero_closed_form():
    cfg = make()
    R = cfg.rings.loop_radius_R
    compliance = YIG_BR / (CONSTANTS.mu0 * YIG_RHO * OMEGA_10HZ**2)
    expected = -compliance * 3 * CONSTANTS.mu0 * 1e-6 * R**2 * 0.5 * R * (5 * R**2 / 4) ** -2.5
    assert residual(0.0, cfg) == pytest.approx(expected, rel=1e-12)


def test_example_extent():
    cfg = make()
    dz = solve_superposition_extent(cfg)
    assert dz == pytest.approx(7.62e-7, rel=1e-3)
    assert dz == pytest.approx(_oracle_extent(cfg), rel=1e-10)
    assert dz == pytest.approx(linearized_extent(cfg), rel=0.01)
    assert linearized_extent(cfg) / 2 == pytest.approx(3.81e-7, rel=1e-3)


def test_zero_current():
    assert solve_superposition_extent(make(current=0.0)) == 0.0
    assert linearized_extent(make(current=0.0)) == 0.0


def test_current_sign_does_not_change_separation():
    assert solve_superposition_extent(make(current=-1e-6)) == solve_superposition_extent(make())


def test_independent_of_magnet_radius():
    base = make()
    values = {solve_superposition_extent(base.with_magnet_radius(a)) for a in (10e-6, 25e-6, 50e-6)}
    assert len(values) == 1


@settings(max_examples=40, deadline=None)
@given(st.floats(20e-6, 200e-6), st.sampled_from([10.0, 20.0, 50.0, 100.0]))
def test_solver_matches_oracle(R, nu):
    cfg = make(R=R, omega=2 * math.pi * nu)
    dz = solve_superposition_extent(cfg)
    assert dz == pytest.approx(_oracle_extent(cfg), rel=1e-9)
    if dz < R / 100:
        assert dz == pytest.approx(linearized_extent(cfg), rel=0.01)


def test_single_root_in_weak_regime():
    assert count_sign_changes(make()) == 1


def test_soft_trap_saturates_at_field_peak():
    # As the trap softens the magnet slides to where the gradient vanishes.
    cfg = make(R=20e-6, omega=2 * math.pi * 1e-3)
    peak = optimize.brentq(lambda z: axial_gradient(z, cfg.rings), 1e-9, 5 * 20e-6, xtol=1e-20)
    dz = solve_superposition_extent(cfg)
    assert count_sign_changes(cfg) == 1
    assert dz / 2 == pytest.approx(peak, rel=1e-4)


def test_field_margin_zero_remanence():
    cfg = make(Br=0.0)
    assert critical_field_check(cfg) == pytest.approx(9.78e-3)


def test_field_margin_positive_and_offset_stable():
    cfg = make(R=40e-6)
    m0 = critical_field_check(cfg, (0.0,))
    m1 = critical_field_check(cfg, (1e-6,))
    assert 0 < m0 < 9.78e-3
    assert abs(m1 - m0) / m0 < 0.15


def test_field_margin_wire_inside_magnet():
    with pytest.raises(DomainError):
        critical_field_check(make(R=20e-6))


def test_config_validation():
    with pytest.raises(DomainError):
        make(omega=0.0)
