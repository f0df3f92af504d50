import cmath
import math

import pytest

from donoghue import differential_example as dx
from donoghue.bi_extension import chi_of
from donoghue.entropy_geometry import dissipation_of_a, entropy_of_a
from donoghue.errors import DegeneratePoint, ParameterOutOfRange
from donoghue.herglotz import alpha_transform, cayley_m_to_s, classify
from donoghue.lsystem import transfer_to_impedance

from conftest import ELLS

LN2 = math.log(2)


def test_livsic_examples():
    for ell in ELLS:
        assert abs(dx.ex_livsic(ell, 1j)) < 1e-15
    assert dx.ex_livsic(LN2, 0) == pytest.approx(-1, abs=1e-15)  # boundary probe


def test_weyl_examples():
    for ell in ELLS:
        assert dx.ex_weyl(ell, 1j) == pytest.approx(1j, abs=1e-12)
    assert dx.ex_weyl(LN2, 0) == 0  # boundary probe


@pytest.mark.parametrize("ell", ELLS)
def test_livsic_is_cayley_of_weyl(ell, grid50):
    for z in grid50:
        assert abs(dx.ex_livsic(ell, z) - cayley_m_to_s(dx.ex_weyl(ell, z))) < 1e-12
        assert abs(dx.ex_livsic(ell, z)) < 1


def test_unit_transfer_vanishes_at_minus_i():
    for ell in ELLS:
        assert abs(dx.ex_transfer_theta10(ell, -1j)) < 1e-15


@pytest.mark.parametrize("ell", ELLS)
def test_scaled_transfer_values(ell):
    assert dx.ex_transfer_theta1a(ell, -1j) == pytest.approx(math.exp(-ell), rel=1e-15)
    assert dx.ex_transfer_theta1a(ell, 1j) == pytest.approx(math.exp(ell), rel=1e-15)
    assert -math.log(abs(dx.ex_transfer_theta1a(ell, -1j))) == pytest.approx(ell, abs=1e-12)


@pytest.mark.parametrize("ell", ELLS)
def test_impedance_matches(ell, grid50):
    a = dx.ex_params(ell).a
    for z in grid50:
        e = cmath.exp(-1j * ell * z)
        v = transfer_to_impedance(dx.ex_transfer_theta1a(ell, z))
        assert abs(v - 1j * (e - 1) / (e + 1)) < 1e-12
        assert abs(v - a * dx.ex_weyl(ell, z)) < 1e-12
        assert abs(v - dx.ex_impedance_theta1a(ell, z)) < 1e-12
        v_inv = transfer_to_impedance(dx.ex_transfer_theta1a_inv(ell, z))
        assert abs(v_inv - dx.ex_impedance_theta1a_inv(ell, z)) < 1e-12
        # alpha = pi/2 partner
        assert abs(-1 / v - alpha_transform(dx.ex_weyl(ell, z), math.pi / 2) / a) < 1e-12
        assert abs(v_inv + 1 / v) < 1e-12


@pytest.mark.parametrize("ell", ELLS)
def test_unit_transfer_matches_weyl(ell, grid50):
    for z in grid50:
        v = transfer_to_impedance(dx.ex_transfer_theta10(ell, z))
        assert abs(v - dx.ex_weyl(ell, z)) < 1e-12 * max(1, abs(v))


def test_params_ln2():
    p = dx.ex_params(LN2)
    assert p.kappa == pytest.approx(0.5)
    assert p.a == pytest.approx(1 / 3)
    assert p.entropy == LN2
    assert p.dissipation == pytest.approx(0.75)


def test_params_large_ell():
    p = dx.ex_params(20)
    assert p.kappa == pytest.approx(2.061e-9, rel=1e-3)
    assert p.a == pytest.approx(1, abs=1e-8)
    assert p.entropy == 20
    assert p.dissipation == pytest.approx(1, abs=1e-15)


@pytest.mark.parametrize("ell", ELLS)
def test_params_consistent(ell):
    p = dx.ex_params(ell)
    assert p.a == pytest.approx((math.exp(ell) - 1) / (math.exp(ell) + 1), rel=1e-14)
    assert entropy_of_a(p.a) == pytest.approx(p.entropy, abs=1e-12)
    assert dissipation_of_a(p.a) == pytest.approx(p.dissipation, abs=1e-12)
    assert dissipation_of_a(1 / p.a) == pytest.approx(1 - math.exp(-2 * ell), abs=1e-12)
    assert classify(dx.weyl_map(ell)).class_tag == "M_0"


def test_channel_ln2():
    ch = dx.ex_channel_coefficients(LN2)
    assert ch.minus_prefactor == pytest.approx(math.sqrt(3))
    assert ch.plus_prefactor == pytest.approx(1 / math.sqrt(3))
    assert ch.chi10_dev < 1e-12 and ch.chi1a_dev < 1e-12


@pytest.mark.parametrize("ell", ELLS)
def test_prefactors_from_boundary_basis(ell):
    phi, psi = dx.boundary_basis(ell)
    ch = dx.ex_channel_coefficients(ell)
    # phi - psi against delta(t - ell) - delta(t), phi + psi against delta(t - ell) + delta(t)
    minus, plus = phi - psi, phi + psi
    assert minus[1] == pytest.approx(ch.minus_prefactor) and minus[0] == pytest.approx(-ch.minus_prefactor)
    assert plus[1] == pytest.approx(ch.plus_prefactor) and plus[0] == pytest.approx(ch.plus_prefactor)
    a = dx.ex_params(ell).a
    assert ch.chi1a.max_dev(chi_of(math.exp(-ell), -1)) < 1e-12
    assert abs(ch.chi1a.c_phi - math.sqrt(a / 2)) < 1e-15


def test_errors():
    with pytest.raises(ParameterOutOfRange):
        dx.ex_params(0)
    with pytest.raises(ParameterOutOfRange):
        dx.ex_weyl(-1, 1j)
    with pytest.raises(DegeneratePoint):
        dx.ex_weyl(1.0, math.pi)  # e^{-i ell z} = -1
    with pytest.raises(DegeneratePoint):
        dx.ex_livsic(1.0, -1j)
