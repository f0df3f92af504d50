"""Closed forms for the operator i d/dt on [0, ell].

With E(z) = exp(-i ell z):

    s(z) = (e^ell - E)/(1 - e^ell E)                     Livsic function
    M(z) = i (e^ell + 1)/(e^ell - 1) * (E - 1)/(E + 1)   Weyl function

and three transfer functions: the kappa = 0 system, W = E for the scaled
impedance a M with a = (e^ell - 1)/(e^ell + 1), and W = -E for its
inverse-branch partner. The z = 0 values used in tests are boundary probes
of these formulas, which extend continuously to the real axis.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from donoghue import bi_extension
from donoghue.errors import DegeneratePoint, ParameterOutOfRange
from donoghue.herglotz import ClosedForm, register_closed_form

_POLE_TOL = 1e-13


def _ell(ell: float) -> float:
    ell = float(ell)
    if not ell > 0 or not math.isfinite(ell):
        raise ParameterOutOfRange(f"ell must be positive, got {ell!r}")
    return ell


def _e(ell: float, z: complex) -> complex:
    return cmath.exp(-1j * ell * complex(z))


def _ratio(num: complex, den: complex, scale: float) -> complex:
    if abs(den) <= _POLE_TOL * scale:
        raise DegeneratePoint(f"denominator {den!r} vanishes")
    return num / den


def ex_livsic(ell: float, z: complex) -> complex:
    ell = _ell(ell)
    e = _e(ell, z)
    el = math.exp(ell)
    return _ratio(el - e, 1.0 - el * e, 1.0 + el * abs(e))


def ex_weyl(ell: float, z: complex) -> complex:
    ell = _ell(ell)
    e = _e(ell, z)
    c = (math.exp(ell) + 1.0) / math.expm1(ell)
    return 1j * c * _ratio(e - 1.0, e + 1.0, 1.0 + abs(e))


def ex_transfer_theta10(ell: float, z: complex) -> complex:
    ell = _ell(ell)
    e = _e(ell, z)
    el = math.exp(ell)
    return _ratio(el * e - 1.0, el - e, el + abs(e))


def ex_transfer_theta1a(ell: float, z: complex) -> complex:
    return _e(_ell(ell), z)


def ex_transfer_theta1a_inv(ell: float, z: complex) -> complex:
    return -_e(_ell(ell), z)


def ex_impedance_theta1a(ell: float, z: complex) -> complex:
    """i (E - 1)/(E + 1), equal to a M."""
    e = _e(_ell(ell), z)
    return 1j * _ratio(e - 1.0, e + 1.0, 1.0 + abs(e))


def ex_impedance_theta1a_inv(ell: float, z: complex) -> complex:
    """i (E + 1)/(E - 1), equal to -1/(a M)."""
    e = _e(_ell(ell), z)
    return 1j * _ratio(e + 1.0, e - 1.0, 1.0 + abs(e))


# Herglotz-valued closed forms available to ClosedForm expression trees
register_closed_form("interval_weyl", ("ell",))(lambda z, ell: ex_weyl(ell, z))
register_closed_form("interval_impedance_1a", ("ell",))(
    lambda z, ell: ex_impedance_theta1a(ell, z)
)
register_closed_form("interval_impedance_1a_inv", ("ell",))(
    lambda z, ell: ex_impedance_theta1a_inv(ell, z)
)


def weyl_map(ell: float) -> ClosedForm:
    return ClosedForm.of("interval_weyl", ell=_ell(ell))


@dataclass(frozen=True)
class ExampleParams:
    kappa: float
    a: float
    entropy: float
    dissipation: float


def ex_params(ell: float) -> ExampleParams:
    """kappa = e^-ell, a = (e^ell - 1)/(e^ell + 1), S = ell, D = 1 - e^(-2 ell)."""
    ell = _ell(ell)
    return ExampleParams(
        kappa=math.exp(-ell),
        a=math.tanh(ell / 2.0),
        entropy=ell,
        dissipation=-math.expm1(-2.0 * ell),
    )


@dataclass(frozen=True)
class ChannelCoefficients:
    """Prefactors tying {phi, psi} to the boundary functionals.

    phi - psi = minus_prefactor * [delta(t - ell) - delta(t)]
    phi + psi = plus_prefactor * [delta(t - ell) + delta(t)]
    """

    minus_prefactor: float
    plus_prefactor: float
    chi10: bi_extension.CoeffVector
    chi1a: bi_extension.CoeffVector
    chi10_dev: float
    chi1a_dev: float


def boundary_basis(ell: float) -> np.ndarray:
    """Rows phi, psi in the basis (delta(t), delta(t - ell))."""
    ell = _ell(ell)
    el = math.exp(ell)
    n = 1.0 / math.sqrt(math.expm1(2.0 * ell))
    return np.array([[-n, el * n], [el * n, -n]])


def ex_channel_coefficients(ell: float) -> ChannelCoefficients:
    """Channel vectors of the two example systems against the general formula.

    chi10 = (phi - psi)/sqrt2 and chi1a = sqrt(a/2)(phi - psi) are compared
    entrywise with :func:`bi_extension.chi_of` at (0, -1) and (e^-ell, -1).
    """
    ell = _ell(ell)
    el = math.exp(ell)
    params = ex_params(ell)
    r = math.sqrt(0.5)
    chi10 = bi_extension.CoeffVector(r, -r)
    s = math.sqrt(params.a / 2.0)
    chi1a = bi_extension.CoeffVector(s, -s)
    return ChannelCoefficients(
        minus_prefactor=math.sqrt((el + 1.0) / math.expm1(ell)),
        plus_prefactor=math.sqrt(math.expm1(ell) / (el + 1.0)),
        chi10=chi10,
        chi1a=chi1a,
        chi10_dev=chi10.max_dev(bi_extension.chi_of(0.0, -1.0)),
        chi1a_dev=chi1a.max_dev(bi_extension.chi_of(params.kappa, -1.0)),
    )
