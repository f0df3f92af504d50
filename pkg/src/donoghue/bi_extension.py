"""Coefficient algebra over the formal basis {phi, psi}.

phi and psi are the functionals paired with the normalized deficiency
vectors: (g_+, phi) = 1, (g_+, psi) = 0, (g_-, phi) = 0, (g_-, psi) = 1.
They are never realized; every identity is checked on coefficients.

Operators are stored as 2x2 matrices M with the meaning

    sum_{j,k} M[j, k] ( . , b_j) b_k,    b_1 = phi, b_2 = psi.

The bra slot is conjugate-linear: ( . , c phi) contributes conj(c).
The A* part common to every state-space operator is left implicit.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from donoghue.errors import ConditioningWarning, NotUnimodular, ParameterOutOfRange

UNIMODULAR_TOL = 1e-12
CONDITIONING_FLOOR = 1e-8


@dataclass(frozen=True)
class CoeffVector:
    """c_phi * phi + c_psi * psi."""

    c_phi: complex
    c_psi: complex

    def __post_init__(self):
        object.__setattr__(self, "c_phi", complex(self.c_phi))
        object.__setattr__(self, "c_psi", complex(self.c_psi))

    def __add__(self, other):
        return CoeffVector(self.c_phi + other.c_phi, self.c_psi + other.c_psi)

    def __sub__(self, other):
        return CoeffVector(self.c_phi - other.c_phi, self.c_psi - other.c_psi)

    def __mul__(self, scalar):
        return CoeffVector(scalar * self.c_phi, scalar * self.c_psi)

    __rmul__ = __mul__

    def __neg__(self):
        return CoeffVector(-self.c_phi, -self.c_psi)

    def as_array(self) -> np.ndarray:
        return np.array([self.c_phi, self.c_psi], dtype=complex)

    def conj(self) -> "CoeffVector":
        return CoeffVector(self.c_phi.conjugate(), self.c_psi.conjugate())

    def max_dev(self, other: "CoeffVector") -> float:
        return float(np.max(np.abs(self.as_array() - other.as_array())))

    def to_dict(self):
        return {
            "c_phi": {"re": self.c_phi.real, "im": self.c_phi.imag},
            "c_psi": {"re": self.c_psi.real, "im": self.c_psi.imag},
        }


PHI = CoeffVector(1, 0)
PSI = CoeffVector(0, 1)


@dataclass(frozen=True, eq=False)
class OperatorCoeffs:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError("operator coefficients form a 2x2 matrix")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __add__(self, other):
        return OperatorCoeffs(self.matrix + other.matrix)

    def __sub__(self, other):
        return OperatorCoeffs(self.matrix - other.matrix)

    def __mul__(self, scalar):
        return OperatorCoeffs(scalar * self.matrix)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, OperatorCoeffs):
            return NotImplemented
        return self.max_dev(other) <= 1e-12

    __hash__ = None

    def max_dev(self, other: "OperatorCoeffs") -> float:
        return float(np.max(np.abs(self.matrix - other.matrix)))

    def row_major_pairs(self):
        """Four (re, im) pairs in row-major order, the fixture format."""
        return [[z.real, z.imag] for z in self.matrix.ravel()]


@dataclass(frozen=True)
class RankOnePerturbation:
    """scalar * ( . , bra) ket."""

    scalar: complex
    bra: CoeffVector
    ket: CoeffVector

    def coeffs(self) -> OperatorCoeffs:
        return OperatorCoeffs(
            complex(self.scalar) * np.outer(np.conj(self.bra.as_array()), self.ket.as_array())
        )


@dataclass(frozen=True)
class DomVector:
    """c_plus * g_+ + c_minus * g_-."""

    c_plus: complex
    c_minus: complex

    def pairings(self) -> np.ndarray:
        """((v, phi), (v, psi))."""
        return np.array([self.c_plus, self.c_minus], dtype=complex)


def apply_to_dom(op: OperatorCoeffs, v: DomVector) -> CoeffVector:
    out = v.pairings() @ op.matrix
    return CoeffVector(out[0], out[1])


def _check(kappa: float, u: complex):
    kappa = float(kappa)
    u = complex(u)
    if not 0.0 <= kappa < 1.0:
        raise ParameterOutOfRange(f"kappa must lie in [0, 1), got {kappa!r}")
    if abs(abs(u) - 1.0) > UNIMODULAR_TOL:
        raise NotUnimodular(f"|U| = {abs(u)!r}, expected 1")
    if 1.0 - kappa * kappa < CONDITIONING_FLOOR:
        warnings.warn(
            f"1 - kappa^2 = {1.0 - kappa * kappa:.3g}; coefficients lose precision",
            ConditioningWarning,
            stacklevel=3,
        )
    return kappa, u


def _denominator(kappa, u):
    # sqrt(2) |1 + kappa U| sqrt(1 - kappa^2)
    return math.sqrt(2.0) * abs(1.0 + kappa * u) * math.sqrt(1.0 - kappa * kappa)


def chi_of(kappa: float, u: complex) -> CoeffVector:
    """Channel vector chi of the L-system with von Neumann parameters (kappa, U)."""
    kappa, u = _check(kappa, u)
    d = _denominator(kappa, u)
    return CoeffVector(
        (kappa * kappa + 1.0 + 2.0 * kappa * u) / d,
        (kappa * kappa * u + 2.0 * kappa + u) / d,
    )


def state_space_of(kappa: float, u: complex) -> OperatorCoeffs:
    """Perturbation c ( . , kappa phi + psi) chi added to A*."""
    kappa, u = _check(kappa, u)
    c = (
        math.sqrt(2.0)
        * 1j
        * (kappa + u.conjugate())
        / (abs(1.0 + kappa * u) * math.sqrt(1.0 - kappa * kappa))
    )
    return RankOnePerturbation(c, CoeffVector(kappa, 1.0), chi_of(kappa, u)).coeffs()


def im_of(kappa: float, u: complex) -> OperatorCoeffs:
    """Imaginary part ( . , chi) chi."""
    chi = chi_of(kappa, u)
    return RankOnePerturbation(1.0, chi, chi).coeffs()


def re_of(kappa: float, u: complex) -> OperatorCoeffs:
    """Real part perturbation -i sqrt(1-kappa^2)/(sqrt2 |1+kappa U|) ( . , phi - U psi) chi."""
    kappa, u = _check(kappa, u)
    c = -1j * math.sqrt(1.0 - kappa * kappa) / (math.sqrt(2.0) * abs(1.0 + kappa * u))
    return RankOnePerturbation(c, CoeffVector(1.0, -u), chi_of(kappa, u)).coeffs()


def decompose_check(kappa: float, u: complex) -> float:
    """Max entry of |state_space - (re + i im)|."""
    whole = state_space_of(kappa, u)
    parts = re_of(kappa, u) + 1j * im_of(kappa, u)
    return whole.max_dev(parts)


def quasi_kernel_vector(u: complex) -> DomVector:
    """g_+ + U g_-, which lies in the domain of the reference extension."""
    return DomVector(1.0, complex(u))


def main_operator_vector(kappa: float) -> DomVector:
    """g_+ - kappa g_-, which lies in the domain of the main operator."""
    return DomVector(1.0, -float(kappa))


def u_of_alpha(alpha: float) -> complex:
    """U = -e^{2i alpha} for the rotated reference extension."""
    return -cmath.exp(2j * alpha)
