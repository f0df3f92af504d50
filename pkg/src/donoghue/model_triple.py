"""Diagonal model of a symmetric operator built from a discrete measure.

In L2(sigma) with sigma = sum_j w_j delta_{lam_j}, the self-adjoint operator
is multiplication by lam, and the deficiency vectors are the functions
1/(lam - z). Everything here works with explicit vectors over the atoms and
the sigma-weighted inner product

    (f, g) = sum_j w_j f_j conj(g_j),

so it serves as an independent check on the closed-form Herglotz sums in
:mod:`donoghue.measures`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from donoghue.errors import (
    DegenerateDeficiencyPairing,
    DimensionMismatch,
    DonoghueError,
    EmptyMeasure,
    NotDonoghueNormalized,
    ParameterOutOfRange,
    RealAxisEvaluation,
)
from donoghue.herglotz import CLASS_TOL
from donoghue.measures import SpectralMeasure, herglotz_transform

MAX_ATOMS = 4096


@dataclass(frozen=True, eq=False)
class ModelTriple:
    lambdas: np.ndarray
    weights: np.ndarray
    kappa: float = 0.0

    def __post_init__(self):
        lam = np.array(self.lambdas, dtype=np.float64).ravel()
        w = np.array(self.weights, dtype=np.float64).ravel()
        if lam.size == 0:
            raise EmptyMeasure("model triple needs at least one atom")
        if lam.shape != w.shape:
            raise DimensionMismatch("lambdas and weights differ in length")
        if lam.size > MAX_ATOMS:
            raise DonoghueError(f"model triple is capped at {MAX_ATOMS} atoms")
        if np.any(w <= 0):
            raise DonoghueError("weights must be positive")
        if np.unique(lam).size != lam.size:
            raise DonoghueError("lambdas must be distinct")
        if not 0.0 <= float(self.kappa) < 1.0:
            raise ParameterOutOfRange("kappa must lie in [0, 1)")
        lam.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "lambdas", lam)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "kappa", float(self.kappa))

    @classmethod
    def from_measure(cls, sigma: SpectralMeasure, kappa: float = 0.0) -> "ModelTriple":
        if sigma.density is not None:
            raise DonoghueError("model triple takes a purely atomic measure")
        if not sigma.atoms:
            raise EmptyMeasure("model triple needs at least one atom")
        lam, w = zip(*sigma.atoms)
        return cls(lam, w, kappa)

    def to_measure(self) -> SpectralMeasure:
        return SpectralMeasure.from_atoms(self.lambdas.tolist(), self.weights.tolist())

    @property
    def n(self) -> int:
        return self.lambdas.size

    def inner(self, f, g) -> complex:
        return complex(np.sum(self.weights * f * np.conj(g)))

    def deficiency(self, z: complex) -> np.ndarray:
        """g_z(lam) = 1/(lam - z), spanning Ker(B* - z) of the restriction."""
        return 1.0 / (self.lambdas - complex(z))

    @property
    def g_plus(self) -> np.ndarray:
        return self.deficiency(1j)

    @property
    def g_minus(self) -> np.ndarray:
        return self.deficiency(-1j)

    def norming_constant(self) -> float:
        """||g_+||^2, which equals sum_j w_j/(1 + lam_j^2)."""
        return self.inner(self.g_plus, self.g_plus).real

    def resolvent(self, z: complex, f: np.ndarray) -> np.ndarray:
        return f / (self.lambdas - complex(z))

    def apply(self, f: np.ndarray) -> np.ndarray:
        return self.lambdas * f


def _off_axis(z):
    z = complex(z)
    if z.imag == 0:
        raise RealAxisEvaluation("evaluation point must be off the real axis")
    return z


def weyl_from_resolvent(model: ModelTriple, z: complex) -> complex:
    """((Bz + I)(B - z)^{-1} g, g) with g = g_+/||g_+||."""
    z = _off_axis(z)
    g = model.g_plus
    g = g / np.sqrt(model.inner(g, g).real)
    r = model.resolvent(z, g)
    return model.inner(z * model.apply(r) + r, g)


class OracleComparison(NamedTuple):
    scaled_weyl: complex
    transform: complex
    abs_dev: float


def oracle_compare(model: ModelTriple, z: complex) -> OracleComparison:
    """Compare a * (resolvent Weyl function) with the Herglotz transform of the atoms."""
    scaled = model.norming_constant() * weyl_from_resolvent(model, z)
    direct = herglotz_transform(model.to_measure(), z)
    return OracleComparison(scaled, direct, abs(scaled - direct))


def max_oracle_deviation(model: ModelTriple, zs) -> float:
    return max(oracle_compare(model, z).abs_dev for z in np.asarray(zs).ravel())


def livsic_from_deficiency(model: ModelTriple, z: complex, tol: float = CLASS_TOL) -> complex:
    """s(z) = ((z - i)/(z + i)) * (g_z, g_-)/(g_z, g_+)."""
    z = complex(z)
    if not z.imag > 0:
        raise RealAxisEvaluation("the Livsic function is evaluated on Im z > 0")
    a = model.norming_constant()
    if abs(a - 1.0) > tol:
        raise NotDonoghueNormalized(f"norming constant {a!r} differs from 1")
    gz = model.deficiency(z)
    den = model.inner(gz, model.g_plus)
    if den == 0:
        raise DegenerateDeficiencyPairing("(g_z, g_+) vanishes")
    return (z - 1j) / (z + 1j) * model.inner(gz, model.g_minus) / den


def domain_functional(model: ModelTriple, f) -> complex:
    """sum_j w_j f_j; zero exactly on the domain of the symmetric restriction."""
    f = np.asarray(f, dtype=complex).ravel()
    if f.size != model.n:
        raise DimensionMismatch(f"vector of length {f.size} for a model with {model.n} atoms")
    return complex(np.sum(model.weights * f))
