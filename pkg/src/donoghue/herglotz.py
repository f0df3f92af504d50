"""Herglotz-Nevanlinna function values and the Moebius maps acting on them.

Functions are represented as small immutable expression trees
(:class:`FromMeasure`, :class:`ClosedForm`, :class:`Scaled`,
:class:`AlphaRotated`) evaluated recursively on the upper half-plane.
Lower half-plane values are produced through the symmetry
f(conj z) = conj f(z); nothing is continued analytically.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from donoghue.errors import (
    DonoghueError,
    MoebiusPole,
    NotCentered,
    NotHerglotz,
    PoleAtCayleyCenter,
    RealAxisEvaluation,
    UnknownClosedForm,
)
from donoghue.measures import SpectralMeasure, herglotz_transform, herglotz_transform_many

CLASS_TOL = 1e-9

M_KAPPA = "M_kappa"
M_0 = "M_0"
M_KAPPA_INV = "M_kappa_inv"


def cayley_m_to_s(m_value: complex) -> complex:
    """s = (m - i)/(m + i)."""
    m = complex(m_value)
    if m == -1j:
        raise PoleAtCayleyCenter("m = -i is the pole of (m - i)/(m + i)")
    return (m - 1j) / (m + 1j)


def cayley_s_to_m(s_value: complex) -> complex:
    """m = (1/i)(s + 1)/(s - 1), inverse of :func:`cayley_m_to_s`."""
    s = complex(s_value)
    if s == 1:
        raise PoleAtCayleyCenter("s = 1 is the pole of (s + 1)/(s - 1)")
    return -1j * (s + 1) / (s - 1)


def canonical_alpha(alpha: float) -> float:
    """Reduce an angle into [0, pi)."""
    a = math.fmod(float(alpha), math.pi)
    if a < 0:
        a += math.pi
    if a >= math.pi:
        a = 0.0
    return a


def _cos_sin(alpha: float):
    # exact values on the quarter turns keep alpha = pi/2 an honest -1/m
    a = canonical_alpha(alpha)
    if a == 0.0:
        return 1.0, 0.0
    if a == math.pi / 2:
        return 0.0, 1.0
    return math.cos(a), math.sin(a)


def alpha_transform(m_value: complex, alpha: float) -> complex:
    """(cos a * m - sin a)/(cos a + sin a * m), the change of reference extension."""
    m = complex(m_value)
    c, s = _cos_sin(alpha)
    den = c + s * m
    if den == 0:
        raise MoebiusPole(f"cos(alpha) + sin(alpha) * m vanishes at alpha={alpha!r}, m={m!r}")
    return (c * m - s) / den


def livsic_phase_law_check(s_value: complex, alpha: float) -> complex:
    """Phase-rotated Livsic value e^{2i alpha} s."""
    return cmath.exp(2j * float(alpha)) * complex(s_value)


# -- expression trees ----------------------------------------------------

_CLOSED_FORMS: dict[str, tuple[Callable[..., complex], tuple[str, ...]]] = {}


def register_closed_form(name: str, params: tuple[str, ...]):
    """Register ``fn(z, **params)`` under ``name`` for use in :class:`ClosedForm`."""

    def deco(fn):
        _CLOSED_FORMS[name] = (fn, params)
        return fn

    return deco


def closed_form_names():
    return sorted(_CLOSED_FORMS)


class HerglotzMap:
    """Base class; subclasses implement ``_upper`` for Im z > 0."""

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        if z.imag > 0:
            return self._upper(z)
        if z.imag < 0:
            return self._upper(z.conjugate()).conjugate()
        raise RealAxisEvaluation(f"cannot evaluate on the real axis (z={z!r})")

    def many(self, zs) -> np.ndarray:
        return np.array([self(z) for z in np.asarray(zs, dtype=complex).ravel()])

    def _upper(self, z: complex) -> complex:
        raise NotImplementedError

    def to_dict(self) -> dict:
        raise NotImplementedError

    @staticmethod
    def from_dict(doc: dict) -> "HerglotzMap":
        kind = doc.get("kind")
        if kind == "from_measure":
            return FromMeasure(SpectralMeasure.from_dict(doc["measure"]))
        if kind == "closed_form":
            return ClosedForm(doc["name"], tuple(sorted(doc["params"].items())))
        if kind == "scaled":
            return Scaled(doc["a"], HerglotzMap.from_dict(doc["inner"]))
        if kind == "alpha_rotated":
            return AlphaRotated(doc["alpha"], HerglotzMap.from_dict(doc["inner"]))
        raise DonoghueError(f"unknown HerglotzMap kind {kind!r}")


@dataclass(frozen=True)
class FromMeasure(HerglotzMap):
    measure: SpectralMeasure

    def _upper(self, z):
        return herglotz_transform(self.measure, z)

    def many(self, zs):
        zs = np.asarray(zs, dtype=complex).ravel()
        if np.all(zs.imag != 0):
            return herglotz_transform_many(self.measure, zs)
        return super().many(zs)

    def to_dict(self):
        return {"kind": "from_measure", "measure": self.measure.to_dict()}


@dataclass(frozen=True)
class ClosedForm(HerglotzMap):
    """A registered analytic expression; ``params`` is a sorted tuple of pairs."""

    name: str
    params: tuple = ()

    def __post_init__(self):
        if self.name not in _CLOSED_FORMS:
            raise UnknownClosedForm(f"no closed form registered as {self.name!r}")
        params = self.params
        if isinstance(params, dict):
            params = params.items()
        params = tuple(sorted((str(k), float(v)) for k, v in params))
        expected = tuple(sorted(_CLOSED_FORMS[self.name][1]))
        if tuple(k for k, _ in params) != expected:
            raise UnknownClosedForm(
                f"closed form {self.name!r} takes parameters {expected}, got {params}"
            )
        object.__setattr__(self, "params", params)

    @classmethod
    def of(cls, name, **params):
        return cls(name, tuple(params.items()))

    def _upper(self, z):
        fn, _ = _CLOSED_FORMS[self.name]
        return complex(fn(z, **dict(self.params)))

    def to_dict(self):
        return {"kind": "closed_form", "name": self.name, "params": dict(self.params)}


@dataclass(frozen=True)
class Scaled(HerglotzMap):
    a: float
    inner: HerglotzMap

    def __post_init__(self):
        if not float(self.a) > 0:
            raise DonoghueError("scale factor a must be positive")
        object.__setattr__(self, "a", float(self.a))

    def _upper(self, z):
        if self.a == 1.0:
            return self.inner._upper(z)
        return self.a * self.inner._upper(z)

    def to_dict(self):
        return {"kind": "scaled", "a": self.a, "inner": self.inner.to_dict()}


@dataclass(frozen=True)
class AlphaRotated(HerglotzMap):
    alpha: float
    inner: HerglotzMap

    def __post_init__(self):
        object.__setattr__(self, "alpha", canonical_alpha(self.alpha))

    def _upper(self, z):
        if self.alpha == 0.0:
            return self.inner._upper(z)
        return alpha_transform(self.inner._upper(z), self.alpha)

    def to_dict(self):
        return {"kind": "alpha_rotated", "alpha": self.alpha, "inner": self.inner.to_dict()}


@dataclass(frozen=True)
class LivsicMap:
    """s(z) = Cayley image of an underlying Herglotz function."""

    herglotz: HerglotzMap

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        if not z.imag > 0:
            raise RealAxisEvaluation("the Livsic function is evaluated on Im z > 0")
        return cayley_m_to_s(self.herglotz(z))


# -- classification ------------------------------------------------------


@dataclass(frozen=True)
class ClassReport:
    a: float
    kappa: float
    class_tag: str
    surrogate: bool = False

    def to_dict(self):
        return {"a": self.a, "kappa": self.kappa, "class": self.class_tag}


def kappa_of_a(a: float, tol: float = CLASS_TOL) -> float:
    """Von Neumann parameter attached to a norming constant a > 0."""
    if abs(a - 1.0) <= tol:
        return 0.0
    return abs(1.0 - a) / (1.0 + a)


def class_tag_of_a(a: float, tol: float = CLASS_TOL) -> str:
    if a < 1.0 - tol:
        return M_KAPPA
    if a > 1.0 + tol:
        return M_KAPPA_INV
    return M_0


def classify(f: HerglotzMap, tol: float = CLASS_TOL) -> ClassReport:
    """Norming constant, kappa and Donoghue class of f from its value at i."""
    v = f(1j)
    if abs(v.real) > tol:
        raise NotCentered(f"Re f(i) = {v.real!r}; classification needs a centered function")
    a = v.imag
    if not a > 0:
        raise NotHerglotz(f"Im f(i) = {a!r} is not positive")
    return ClassReport(
        a=a,
        kappa=kappa_of_a(a, tol),
        class_tag=class_tag_of_a(a, tol),
        surrogate=_is_surrogate(f),
    )


def _is_surrogate(f: HerglotzMap) -> bool:
    if isinstance(f, FromMeasure):
        return f.measure.surrogate
    if isinstance(f, (Scaled, AlphaRotated)):
        return _is_surrogate(f.inner)
    return False


def sample_grid(n: int, seed: int | None = None) -> np.ndarray:
    """Deterministic upper half-plane test points.

    Real parts sweep [-4, 4]; imaginary parts cycle through [0.05, 20] on a
    log scale. With ``seed`` the points are drawn at random from the same box.
    """
    if n < 1:
        raise DonoghueError("grid size must be positive")
    if seed is not None:
        rng = np.random.default_rng(seed)
        return rng.uniform(-4, 4, n) + 1j * 10 ** rng.uniform(math.log10(0.05), math.log10(20), n)
    k = np.arange(n)
    x = np.linspace(-4.0, 4.0, n) if n > 1 else np.zeros(1)
    t = (k * 7 % n) / max(n - 1, 1)
    y = 0.05 * (20 / 0.05) ** t
    return x + 1j * y
