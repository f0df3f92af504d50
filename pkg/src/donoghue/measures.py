"""Finite spectral measures and their Herglotz transforms.

A :class:`SpectralMeasure` is a finite set of point masses plus an optional
tabulated density, shifted by a real constant ``q``. Its transform is

    M(z) = q + integral (1/(lam - z) - lam/(1 + lam**2)) dsigma(lam),

with the density part integrated by the composite trapezoid rule on the
tabulated grid. Such measures are finite stand-ins for the infinite measures
of the general theory, which is why every instance reports ``surrogate=True``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from donoghue._backend import kernels
from donoghue.errors import DonoghueError, EmptyMeasure, RealAxisEvaluation

__all__ = [
    "Density",
    "SpectralMeasure",
    "norming_constant",
    "herglotz_transform",
    "herglotz_transform_many",
]


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Density:
    """Nonnegative density tabulated on a strictly increasing grid."""

    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        grid = _frozen(self.grid)
        values = _frozen(self.values)
        if grid.ndim != 1 or grid.size < 2:
            raise DonoghueError("density grid needs at least two points")
        if values.shape != grid.shape:
            raise DonoghueError("density grid and values differ in length")
        if not (np.all(np.isfinite(grid)) and np.all(np.isfinite(values))):
            raise DonoghueError("density data must be finite")
        if np.any(np.diff(grid) <= 0):
            raise DonoghueError("density grid must be strictly increasing")
        if np.any(values < 0):
            raise DonoghueError("density values must be nonnegative")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)

    def quadrature_nodes(self):
        """Return (nodes, weights) so that the trapezoid rule is a weighted sum."""
        return self.grid, kernels.trapezoid_weights(self.grid) * self.values

    def __eq__(self, other):
        if not isinstance(other, Density):
            return NotImplemented
        return np.array_equal(self.grid, other.grid) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.grid.tobytes(), self.values.tobytes()))


@dataclass(frozen=True, eq=False)
class SpectralMeasure:
    """Point masses ``atoms`` = ((lam, weight), ...), optional density, shift ``q``."""

    atoms: tuple = ()
    density: Density | None = None
    shift_q: float = 0.0
    _lam: np.ndarray = field(init=False, repr=False)
    _w: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        atoms = tuple((float(lam), float(wt)) for lam, wt in self.atoms)
        for lam, wt in atoms:
            if not (math.isfinite(lam) and math.isfinite(wt)):
                raise DonoghueError("atom data must be finite")
            if wt <= 0:
                raise DonoghueError(f"atom weight must be positive, got {wt!r} at {lam!r}")
        if len({lam for lam, _ in atoms}) != len(atoms):
            raise DonoghueError("atom locations must be pairwise distinct")
        q = float(self.shift_q)
        if not math.isfinite(q):
            raise DonoghueError("shift q must be finite")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "shift_q", q)

        lam = [a[0] for a in atoms]
        w = [a[1] for a in atoms]
        if self.density is not None:
            nodes, tw = self.density.quadrature_nodes()
            lam.extend(nodes)
            w.extend(tw)
        object.__setattr__(self, "_lam", _frozen(lam))
        object.__setattr__(self, "_w", _frozen(w))

    @classmethod
    def from_atoms(cls, lambdas: Sequence[float], weights: Sequence[float], q: float = 0.0):
        if len(lambdas) != len(weights):
            raise DonoghueError("lambdas and weights differ in length")
        return cls(atoms=tuple(zip(lambdas, weights)), shift_q=q)

    @property
    def is_empty(self) -> bool:
        return not self.atoms and self.density is None

    @property
    def surrogate(self) -> bool:
        # finite data always stands in for an infinite measure
        return True

    def scaled(self, factor: float) -> "SpectralMeasure":
        """Multiply every mass (atoms and density) by ``factor`` > 0."""
        if not factor > 0:
            raise DonoghueError("scale factor must be positive")
        density = None
        if self.density is not None:
            density = Density(self.density.grid, self.density.values * factor)
        return SpectralMeasure(
            atoms=tuple((lam, wt * factor) for lam, wt in self.atoms),
            density=density,
            shift_q=self.shift_q,
        )

    def union(self, other: "SpectralMeasure") -> "SpectralMeasure":
        """Atomic union; shifts add. Both measures must be purely atomic."""
        if self.density is not None or other.density is not None:
            raise DonoghueError("union is defined for purely atomic measures")
        return SpectralMeasure(
            atoms=self.atoms + other.atoms, shift_q=self.shift_q + other.shift_q
        )

    def __eq__(self, other):
        if not isinstance(other, SpectralMeasure):
            return NotImplemented
        return (
            sorted(self.atoms) == sorted(other.atoms)
            and self.density == other.density
            and self.shift_q == other.shift_q
        )

    def __hash__(self):
        return hash((tuple(sorted(self.atoms)), self.density, self.shift_q))

    # -- JSON document -------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "q": self.shift_q,
            "atoms": [{"lambda": lam, "weight": wt} for lam, wt in self.atoms],
            "density": None
            if self.density is None
            else {
                "grid": self.density.grid.tolist(),
                "values": self.density.values.tolist(),
            },
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "SpectralMeasure":
        if not isinstance(doc, dict):
            raise DonoghueError("measure document must be a JSON object")
        unknown = set(doc) - {"q", "atoms", "density"}
        if unknown:
            raise DonoghueError(f"unknown measure fields: {sorted(unknown)}")
        try:
            atoms = tuple((a["lambda"], a["weight"]) for a in doc.get("atoms", []))
        except (KeyError, TypeError) as exc:
            raise DonoghueError(f"malformed atom entry: {exc}") from None
        density = doc.get("density")
        if density is not None:
            try:
                density = Density(density["grid"], density["values"])
            except (KeyError, TypeError) as exc:
                raise DonoghueError(f"malformed density: {exc}") from None
        q = doc.get("q", 0.0)
        if isinstance(q, bool) or not isinstance(q, (int, float)):
            raise DonoghueError("q must be a real number")
        return cls(atoms=atoms, density=density, shift_q=q)

    @classmethod
    def from_json(cls, text: str) -> "SpectralMeasure":
        return cls.from_dict(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def norming_constant(sigma: SpectralMeasure) -> float:
    """Return a = integral dsigma / (1 + lam**2)."""
    if sigma.is_empty:
        raise EmptyMeasure("norming constant of an empty measure")
    return kernels.norming_sum(sigma._lam, sigma._w)


def _check_off_axis(z: np.ndarray):
    if np.any(z.imag == 0):
        raise RealAxisEvaluation("Herglotz transform is evaluated off the real axis only")


def herglotz_transform_many(sigma: SpectralMeasure, zs: Iterable[complex]) -> np.ndarray:
    """Vectorized :func:`herglotz_transform` over an array of points."""
    z = np.ascontiguousarray(np.asarray(zs, dtype=np.complex128).ravel())
    _check_off_axis(z)
    return sigma.shift_q + kernels.herglotz_sum(sigma._lam, sigma._w, z)


def herglotz_transform(sigma: SpectralMeasure, z: complex) -> complex:
    return complex(herglotz_transform_many(sigma, [z])[0])
