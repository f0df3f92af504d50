"""Entropy and dissipation as functions of the norming constant a.

S(a) = ln|(a + 1)/(a - 1)| and D(a) = 4a/(1 + a)^2, both invariant under
a -> 1/a. The one-form dS has simple poles at a = +1 and a = -1.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Sequence

from donoghue.errors import ParameterOutOfRange

INF = math.inf


def _positive(a: float) -> float:
    a = float(a)
    if not a > 0 or math.isnan(a):
        raise ParameterOutOfRange(f"a must be positive, got {a!r}")
    return a


def entropy_of_a(a: float) -> float:
    a = _positive(a)
    if a == 1.0:
        return INF
    if a < 1.0:
        # log1p keeps digits for small a
        return math.log1p(a) - math.log1p(-a)
    return math.log((a + 1.0) / (a - 1.0))


def dissipation_of_a(a: float) -> float:
    a = _positive(a)
    return 4.0 * a / ((1.0 + a) * (1.0 + a))


class CurvePoint(NamedTuple):
    a: float
    entropy: float
    dissipation: float


def curve(amin: float, amax: float, n: int) -> list[CurvePoint]:
    """Evenly spaced samples of (a, S(a), D(a)) on [amin, amax]."""
    amin, amax = _positive(amin), _positive(amax)
    if n < 1:
        raise ParameterOutOfRange("n must be at least 1")
    if amax < amin:
        raise ParameterOutOfRange("amax must not be below amin")
    if n == 1:
        pts = [amin]
    else:
        step = (amax - amin) / (n - 1)
        pts = [amin + k * step for k in range(n - 1)] + [amax]
    return [CurvePoint(a, entropy_of_a(a), dissipation_of_a(a)) for a in pts]


def entropy_derivative(a: float) -> float:
    """dS/da = 1/(a + 1) - 1/(a - 1)."""
    return 1.0 / (a + 1.0) - 1.0 / (a - 1.0)


def residue_probe(pole: int, hs: Sequence[float]) -> float:
    """Estimate the residue of dS at a = pole from (a - pole) S'(a), a = pole + h.

    The samples are extrapolated to h = 0 with Neville's scheme, so a
    single h gives the raw first-order value.
    """
    if pole not in (1, -1):
        raise ParameterOutOfRange("pole must be +1 or -1")
    hs = [float(h) for h in hs]
    if not hs:
        raise ParameterOutOfRange("need at least one step size")
    if any(not 0 < h <= 0.1 for h in hs):
        raise ParameterOutOfRange("step sizes must lie in (0, 0.1]")
    if any(b >= a for a, b in zip(hs, hs[1:])):
        raise ParameterOutOfRange("step sizes must be strictly decreasing")
    vals = [h * entropy_derivative(pole + h) for h in hs]
    # Neville tableau evaluated at h = 0
    p = list(vals)
    for k in range(1, len(hs)):
        for i in range(len(hs) - k):
            p[i] = (hs[i] * p[i + 1] - hs[i + k] * p[i]) / (hs[i] - hs[i + k])
    return p[0]


class MatchingPair(NamedTuple):
    a_small: float
    a_large: float
    double_root: bool


def matching_pair(d_target: float) -> MatchingPair:
    """Both a > 0 with 4a/(1 + a)^2 = d_target; a_small * a_large = 1."""
    d = float(d_target)
    if d == 1.0:
        return MatchingPair(1.0, 1.0, True)
    if not 0.0 < d < 1.0:
        raise ParameterOutOfRange(f"dissipation target must lie in (0, 1], got {d!r}")
    big = 2.0 - d + 2.0 * math.sqrt(1.0 - d)
    # small root as d/big avoids cancellation in (2 - d - 2 sqrt(1 - d))/d
    return MatchingPair(d / big, big / d, False)
