"""L-system records: impedance/transfer duality, c-entropy, dissipation, coupling.

:func:`represent` builds the unique record whose impedance is
``a * M`` (or the alpha-rotated ``M`` when a = 1) for a Donoghue-class M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from donoghue import bi_extension
from donoghue.bi_extension import CoeffVector
from donoghue.errors import (
    DonoghueError,
    MoebiusPole,
    NotDonoghueNormalized,
    ParameterOutOfRange,
    UnsupportedCombination,
)
from donoghue.herglotz import (
    CLASS_TOL,
    M_0,
    AlphaRotated,
    FromMeasure,
    HerglotzMap,
    Scaled,
    canonical_alpha,
    classify,
    kappa_of_a,
)
from donoghue.measures import SpectralMeasure

INF = math.inf
REPORT_TOL = 1e-9

# provenance tags naming the representation branch
BRANCH_UNIT = "t-6"
BRANCH_ROTATED = "t-8"
BRANCH_BELOW_ONE = "t-9"
BRANCH_ABOVE_ONE = "t-10"


def impedance_to_transfer(v_value: complex) -> complex:
    """W = (1 + iV)^{-1}(1 - iV)."""
    v = complex(v_value)
    den = 1 + 1j * v
    if den == 0:
        raise MoebiusPole("1 + iV vanishes")
    return (1 - 1j * v) / den


def transfer_to_impedance(w_value: complex) -> complex:
    """V = i(W + 1)^{-1}(W - 1)."""
    w = complex(w_value)
    if w == -1:
        raise MoebiusPole("W = -1 has no impedance")
    return 1j * (w - 1) / (w + 1)


@dataclass(frozen=True, eq=False)
class LSystemRecord:
    kappa: float
    u: complex
    a: float
    alpha: float
    impedance: HerglotzMap
    channel: CoeffVector
    provenance: str

    def __eq__(self, other):
        if not isinstance(other, LSystemRecord):
            return NotImplemented
        return (
            self.kappa == other.kappa
            and self.u == other.u
            and self.impedance == other.impedance
        )

    def __hash__(self):
        return hash((self.kappa, self.u, self.impedance))

    def transfer(self, z: complex) -> complex:
        return impedance_to_transfer(self.impedance(z))

    def to_dict(self):
        return {
            "kappa": self.kappa,
            "u": {"re": self.u.real, "im": self.u.imag},
            "a": self.a,
            "alpha": self.alpha,
            "chi": self.channel.to_dict(),
            "provenance": self.provenance,
        }


def _branch(a: float, alpha: float):
    if abs(a - 1.0) <= CLASS_TOL:
        if alpha == 0.0:
            return 0.0, -1 + 0j, BRANCH_UNIT
        return 0.0, bi_extension.u_of_alpha(alpha), BRANCH_ROTATED
    if alpha != 0.0:
        raise UnsupportedCombination("alpha rotation is only represented at a = 1")
    if a < 1.0:
        return kappa_of_a(a), -1 + 0j, BRANCH_BELOW_ONE
    return kappa_of_a(a), 1 + 0j, BRANCH_ABOVE_ONE


def represent(a: float, alpha: float, reference) -> LSystemRecord:
    """Record realizing a * M_alpha as an impedance, for M in the Donoghue class.

    ``reference`` is a :class:`HerglotzMap` or a :class:`SpectralMeasure`.
    """
    a = float(a)
    if not a > 0 or not math.isfinite(a):
        raise ParameterOutOfRange(f"a must be positive, got {a!r}")
    alpha = canonical_alpha(alpha)
    kappa, u, provenance = _branch(a, alpha)
    m = FromMeasure(reference) if isinstance(reference, SpectralMeasure) else reference
    try:
        report = classify(m)
    except DonoghueError as exc:
        raise NotDonoghueNormalized(f"reference is not in the Donoghue class: {exc}") from None
    if report.class_tag != M_0:
        raise NotDonoghueNormalized(f"reference has norming constant {report.a!r}, expected 1")
    return LSystemRecord(
        kappa=kappa,
        u=u,
        a=a,
        alpha=alpha,
        impedance=Scaled(a, AlphaRotated(alpha, m)),
        channel=bi_extension.chi_of(kappa, u),
        provenance=provenance,
    )


# -- entropy and dissipation --------------------------------------------


def entropy_of_kappa(kappa: float) -> float:
    return INF if kappa == 0 else -math.log(kappa)


def dissipation_of_kappa(kappa: float) -> float:
    return 1.0 - kappa * kappa


def c_entropy(rec: LSystemRecord) -> float:
    """-ln kappa, +inf when kappa = 0."""
    return entropy_of_kappa(rec.kappa)


def dissipation_coefficient(rec: LSystemRecord) -> float:
    """1 - kappa^2 for the dot-normalized domain vector g'_+ - kappa g'_-."""
    return dissipation_of_kappa(rec.kappa)


def _neg_log_abs(w: complex) -> float:
    r = abs(w)
    return INF if r == 0 else -math.log(r)


@dataclass(frozen=True)
class EntropyCrossCheck:
    from_kappa: float
    from_transfer_minus_i: float
    from_transfer_plus_i: float | None
    max_disagreement: float


def entropy_cross_check(rec: LSystemRecord) -> EntropyCrossCheck:
    """c-entropy from kappa, from -ln|W(-i)| and from ln|W(i)|.

    V(-i) comes from the symmetry V(conj z) = conj V(z). The W(i) route is
    skipped (None) when W has a pole at i, which is the kappa = 0 case.
    """
    s_kappa = c_entropy(rec)
    v_plus = rec.impedance(1j)
    s_minus = _neg_log_abs(impedance_to_transfer(v_plus.conjugate()))
    try:
        s_plus = math.log(abs(impedance_to_transfer(v_plus)))
    except MoebiusPole:
        s_plus = None
    routes = [s for s in (s_kappa, s_minus, s_plus) if s is not None]
    if all(math.isinf(s) for s in routes):
        spread = 0.0
    elif any(math.isinf(s) for s in routes):
        spread = INF
    else:
        spread = max(routes) - min(routes)
    return EntropyCrossCheck(s_kappa, s_minus, s_plus, spread)


@dataclass(frozen=True)
class EntropyReport:
    entropy: float
    dissipation: float

    def __post_init__(self):
        s, d = float(self.entropy), float(self.dissipation)
        if math.isnan(s) or s < 0:
            raise ParameterOutOfRange(f"entropy must be a nonnegative extended real, got {s!r}")
        if not 0.0 <= d <= 1.0:
            raise ParameterOutOfRange(f"dissipation must lie in [0, 1], got {d!r}")
        if abs(d - (1.0 - math.exp(-2.0 * s))) > REPORT_TOL:
            raise ParameterOutOfRange(
                f"dissipation {d!r} does not match 1 - exp(-2 * {s!r})"
            )
        object.__setattr__(self, "entropy", s)
        object.__setattr__(self, "dissipation", d)

    @classmethod
    def from_kappa(cls, kappa: float) -> "EntropyReport":
        if not 0.0 <= kappa < 1.0:
            raise ParameterOutOfRange(f"kappa must lie in [0, 1), got {kappa!r}")
        return cls(entropy_of_kappa(kappa), dissipation_of_kappa(kappa))

    @classmethod
    def from_entropy(cls, entropy: float) -> "EntropyReport":
        return cls(entropy, -math.expm1(-2.0 * entropy))

    @classmethod
    def of(cls, rec: LSystemRecord) -> "EntropyReport":
        return cls(c_entropy(rec), dissipation_coefficient(rec))

    def law_residual(self) -> float:
        return abs(self.dissipation - (1.0 - math.exp(-2.0 * self.entropy)))


def entropy_dissipation_check(rec) -> float:
    """|D - (1 - exp(-2 S))|; accepts a record or an :class:`EntropyReport`."""
    report = rec if isinstance(rec, EntropyReport) else EntropyReport.of(rec)
    return report.law_residual()


def couple(r1: EntropyReport, r2: EntropyReport) -> EntropyReport:
    """Entropies add, dissipations compose as D1 + D2 - D1 D2."""
    d1, d2 = r1.dissipation, r2.dissipation
    # rounding may push the composite a hair past 1
    return EntropyReport(r1.entropy + r2.entropy, min(d1 + d2 - d1 * d2, 1.0))
