import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from donoghue import differential_example as dx
from donoghue.bi_extension import PHI, PSI, chi_of
from donoghue.errors import (
    MoebiusPole,
    NotDonoghueNormalized,
    ParameterOutOfRange,
    UnsupportedCombination,
)
from donoghue.herglotz import ClosedForm, FromMeasure, classify
from donoghue.lsystem import (
    EntropyReport,
    c_entropy,
    couple,
    dissipation_coefficient,
    entropy_cross_check,
    entropy_dissipation_check,
    impedance_to_transfer,
    represent,
    transfer_to_impedance,
)
from donoghue.measures import SpectralMeasure

from conftest import ELLS, random_measure

INF = math.inf


@pytest.fixture
def m0(pm1):
    return pm1


# -- duality ---------------------------------------------------------------


def test_transfer_of_zero_impedance():
    assert impedance_to_transfer(0) == 1


@pytest.mark.parametrize("a", [0.1, 1 / 3, 0.8])
def test_transfer_at_conjugate_point_gives_kappa(a):
    # V(-i) = conj(V(i)) = -ia for V = aM in the Donoghue class
    kappa = (1 - a) / (1 + a)
    assert impedance_to_transfer(-1j * a) == pytest.approx(kappa, rel=1e-15)
    assert impedance_to_transfer(1j * a) == pytest.approx(1 / kappa, rel=1e-15)


def test_example_transfer_round_trip():
    ell = math.log(2)
    w = dx.ex_transfer_theta1a(ell, -1j)
    assert w == pytest.approx(0.5)
    v = transfer_to_impedance(w)
    assert v == pytest.approx(-1j / 3, abs=1e-15)
    assert impedance_to_transfer(v) == pytest.approx(w, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(st.builds(complex, st.floats(-50, 50), st.floats(1e-6, 50)))
def test_duality_inverse(v):
    w = impedance_to_transfer(v)
    assert abs(transfer_to_impedance(w) - v) <= 1e-9 * max(1.0, abs(v)) ** 2


def test_duality_poles():
    with pytest.raises(MoebiusPole):
        impedance_to_transfer(1j)
    with pytest.raises(MoebiusPole):
        transfer_to_impedance(-1)


# -- entropy and dissipation --------------------------------------------------


@pytest.mark.parametrize("a,kappa,s,d", [(1.0, 0.0, INF, 1.0), (1 / 3, 0.5, math.log(2), 0.75), (3.0, 0.5, math.log(2), 0.75)])
def test_represent_examples(m0, a, kappa, s, d):
    rec = represent(a, 0, m0)
    assert rec.kappa == pytest.approx(kappa, abs=1e-15)
    assert c_entropy(rec) == pytest.approx(s, rel=1e-14)
    assert dissipation_coefficient(rec) == pytest.approx(d, rel=1e-14)
    assert entropy_dissipation_check(rec) < 1e-12


@pytest.mark.parametrize("ell", [0.5, 1.0, 2.0])
def test_entropy_of_example_kappa(m0, ell):
    a = math.tanh(ell / 2)
    rec = represent(a, 0, m0)
    assert rec.kappa == pytest.approx(math.exp(-ell), rel=1e-14)
    assert c_entropy(rec) == pytest.approx(ell, rel=1e-12)
    assert dissipation_coefficient(rec) == pytest.approx(1 - math.exp(-2 * ell), rel=1e-12)


def test_unit_record(m0):
    rec = represent(1, 0, m0)
    assert (rec.kappa, rec.u, rec.provenance) == (0.0, -1, "t-6")
    assert rec.channel.max_dev((1 / math.sqrt(2)) * (PHI - PSI)) == 0
    assert entropy_dissipation_check(rec) == 0


def test_rotated_record(m0):
    rec = represent(1, math.pi / 2, m0)
    assert rec.provenance == "t-8"
    assert rec.u == pytest.approx(1)
    f = FromMeasure(m0)
    for z in (1j, 0.5 + 2j, -3 + 0.1j):
        assert rec.impedance(z) == pytest.approx(-1 / f(z), rel=1e-14)


def test_branch_tags(m0):
    assert represent(0.5, 0, m0).provenance == "t-9"
    assert represent(2.0, 0, m0).provenance == "t-10"
    assert represent(2.0, 0, m0).u == 1


def test_represent_errors(m0):
    with pytest.raises(ParameterOutOfRange):
        represent(0, 0, m0)
    with pytest.raises(UnsupportedCombination):
        represent(0.5, 0.3, m0)
    with pytest.raises(NotDonoghueNormalized):
        represent(1, 0, SpectralMeasure.from_atoms([0.0], [2.0]))
    with pytest.raises(NotDonoghueNormalized):
        represent(1, 0, SpectralMeasure(atoms=((0.0, 1.0),), shift_q=0.5))


def test_represent_accepts_closed_form():
    rec = represent(0.5, 0, dx.weyl_map(1.0))
    assert rec.impedance(1j) == pytest.approx(0.5j, abs=1e-12)


@pytest.mark.parametrize("a", [0.1, 0.5, 1.0, 2.0, 10.0])
def test_impedance_normalization_and_channel(a):
    sigma = random_measure(np.random.default_rng(9), 14, normalize=True)
    rec = represent(a, 0, sigma)
    assert rec.impedance(1j) == pytest.approx(1j * a, abs=1e-10)
    assert rec.channel == chi_of(rec.kappa, rec.u)
    report = classify(rec.impedance)
    assert report.a == pytest.approx(a, abs=1e-10)
    assert report.kappa == pytest.approx(rec.kappa, abs=1e-10)


@pytest.mark.parametrize("a", [0.2, 0.6, 1.7, 5.0])
def test_entropy_two_routes(a):
    rec = represent(a, 0, random_measure(np.random.default_rng(12), 9, normalize=True))
    check = entropy_cross_check(rec)
    assert check.max_disagreement < 1e-9
    assert check.from_transfer_minus_i == pytest.approx(c_entropy(rec), abs=1e-9)


def test_entropy_routes_at_unit(m0):
    check = entropy_cross_check(represent(1, 0, m0))
    assert check.from_kappa == INF and check.from_transfer_plus_i is None


def test_record_equality(m0):
    assert represent(0.5, 0, m0) == represent(0.5, 0, m0)
    assert represent(0.5, 0, m0) != represent(0.6, 0, m0)
    assert represent(1.0, 0, m0) != represent(1.0, 0.3, m0)


def test_record_json(m0):
    d = represent(3.0, 0, m0).to_dict()
    assert set(d) == {"kappa", "u", "a", "alpha", "chi", "provenance"}
    assert d["u"] == {"re": 1.0, "im": 0.0}


@pytest.mark.parametrize("ell", ELLS)
def test_transfer_symmetry_closed_forms(ell, grid50):
    for w in (dx.ex_transfer_theta10, dx.ex_transfer_theta1a, dx.ex_transfer_theta1a_inv):
        for z in grid50:
            assert abs(w(ell, z) * w(ell, z.conjugate()).conjugate() - 1) < 1e-10


def test_record_transfer_symmetry(grid50):
    rec = represent(1.0, 0, dx.weyl_map(1.0))
    for z in grid50[:10]:
        assert abs(rec.transfer(z) * rec.transfer(z.conjugate()).conjugate() - 1) < 1e-10


# -- reports and coupling ---------------------------------------------------------


def test_report_validation():
    with pytest.raises(ParameterOutOfRange):
        EntropyReport(-1, 0)
    with pytest.raises(ParameterOutOfRange):
        EntropyReport(1, 0.2)
    with pytest.raises(ParameterOutOfRange):
        EntropyReport.from_kappa(1.0)
    assert EntropyReport(INF, 1).law_residual() == 0


def test_couple_example():
    r = couple(EntropyReport.from_kappa(0.5), EntropyReport(math.log(3), 8 / 9))
    assert r.entropy == math.log(2) + math.log(3)
    assert r.entropy == pytest.approx(math.log(6), rel=1e-15)
    assert r.dissipation == pytest.approx(35 / 36, abs=1e-12)


def test_couple_identity_and_absorbing():
    x = EntropyReport.from_kappa(0.3)
    assert couple(EntropyReport(0, 0), x) == x
    assert couple(EntropyReport(INF, 1), x) == EntropyReport(INF, 1)


reports = st.one_of(
    st.floats(1e-6, 0.999999).map(EntropyReport.from_kappa),
    st.just(EntropyReport(INF, 1.0)),
    st.just(EntropyReport(0.0, 0.0)),
)


@settings(max_examples=100, deadline=None)
@given(reports, reports, reports)
def test_coupling_commutes_and_associates(r1, r2, r3):
    assert couple(r1, r2).entropy == couple(r2, r1).entropy
    assert couple(r1, r2).dissipation == pytest.approx(couple(r2, r1).dissipation, abs=1e-12)
    left, right = couple(couple(r1, r2), r3), couple(r1, couple(r2, r3))
    assert left.entropy == pytest.approx(right.entropy, rel=1e-15) or left.entropy == right.entropy
    assert abs(left.dissipation - right.dissipation) < 1e-12


def test_law_on_random_kappa():
    rng = np.random.default_rng(0)
    for k in rng.uniform(0, 1, 100):
        assert EntropyReport.from_kappa(k).law_residual() < 1e-12
