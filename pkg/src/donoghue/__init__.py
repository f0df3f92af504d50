"""Donoghue-class Herglotz functions and the L-systems that realize them."""

from donoghue._backend import BACKEND
from donoghue.errors import *  # noqa: F401,F403
from donoghue.measures import Density, SpectralMeasure, herglotz_transform, norming_constant
from donoghue.herglotz import (
    AlphaRotated,
    ClassReport,
    ClosedForm,
    FromMeasure,
    HerglotzMap,
    LivsicMap,
    Scaled,
    alpha_transform,
    cayley_m_to_s,
    cayley_s_to_m,
    classify,
    livsic_phase_law_check,
)
from donoghue import differential_example  # registers the interval closed forms
from donoghue.lsystem import (
    EntropyReport,
    LSystemRecord,
    c_entropy,
    couple,
    dissipation_coefficient,
    impedance_to_transfer,
    represent,
    transfer_to_impedance,
)

__version__ = "0.1.0"
