"""Exact q-oscillator representations of quantum loop Borel algebras.

The package computes, in exact rational-function arithmetic over the
deformation parameter q, the l-weights of the q-oscillator modules carried by
the positive Borel subalgebra of the quantum loop algebra of sl(l+1), and
verifies them against closed-form rational functions and prefundamental
tensor-product factorizations.
"""

from .borelrep import (
    Evaluator,
    OscWord,
    RepSpec,
    get_evaluator,
    image_e,
    image_qh,
    serre_check,
    weight_relation_check,
)
from .exactfield import (
    ConstantTermNotOne,
    DegreeMismatch,
    QRational,
    URational,
    USeries,
    ZeroConstantTerm,
    kappa,
    pade,
    qfactorial,
    qnum,
    series_invert,
    series_log,
)
from .fock import FockState, ModePattern, basis_vector
from .lweights import (
    LWeight,
    NotDiagonal,
    Weight,
    closed_lambda,
    closed_psi,
    factor_check,
    lweight_product,
    oscillator_lweight,
    phi_series,
    prefundamental,
    verify_grid,
)
from .rootsys import CartanExponent, NotAPositiveRoot, RootIndex, bilinear, cartan_entry
from .rootvectors import (
    chi,
    drinfeld_check,
    drinfeld_check_minus,
    e_dual,
    e_prime_imag,
    e_real,
    e_unprimed_imag,
    xi_minus,
    xi_plus,
)

__all__ = [
    "QRational",
    "USeries",
    "URational",
    "qnum",
    "qfactorial",
    "kappa",
    "series_invert",
    "series_log",
    "pade",
    "ZeroConstantTerm",
    "ConstantTermNotOne",
    "DegreeMismatch",
    "RootIndex",
    "CartanExponent",
    "NotAPositiveRoot",
    "cartan_entry",
    "bilinear",
    "ModePattern",
    "FockState",
    "basis_vector",
    "RepSpec",
    "OscWord",
    "Evaluator",
    "get_evaluator",
    "image_e",
    "image_qh",
    "serre_check",
    "weight_relation_check",
    "e_real",
    "e_dual",
    "e_prime_imag",
    "e_unprimed_imag",
    "xi_plus",
    "xi_minus",
    "chi",
    "drinfeld_check",
    "drinfeld_check_minus",
    "Weight",
    "LWeight",
    "NotDiagonal",
    "closed_lambda",
    "closed_psi",
    "phi_series",
    "oscillator_lweight",
    "prefundamental",
    "lweight_product",
    "factor_check",
    "verify_grid",
]

__version__ = "0.1.0"
