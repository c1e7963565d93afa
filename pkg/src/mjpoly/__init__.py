"""Exact construction and verification of the polynomial family M_j^{mu,l}.

The polynomials generalise the Laguerre polynomials L_j^mu (the case l = 0).
Everything symbolic is done over the rationals; see :mod:`mjpoly.numint`
for the floating-point checks.
"""
from .exact import GammaRatio, PoleInGamma, UnreducibleRatio, gamma_ratio_reduce, pochhammer
from .poly import LaurentPolynomial, Polynomial
from .mpoly import (
    MPolyKey,
    build_via_ell_recurrence,
    constant_term,
    laguerre,
    m_polynomial,
    m_zero_closed_form,
    verify_recurrence,
)
from .genfun import ghat_series, m_from_series
from .ortho import gram_matrix, inner_product, norm_squared_formula
from .report import Grid, VerificationReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "GammaRatio",
    "PoleInGamma",
    "UnreducibleRatio",
    "gamma_ratio_reduce",
    "pochhammer",
    "LaurentPolynomial",
    "Polynomial",
    "MPolyKey",
    "build_via_ell_recurrence",
    "constant_term",
    "laguerre",
    "m_polynomial",
    "m_zero_closed_form",
    "verify_recurrence",
    "ghat_series",
    "m_from_series",
    "gram_matrix",
    "inner_product",
    "norm_squared_formula",
    "Grid",
    "VerificationReport",
    "run_suite",
]
