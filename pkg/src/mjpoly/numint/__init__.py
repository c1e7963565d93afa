"""Floating-point special functions and quadrature, plus the exact odd-mu path."""
from ._backend import JIT_ENV, default_backend, get_kernels
from .exact_integral import NonPolynomialResidue, integral_representation_exact, wallis
from .quadrature import (
    Comparison,
    ConvergenceFailure,
    QuadratureConfig,
    hankel_reproducing_check,
    integral_representation_numeric,
    integral_representation_rhs,
    with_panels,
)
from .special import DomainError, bessel_j, gamma_float

__all__ = [
    "JIT_ENV",
    "default_backend",
    "get_kernels",
    "NonPolynomialResidue",
    "integral_representation_exact",
    "wallis",
    "Comparison",
    "ConvergenceFailure",
    "QuadratureConfig",
    "hankel_reproducing_check",
    "integral_representation_numeric",
    "integral_representation_rhs",
    "with_panels",
    "DomainError",
    "bessel_j",
    "gamma_float",
]
