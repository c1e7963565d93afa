"""Floating-point Gamma and Bessel J with domain checks."""
from __future__ import annotations

import numpy as np

from ._backend import get_kernels

__all__ = ["DomainError", "gamma_float", "bessel_j", "BESSEL_X_MAX"]

BESSEL_X_MAX = 40.0


class DomainError(ValueError):
    """Argument outside the supported evaluation regime."""


def gamma_float(a: float, *, backend: str | None = None) -> float:
    """Gamma(a) for a > 0 via the Lanczos approximation."""
    a = float(a)
    if not a > 0:
        raise DomainError(f"gamma_float needs a > 0, got {a}")
    return float(get_kernels(backend).lanczos_gamma(np.array([a]))[0])


def bessel_j(alpha: float, x: float, *, backend: str | None = None) -> float:
    """J_alpha(x) from the ascending power series, for alpha >= 0 and 0 <= x <= 40."""
    alpha, x = float(alpha), float(x)
    if alpha < 0 or not 0 <= x <= BESSEL_X_MAX:
        raise DomainError(f"bessel_j supports alpha >= 0, 0 <= x <= {BESSEL_X_MAX}")
    return float(get_kernels(backend).bessel_j(alpha, np.array([x]))[0])
