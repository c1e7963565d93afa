"""Quadrature checks of the integral representation and of the l = 0
Hankel reproducing property."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..exact import RationalLike, as_rational
from ..mpoly import MPolyKey, laguerre, m_polynomial
from ._backend import get_kernels
from .special import DomainError, gamma_float

__all__ = [
    "QuadratureConfig",
    "ConvergenceFailure",
    "Comparison",
    "composite_gauss_legendre",
    "integral_representation_numeric",
    "integral_representation_rhs",
    "hankel_reproducing_check",
    "with_panels",
]


class ConvergenceFailure(RuntimeError):
    """Doubling the panel count moved the result by more than the target."""


@dataclass(frozen=True)
class QuadratureConfig:
    panel_count: int = 8
    nodes_per_panel: int = 20
    truncation_threshold: float = 1e-18
    target_rel_err: float = 1e-10
    range_scale: float = 1.0  # multiplies the truncated upper limit

    def __post_init__(self):
        if self.panel_count < 1 or self.nodes_per_panel < 1:
            raise ValueError("panel_count and nodes_per_panel must be positive")
        if not 0 < self.truncation_threshold < 1:
            raise ValueError("truncation_threshold must lie in (0, 1)")


@dataclass(frozen=True)
class Comparison:
    """Two sides of an identity; unpacks as ``(lhs, rhs)``.

    ``scale`` is the quadrature of the absolute integrand, used as the
    reference magnitude where the right side vanishes exactly.
    """

    lhs: float
    rhs: float
    scale: float = 0.0

    def __iter__(self):
        return iter((self.lhs, self.rhs))

    @property
    def rel_err(self) -> float:
        ref = abs(self.rhs) if self.rhs else self.scale
        return abs(self.lhs - self.rhs) / ref if ref else abs(self.lhs)


@lru_cache(maxsize=64)
def _leggauss(order: int):
    return np.polynomial.legendre.leggauss(order)


def composite_gauss_legendre(a: float, b: float, panels: int, order: int):
    """Nodes and weights of ``panels`` equal Gauss-Legendre panels on [a, b]."""
    x, w = _leggauss(order)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _upper_limit(log_envelope, start: float, threshold: float) -> float:
    """Smallest point beyond ``start`` where the envelope drops below threshold * peak."""
    target = log_envelope(start) + math.log(threshold)
    hi = max(start, 1.0)
    while log_envelope(hi) > target:
        hi *= 2.0
    lo = start
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if log_envelope(mid) > target:
            lo = mid
        else:
            hi = mid
    return hi


# below this ratio |integral| / integral(|f|) the value counts as a cancellation to zero
CANCELLATION_FLOOR = 1e-8


def _gated(compute, cfg: QuadratureConfig) -> tuple[float, float]:
    coarse, _ = compute(cfg.panel_count)
    fine, fine_abs = compute(2 * cfg.panel_count)
    # at a cancellation to zero, judge the change against the integrand mass
    scale = abs(fine) if abs(fine) > CANCELLATION_FLOOR * fine_abs else fine_abs
    if abs(fine - coarse) > cfg.target_rel_err * scale:
        raise ConvergenceFailure(
            f"panel doubling changed the result by {abs(fine - coarse):.3e} (scale {scale:.3e})"
        )
    return fine, fine_abs


def integral_representation_rhs(j: int, ell: int, mu: RationalLike, x: float) -> float:
    """2^mu l! Gamma((mu+1)/2) Gamma(j+(mu+1)/2) / Gamma(j+mu+1) * M_j(2x) in floats."""
    mu = as_rational(mu)
    m = float(mu)
    pref = (2.0**m * math.factorial(ell) * gamma_float((m + 1) / 2) * gamma_float(j + (m + 1) / 2)
            / gamma_float(j + m + 1))
    return pref * m_polynomial(MPolyKey(j, ell, mu)).eval_float(2.0 * x)


def integral_representation_numeric(j: int, ell: int, mu: RationalLike, x: float,
                                    cfg: QuadratureConfig | None = None,
                                    backend: str | None = None) -> Comparison:
    """Both sides of the integral representation at a point x > 0.

    The hyperbolic variable is replaced by u = cosh(phi) - 1; the angular
    variable is smoothed at both endpoints by theta = pi (3t^2 - 2t^3).
    """
    cfg = cfg or QuadratureConfig()
    mu_q = as_rational(mu)
    if not mu_q > -1 or not x > 0:
        raise DomainError("needs mu > -1 and x > 0")
    m = float(mu_q)
    kern = get_kernels(backend)
    degree = 2 * ell + j
    u_peak = max(degree / x - 1.0, 0.0)
    u_max = cfg.range_scale * _upper_limit(
        lambda u: degree * math.log1p(u) - x * u, u_peak, cfg.truncation_threshold
    )

    def compute(panels: int):
        t, wt = composite_gauss_legendre(0.0, 1.0, panels, cfg.nodes_per_panel)
        u, wu = composite_gauss_legendre(0.0, u_max, panels, cfg.nodes_per_panel)
        return kern.intrep_sums(j, ell, m, float(x), t, wt, u, wu)

    lhs, mass = _gated(compute, cfg)
    return Comparison(float(lhs), integral_representation_rhs(j, ell, mu_q, float(x)), float(mass))


def hankel_reproducing_check(j: int, mu: RationalLike, x: float,
                             cfg: QuadratureConfig | None = None,
                             backend: str | None = None) -> Comparison:
    """Hankel transform of y^(mu+1/2) e^(-y^2/2) L_j^mu(y^2) against (-1)^j times the same at x."""
    cfg = cfg or QuadratureConfig()
    mu_q = as_rational(mu)
    if not mu_q > -1:
        raise DomainError("needs mu > -1")
    if not 0 < x <= 5:
        raise DomainError("hankel check supports 0 < x <= 5")
    m = float(mu_q)
    kern = get_kernels(backend)
    degree = 2 * m + 1 + 2 * j
    y_peak = math.sqrt(max(degree, 1e-12))
    y_max = cfg.range_scale * _upper_limit(
        lambda y: degree * math.log(y) - 0.5 * y * y, y_peak, cfg.truncation_threshold
    )

    def compute(panels: int):
        s, ws = composite_gauss_legendre(0.0, 1.0, panels, cfg.nodes_per_panel)
        return kern.hankel_sums(j, m, float(x), s, ws, y_max)

    lhs, mass = _gated(compute, cfg)
    lag = laguerre(j, mu_q).eval_float(x * x)
    rhs = (-1) ** j * x ** (m + 0.5) * math.exp(-0.5 * x * x) * lag
    return Comparison(float(lhs), rhs, float(mass))


def with_panels(cfg: QuadratureConfig, panels: int | None, order: int | None) -> QuadratureConfig:
    changes = {}
    if panels is not None:
        changes["panel_count"] = panels
    if order is not None:
        changes["nodes_per_panel"] = order
    return replace(cfg, **changes) if changes else cfg
