"""Truncated power series in t with polynomial-in-x coefficients, and the
normalised generating function of the M_j^{mu,l}.

The generating function carries a transcendental prefactor.  Multiplying by
Gamma(mu+1) / (2^mu Gamma((mu+1)/2)) and applying the duplication formula
cancels it together with the sqrt(pi) of the half-integer K-Bessel closed
form, leaving

    Ghat(t, x) = (1-t)^(l-(mu+1)/2) * E * S_I * S_K

with w = t/(1-t) and

    E   = exp(-x w / 2)
    S_I = sum_m (x w / 4)^(2m) / (m! (mu/2+1)_m)
    S_K = sum_i (2l-i)! / ((l-i)! i!) x^i (1-t)^(-i)

all of which have rational coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import PoleInGamma, RationalLike, as_rational, factorial, is_nonpositive_integer, pochhammer
from .mpoly import MPolyKey
from .poly import Polynomial

__all__ = [
    "PowerSeries",
    "binomial_series",
    "ghat_series",
    "m_from_series",
]


class PowerSeries:
    """Power series in t truncated after ``t**order``; coefficients are Polynomials in x."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        cs = [c if isinstance(c, Polynomial) else Polynomial.constant(c) for c in coeffs[: order + 1]]
        cs += [Polynomial()] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: tuple[Polynomial, ...] = tuple(cs)

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls([1], order)

    @classmethod
    def t(cls, order: int) -> PowerSeries:
        return cls([0, 1], order)

    def __getitem__(self, n: int) -> Polynomial:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __repr__(self) -> str:
        return "PowerSeries([" + ", ".join(str(c) for c in self.coeffs) + f"], order={self.order})"

    def _order_with(self, other: PowerSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: PowerSeries) -> PowerSeries:
        n = self._order_with(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __sub__(self, other: PowerSeries) -> PowerSeries:
        n = self._order_with(other)
        return PowerSeries([a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], n)

    def __mul__(self, other) -> PowerSeries:
        if isinstance(other, (int, Fraction, Polynomial)):
            return PowerSeries([c * other for c in self.coeffs], self.order)
        n = self._order_with(other)
        out = [Polynomial()] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for k in range(n + 1 - i):
                b = other.coeffs[k]
                if not b.is_zero():
                    out[i + k] = out[i + k] + a * b
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def compose_exp_like(self, weights: Sequence) -> PowerSeries:
        """sum_n weights[n] * self**n; requires zero constant term in t."""
        if not self.coeffs[0].is_zero():
            raise ValueError("composition needs a series with zero constant term")
        out = PowerSeries([], self.order)
        power = PowerSeries.one(self.order)
        for n in range(self.order + 1):
            if n < len(weights):
                w = weights[n]
                if w:
                    out = out + power * w
            power = power * self
        return out


def binomial_series(gamma: RationalLike, order: int) -> PowerSeries:
    """(1 - t)^(-gamma) = sum_n (gamma)_n / n! t^n."""
    gamma = as_rational(gamma)
    return PowerSeries([pochhammer(gamma, n) / factorial(n) for n in range(order + 1)], order)


def _w_series(order: int) -> PowerSeries:
    # t / (1 - t)
    return PowerSeries([0] + [1] * order, order)


def ghat_series(mu: RationalLike, ell: int, order: int) -> PowerSeries:
    """Normalised generating function truncated at ``t**order``."""
    return _ghat_cached(as_rational(mu), ell, order)


@lru_cache(maxsize=64)
def _ghat_cached(mu: Fraction, ell: int, order: int) -> PowerSeries:
    MPolyKey(0, ell, mu)  # validates mu
    if is_nonpositive_integer(mu / 2 + 1):
        raise PoleInGamma(f"Gamma(mu/2+1) is a pole at mu = {mu}")

    x = Polynomial.x()
    w = _w_series(order)

    e_weights = [x.scale(Fraction(-1, 2)) ** n * Fraction(1, factorial(n)) for n in range(order + 1)]
    exp_part = w.compose_exp_like(e_weights)

    xw4 = w * x.scale(Fraction(1, 4))
    i_weights = [Polynomial()] * (order + 1)
    for m in range(order // 2 + 1):
        i_weights[2 * m] = Polynomial.constant(1 / (factorial(m) * pochhammer(mu / 2 + 1, m)))
    bessel_i = xw4.compose_exp_like(i_weights)

    bessel_k = PowerSeries([], order)
    for i in range(ell + 1):
        c = Fraction(factorial(2 * ell - i), factorial(ell - i) * factorial(i))
        bessel_k = bessel_k + binomial_series(i, order) * Polynomial.monomial(i, c)

    prefactor = binomial_series((mu + 1) / 2 - ell, order)
    return prefactor * exp_part * bessel_i * bessel_k


def m_from_series(j: int, mu: RationalLike, ell: int, order: int | None = None) -> Polynomial:
    """M_j^{mu,l} read off the generating function (independent of the double sum)."""
    mu = as_rational(mu)
    if order is None:
        order = j + 2
    if order < j:
        raise ValueError("truncation order must be at least j")
    series = ghat_series(mu, ell, order)
    scale = pochhammer(mu + 1, j) / pochhammer((mu + 1) / 2, j)
    return series[j].scale(scale)
