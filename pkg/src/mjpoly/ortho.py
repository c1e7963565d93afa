"""Exact inner products against the weight x^(mu-2l) e^(-x).

Every integral is expressed in units of Gamma(mu-2l+1): the n-th moment is
then the rational number (mu-2l+1)_n and inner products of polynomials are
exact rationals for any rational mu.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    GammaRatio,
    PoleInGamma,
    RationalLike,
    as_rational,
    factorial,
    format_rational,
    gamma_ratio_reduce,
    is_nonpositive_integer,
    pochhammer,
)
from .mpoly import MPolyKey, m_polynomial
from .poly import Polynomial

__all__ = [
    "MomentValue",
    "moment",
    "inner_product",
    "norm_squared_formula",
    "gram_matrix",
    "gram_to_csv",
    "in_asserted_range",
]


@dataclass(frozen=True)
class MomentValue:
    """``value * Gamma(mu - 2l + 1)``."""

    value: Fraction
    mu: Fraction
    ell: int

    def _check(self, other: MomentValue) -> None:
        if (self.mu, self.ell) != (other.mu, other.ell):
            raise ValueError("moment values carry different Gamma units")

    def __add__(self, other: MomentValue) -> MomentValue:
        self._check(other)
        return MomentValue(self.value + other.value, self.mu, self.ell)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.value == other
        if not isinstance(other, MomentValue):
            return NotImplemented
        self._check(other)
        return self.value == other.value

    def __hash__(self) -> int:
        return hash((self.value, self.mu, self.ell))

    def __str__(self) -> str:
        return format_rational(self.value)


def _unit_arg(mu: Fraction, ell: int) -> Fraction:
    a = mu - 2 * ell + 1
    if is_nonpositive_integer(a):
        raise PoleInGamma(f"Gamma({format_rational(a)}) unit is a pole")
    return a


def moment(n: int, mu: RationalLike, ell: int) -> MomentValue:
    """Integral of x^n x^(mu-2l) e^(-x) over (0, inf) in units Gamma(mu-2l+1)."""
    mu = as_rational(mu)
    return MomentValue(pochhammer(_unit_arg(mu, ell), n), mu, ell)


def _moment_values(mu: Fraction, ell: int, nmax: int) -> list[Fraction]:
    a = _unit_arg(mu, ell)
    out = [Fraction(1)]
    for k in range(nmax):
        out.append(out[-1] * (a + k))
    return out


def inner_product(p: Polynomial, q: Polynomial, mu: RationalLike, ell: int) -> MomentValue:
    mu = as_rational(mu)
    pq = p * q
    ms = _moment_values(mu, ell, max(pq.degree, 0))
    return MomentValue(sum((c * ms[k] for k, c in enumerate(pq.coeffs)), Fraction(0)), mu, ell)


def norm_squared_formula(j: int, mu: RationalLike, ell: int) -> MomentValue:
    """Closed-form squared norm of M_j^{mu,l}, in units Gamma(mu-2l+1)."""
    mu = as_rational(mu)
    unit = _unit_arg(mu, ell)
    h = (mu + 1) / 2
    ratio = gamma_ratio_reduce(
        GammaRatio([j + mu + 1, j + ell + h + 1, j - ell + h], [unit, j + h, j + h])
    )
    return MomentValue(2 * ratio / (factorial(j) * (2 * j + mu + 1)), mu, ell)


def gram_matrix(j_max: int, mu: RationalLike, ell: int) -> list[list[MomentValue]]:
    mu = as_rational(mu)
    polys = [m_polynomial(MPolyKey(j, ell, mu)) for j in range(j_max + 1)]
    size = j_max + 1
    out: list[list[MomentValue | None]] = [[None] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            v = inner_product(polys[a], polys[b], mu, ell)
            out[a][b] = out[b][a] = v
    return out  # type: ignore[return-value]


def gram_to_csv(gram: list[list[MomentValue]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in gram:
        writer.writerow([format_rational(v.value) for v in row])
    return buf.getvalue()


def in_asserted_range(mu: Fraction, ell: int) -> bool:
    """mu an odd integer with mu >= 2l+1 (where orthogonality is claimed)."""
    return mu.denominator == 1 and mu.numerator % 2 == 1 and mu >= 2 * ell + 1
