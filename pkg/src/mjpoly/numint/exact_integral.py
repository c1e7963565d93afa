"""Exact evaluation of the double-integral representation for odd mu.

With u = cosh(phi) - 1 the phi-integral turns into exponential moments
int_0^inf u^n e^(-x u) du = n! / x^(n+1), and the theta-integral into Wallis
values int_0^pi cos^m sin^mu.  For odd mu every Gamma ratio involved is
rational, so both sides are polynomials in x with rational coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from ..exact import GammaRatio, RationalLike, as_rational, factorial, gamma_ratio_reduce
from ..mpoly import MPolyKey, laguerre, m_polynomial
from ..poly import LaurentPolynomial, Polynomial

__all__ = ["NonPolynomialResidue", "wallis", "integral_representation_exact"]


class NonPolynomialResidue(ArithmeticError):
    """Negative powers of x survived; the symbolic pipeline is inconsistent."""


@lru_cache(maxsize=None)
def wallis(m: int, mu: int) -> Fraction:
    """int_0^pi cos^m(t) sin^mu(t) dt for odd mu >= 1."""
    if m % 2:
        return Fraction(0)
    return gamma_ratio_reduce(
        GammaRatio([Fraction(m + 1, 2), Fraction(mu + 1, 2)], [Fraction(m + mu + 2, 2)])
    )


def _odd_mu(mu: RationalLike) -> int:
    mu = as_rational(mu)
    if mu.denominator != 1 or mu.numerator % 2 == 0 or mu < 1:
        raise ValueError(f"exact path needs an odd positive integer mu, got {mu}")
    return mu.numerator


def _u_moments(poly_u: Polynomial) -> LaurentPolynomial:
    # int_0^inf poly_u(u) e^(-x u) du as a Laurent polynomial in x
    return LaurentPolynomial({-(n + 1): c * factorial(n) for n, c in enumerate(poly_u.coeffs)})


def integral_representation_exact(j: int, ell: int, mu: RationalLike) -> tuple[Polynomial, Polynomial]:
    """Both sides of the representation as exact polynomials in x."""
    mu_i = _odd_mu(mu)
    beta = ell + Fraction(mu_i + 1, 2)
    lag = laguerre(j, beta)
    u = Polynomial.x()
    one_plus_u = u + 1
    sinh_part = (u * u + u.scale(2)) ** ell

    inner = LaurentPolynomial()
    for k, ck in enumerate(lag.coeffs):
        if not ck:
            continue
        # (cos + 1 + u)^k = sum_a C(k, a) cos^a (1 + u)^(k - a)
        poly_u = Polynomial()
        for a in range(0, k + 1, 2):
            w = wallis(a, mu_i)
            poly_u = poly_u + (one_plus_u ** (k - a)).scale(comb(k, a) * w)
        inner = inner + _u_moments(poly_u * sinh_part).shift(k).scale(ck)

    lhs = inner.shift(2 * ell + 1)
    if not lhs.is_polynomial():
        raise NonPolynomialResidue(f"negative powers remain: {lhs}")

    h = Fraction(mu_i + 1, 2)
    prefactor = 2**mu_i * factorial(ell) * gamma_ratio_reduce(GammaRatio([h, j + h], [j + mu_i + 1]))
    rhs = m_polynomial(MPolyKey(j, ell, Fraction(mu_i))).substitute_scaled(2).scale(prefactor)
    return lhs.to_polynomial(), rhs
