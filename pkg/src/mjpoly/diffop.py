"""Differential operators in normal form sum_k c_k(x) theta^k.

theta is the Euler operator x d/dx.  Coefficients are Laurent polynomials;
composition uses theta o p(x) = p(x) theta + (theta p)(x).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence, Union

from .exact import RationalLike, as_rational
from .poly import LaurentPolynomial, Polynomial, rational_roots

__all__ = [
    "DiffOperator",
    "ConjugationRule",
    "negate_x",
    "mult_exp",
    "mult_power",
    "dilate",
    "THETA",
    "X",
    "op_mul",
    "op_add",
    "op_scale",
    "apply",
    "conjugate",
    "make_x2P",
    "make_P",
    "make_Q",
    "make_D",
    "make_x2D",
    "eigen_residual",
    "square_identity_check",
    "d_symmetry_check",
    "conjugation_identity_check",
    "involution_check",
    "indicial_polynomial",
    "indicial_roots",
    "expected_indicial_roots",
]

Coeff = Union[LaurentPolynomial, Polynomial, Fraction, int]


class DiffOperator:
    """Immutable operator; ``terms[k]`` is the coefficient of theta^k."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Coeff] | None = None):
        clean = {}
        for k, c in (terms or {}).items():
            if k < 0:
                raise ValueError("theta powers are non-negative")
            c = LaurentPolynomial.coerce(c)
            if c:
                clean[int(k)] = c
        self._terms: dict[int, LaurentPolynomial] = dict(sorted(clean.items()))

    @classmethod
    def scalar(cls, c: Coeff) -> DiffOperator:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, LaurentPolynomial]:
        return dict(self._terms)

    @property
    def order(self) -> int:
        """theta-degree; -1 for the zero operator."""
        return max(self._terms, default=-1)

    def coefficient(self, k: int) -> LaurentPolynomial:
        return self._terms.get(k, LaurentPolynomial())

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"DiffOperator({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in reversed(self._terms.items()):
            th = "" if k == 0 else ("theta" if k == 1 else f"theta^{k}")
            parts.append(f"({c})" + (f"*{th}" if th else ""))
        return " + ".join(parts)

    def __add__(self, other) -> DiffOperator:
        return op_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> DiffOperator:
        return op_scale(self, -1)

    def __sub__(self, other) -> DiffOperator:
        return op_add(self, -_coerce(other))

    def __rsub__(self, other) -> DiffOperator:
        return op_add(_coerce(other), -self)

    def __mul__(self, other) -> DiffOperator:
        return op_mul(self, _coerce(other))

    def __rmul__(self, other) -> DiffOperator:
        return op_mul(_coerce(other), self)

    def __pow__(self, n: int) -> DiffOperator:
        out = DiffOperator.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def map_coefficients(self, f) -> DiffOperator:
        return DiffOperator({k: f(c) for k, c in self._terms.items()})


def _coerce(value) -> DiffOperator:
    if isinstance(value, DiffOperator):
        return value
    return DiffOperator.scalar(value)


THETA = DiffOperator({1: 1})
X = DiffOperator({0: Polynomial.x()})


def op_add(a: DiffOperator, b: DiffOperator) -> DiffOperator:
    out = dict(a.terms)
    for k, c in b.terms.items():
        out[k] = out.get(k, LaurentPolynomial()) + c
    return DiffOperator(out)


def op_scale(a: DiffOperator, c: RationalLike) -> DiffOperator:
    c = as_rational(c)
    return a.map_coefficients(lambda p: p.scale(c))


def op_mul(a: DiffOperator, b: DiffOperator) -> DiffOperator:
    """Normal form of the composition a o b (b acts first)."""
    out: dict[int, LaurentPolynomial] = {}
    for m, bm in b.terms.items():
        # theta^i applied to bm, reused across all k
        derivs = [bm]
        for _ in range(a.order):
            derivs.append(derivs[-1].theta())
        for k, ak in a.terms.items():
            for i in range(k + 1):
                c = ak * derivs[i]
                if comb(k, i) != 1:
                    c = c.scale(comb(k, i))
                p = k - i + m
                out[p] = out.get(p, LaurentPolynomial()) + c
    return DiffOperator(out)


def apply(a: DiffOperator, p: Coeff) -> LaurentPolynomial:
    """Apply the operator to a (Laurent) polynomial."""
    f = LaurentPolynomial.coerce(p)
    out = LaurentPolynomial()
    power = f
    for k in range(a.order + 1):
        if k:
            power = power.theta()
        c = a.coefficient(k)
        if c:
            out = out + c * power
    return out


# --- conjugations -----------------------------------------------------------

@dataclass(frozen=True)
class ConjugationRule:
    """Substitution realising ``g^{-1} o A o g``.

    kind:
        ``negate_x``     f(x) -> f(-x): x -> -x, theta fixed
        ``mult_exp``     multiplication by e^(b x): theta -> theta + b x
        ``mult_power``   multiplication by x^a: theta -> theta + a
        ``dilate``       f(x) -> f(c x): x -> x / c, theta fixed
    """

    kind: str
    param: Fraction = Fraction(0)

    def __post_init__(self):
        if self.kind not in ("negate_x", "mult_exp", "mult_power", "dilate"):
            raise ValueError(f"unknown conjugation {self.kind!r}")
        object.__setattr__(self, "param", as_rational(self.param))
        if self.kind == "dilate" and self.param == 0:
            raise ValueError("dilation by 0")


def negate_x() -> ConjugationRule:
    return ConjugationRule("negate_x")


def mult_exp(b: RationalLike) -> ConjugationRule:
    return ConjugationRule("mult_exp", b)


def mult_power(a: RationalLike) -> ConjugationRule:
    return ConjugationRule("mult_power", a)


def dilate(c: RationalLike) -> ConjugationRule:
    return ConjugationRule("dilate", c)


def _conjugate_once(a: DiffOperator, rule: ConjugationRule) -> DiffOperator:
    if rule.kind == "negate_x":
        return a.map_coefficients(LaurentPolynomial.substitute_negated)
    if rule.kind == "dilate":
        inv = 1 / rule.param
        return a.map_coefficients(lambda c: c.substitute_scaled(inv))
    if rule.kind == "mult_exp":
        new_theta = THETA + X * rule.param
    else:
        new_theta = THETA + DiffOperator.scalar(rule.param)
    out = DiffOperator()
    power = DiffOperator.scalar(1)
    for k in range(a.order + 1):
        if k:
            power = power * new_theta
        c = a.coefficient(k)
        if c:
            out = out + DiffOperator.scalar(c) * power
    return out


def conjugate(a: DiffOperator, rules: Iterable[ConjugationRule]) -> DiffOperator:
    """Apply the substitution rules left to right."""
    for rule in rules:
        a = _conjugate_once(a, rule)
    return a


# --- the operators ------------------------------------------------------------

def _quadratic(s1: Fraction, s2: Fraction) -> DiffOperator:
    # (theta + s1 - x/2)(theta + s2 - x/2) - (x/2)^2
    half_x = X * Fraction(1, 2)
    return (THETA + s1 - half_x) * (THETA + s2 - half_x) - half_x * half_x


def make_x2P(mu: RationalLike, ell: int, *, reversed_order: bool = False) -> DiffOperator:
    """x^2 times the fourth-order operator; the right factor acts first.

    ``reversed_order`` swaps the two quadratic factors.  That operator is
    not the right one; it is kept as a diagnostic.
    """
    mu = as_rational(mu)
    left = _quadratic(mu - 2 * ell - 1, mu)
    right = _quadratic(Fraction(-2 * ell - 1), Fraction(0))
    return right * left if reversed_order else left * right


def make_P(mu: RationalLike, ell: int) -> DiffOperator:
    return DiffOperator.scalar(LaurentPolynomial.monomial(-2)) * make_x2P(mu, ell)


def make_Q(mu: RationalLike) -> DiffOperator:
    """(1/x)(theta^2 + (mu - x) theta - ((mu+1)/2) x)."""
    mu = as_rational(mu)
    inv_x = LaurentPolynomial.monomial(-1)
    return DiffOperator({
        2: inv_x,
        1: inv_x.scale(mu) - 1,
        0: Polynomial.constant(-(mu + 1) / 2),
    })


def make_x2D(mu: RationalLike, nu: RationalLike) -> DiffOperator:
    mu, nu = as_rational(mu), as_rational(nu)
    x2 = X * X
    left = (THETA + nu) * (THETA + mu + nu) - x2
    right = THETA * (THETA + mu) - x2
    return left * right - x2 * ((mu - nu) * (mu + nu + 2) / 2)


def make_D(mu: RationalLike, nu: RationalLike) -> DiffOperator:
    return DiffOperator.scalar(LaurentPolynomial.monomial(-2)) * make_x2D(mu, nu)


# --- checks -----------------------------------------------------------------------

def eigen_residual(key, *, reversed_order: bool = False) -> LaurentPolynomial:
    """x^2 P M_j - j(j+mu+1) x^2 M_j; zero iff M_j solves the eigen-equation."""
    from .mpoly import m_polynomial

    m = m_polynomial(key)
    lam = key.j * (key.j + key.mu + 1)
    x2m = LaurentPolynomial.from_polynomial(m).shift(2)
    op = make_x2P(key.mu, key.ell, reversed_order=reversed_order)
    return apply(op, m) - x2m.scale(lam)


def square_identity_check(mu: RationalLike) -> bool:
    mu = as_rational(mu)
    q = make_Q(mu)
    lhs = X * X * (q * q - ((mu + 1) / 2) ** 2)
    return lhs == make_x2P(mu, 0)


def d_symmetry_check(mu: RationalLike, nu: RationalLike) -> bool:
    return make_x2D(mu, nu) == make_x2D(nu, mu)


def conjugation_identity_check(mu: RationalLike, ell: int) -> bool:
    """D_{mu,2l+1} conjugated by x^-(2l+1) e^-x and the dilation f -> f(2x)
    equals 4 P_{mu,l} + (mu-2l-1)(mu+2l+3)/2."""
    mu = as_rational(mu)
    nu = 2 * ell + 1
    lhs = conjugate(make_D(mu, nu), [mult_power(-nu), mult_exp(-1), dilate(2)])
    rhs = op_scale(make_P(mu, ell), 4) + (mu - 2 * ell - 1) * (mu + 2 * ell + 3) / 2
    return lhs == rhs


def involution_check(mu: RationalLike, ell: int) -> bool:
    """x^2 P is invariant under f(x) -> e^x f(-x)."""
    op = make_x2P(mu, ell)
    return conjugate(op, [mult_exp(1), negate_x()]) == op


def indicial_polynomial(op: DiffOperator) -> Polynomial:
    """sum_k c_k(0) s^k for an operator with polynomial coefficients."""
    coeffs = [Fraction(0)] * (op.order + 1)
    for k, c in op.terms.items():
        if not c.is_polynomial():
            raise ValueError("indicial polynomial needs polynomial coefficients")
        coeffs[k] = c[0]
    return Polynomial(coeffs)


def indicial_roots(mu: RationalLike, ell: int) -> list[Fraction]:
    """Characteristic exponents at x = 0, with multiplicity, sorted."""
    return rational_roots(indicial_polynomial(make_x2P(mu, ell)))


def expected_indicial_roots(mu: RationalLike, ell: int) -> list[Fraction]:
    mu = as_rational(mu)
    return sorted([Fraction(0), -mu, Fraction(2 * ell + 1), 2 * ell + 1 - mu])
