"""Construction of the polynomials M_j^{mu,l}, Laguerre polynomials, and
exact checks of their special values and recurrence relations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Union

from .exact import (
    GammaRatio,
    PoleInGamma,
    RationalLike,
    UnreducibleRatio,
    as_rational,
    binomial,
    factorial,
    gamma_ratio_reduce,
    pochhammer,
)
from .poly import Polynomial
from .report import VerificationReport, make_entry

__all__ = [
    "MPolyKey",
    "DegenerateLeadingFactor",
    "RECURRENCE_KINDS",
    "laguerre",
    "m_polynomial",
    "m_zero_closed_form",
    "constant_term",
    "constant_term_float",
    "verify_recurrence",
    "build_via_ell_recurrence",
    "laguerre_identity_suite",
    "three_term_impossibility",
]

X = Polynomial.x()
ZERO = Polynomial()

RecurrenceKind = Union[int, str]
RECURRENCE_KINDS: tuple[RecurrenceKind, ...] = (1, 2, 3, 4, "4-literal", 5)


class DegenerateLeadingFactor(ZeroDivisionError):
    """The factor 2j+mu-1 vanished while solving the mixed recurrence."""


def _check_mu(mu: Fraction) -> None:
    if mu.denominator == 1 and mu < 0:
        raise PoleInGamma(f"mu = {mu} is a pole (mu must avoid -1, -2, -3, ...)")


@dataclass(frozen=True)
class MPolyKey:
    j: int
    ell: int
    mu: Fraction

    def __init__(self, j: int, ell: int, mu: RationalLike):
        mu = as_rational(mu)
        if j < 0 or ell < 0:
            raise ValueError("j and ell must be non-negative")
        _check_mu(mu)
        object.__setattr__(self, "j", int(j))
        object.__setattr__(self, "ell", int(ell))
        object.__setattr__(self, "mu", mu)


@lru_cache(maxsize=None)
def _laguerre(n: int, alpha: Fraction) -> Polynomial:
    if n < 0:
        return ZERO
    return Polynomial(
        Fraction((-1) ** k, factorial(k)) * binomial(n + alpha, n - k) for k in range(n + 1)
    )


def laguerre(n: int, alpha: RationalLike) -> Polynomial:
    """Generalised Laguerre polynomial L_n^alpha; zero for negative n."""
    return _laguerre(n, as_rational(alpha))


def m_zero_closed_form(ell: int) -> Polynomial:
    """sum_k (2l-k)! / (k! (l-k)!) x^k, the bottom member j = 0."""
    return Polynomial(
        Fraction(factorial(2 * ell - k), factorial(k) * factorial(ell - k)) for k in range(ell + 1)
    )


def _shifted_ratio(j: int, k: int, mu: Fraction, continue_at_pole: bool) -> Fraction:
    # Gamma(j+mu+1)/Gamma(j-k+mu+1) * Gamma(j-k+(mu+1)/2)/Gamma(j+(mu+1)/2)
    h = (mu + 1) / 2
    if not continue_at_pole:
        return gamma_ratio_reduce(GammaRatio([j + mu + 1, j - k + h], [j - k + mu + 1, j + h]))
    out = Fraction(1)
    for i in range(k):
        num = j - k + mu + 1 + i
        den = j - k + h + i
        if num == 0 and den == 0:
            # both factors linear in mu with slopes 1 and 1/2
            out *= 2
        elif den == 0:
            raise PoleInGamma(f"pole in M at mu = {mu}")
        else:
            out *= num / den
    return out


def _explicit_sum(j: int, ell: int, mu: Fraction, continue_at_pole: bool) -> Polynomial:
    out = ZERO
    for k in range(min(j, ell) + 1):
        ratio = _shifted_ratio(j, k, mu, continue_at_pole)
        xpart = Polynomial(
            Fraction(factorial(2 * ell - i), factorial(ell - i - k) * factorial(i))
            for i in range(ell - k + 1)
        )
        coeff = (-1) ** k * ratio / factorial(k)
        out = out + (laguerre(j - k, mu) * xpart).scale(coeff)
    return out


@lru_cache(maxsize=None)
def _m_cached(j: int, ell: int, mu: Fraction) -> Polynomial:
    return _explicit_sum(j, ell, mu, continue_at_pole=False)


def m_polynomial(key: MPolyKey | None = None, *, j: int | None = None, ell: int | None = None,
                 mu: RationalLike | None = None) -> Polynomial:
    """M_j^{mu,l} from the explicit Laguerre double sum.

    Accepts either an :class:`MPolyKey` or keyword parameters.
    """
    if key is None:
        key = MPolyKey(j, ell, mu)
    return _m_cached(key.j, key.ell, key.mu)


def _m(j: int, ell: int, mu: Fraction) -> Polynomial:
    """M with zero for negative j and analytic continuation to mu = -1.

    At mu = -1 the double sum has a removable 0/0 (only in the k = j term);
    recurrences that shift mu down by 2 need that value when mu = 1.
    """
    if j < 0:
        return ZERO
    if mu == -1:
        return _explicit_sum(j, ell, mu, continue_at_pole=True)
    return m_polynomial(MPolyKey(j, ell, mu))


def constant_term(key: MPolyKey) -> Fraction:
    """M_j^{mu,l}(0) from the closed Gamma formula, exactly.

    Requires the Gamma quotient to pair with integer offsets, which happens
    exactly for integer mu; otherwise raises :class:`UnreducibleRatio`.
    """
    j, ell, mu = key.j, key.ell, key.mu
    ratio = gamma_ratio_reduce(
        GammaRatio([ell + Fraction(1, 2), j + mu + 1], [(mu + 2) / 2, j + (mu + 1) / 2])
    )
    exponent = 2 * ell - mu
    if exponent.denominator != 1:
        raise UnreducibleRatio(f"2^({exponent}) is irrational")
    return Fraction(2) ** int(exponent) * ratio * pochhammer((mu + 1) / 2 - ell, j) / factorial(j)


def constant_term_float(key: MPolyKey) -> float:
    """Same closed formula evaluated in floating point (needs mu > -1)."""
    from .numint.special import gamma_float

    j, ell, mu = key.j, key.ell, float(key.mu)
    g = gamma_float
    return (
        2.0 ** (2 * ell - mu)
        * g(ell + 0.5)
        * g(j + mu + 1)
        * float(pochhammer((key.mu + 1) / 2 - ell, j))
        / (factorial(j) * g((mu + 2) / 2) * g(j + (mu + 1) / 2))
    )


# --- recurrence relations ---------------------------------------------------

MU = Polynomial.x()  # formal variable for coefficients that are rational in mu


def _ratfun_at(num: Polynomial, den: Polynomial, mu: Fraction) -> Fraction:
    """Value at ``mu`` of num/den, cancelling common zeros first."""
    while den.eval_exact(mu) == 0:
        if num.eval_exact(mu) != 0:
            raise ZeroDivisionError(f"coefficient has a pole at mu = {mu}")
        num, _ = num.divide_linear(mu)
        den, _ = den.divide_linear(mu)
    return num.eval_exact(mu) / den.eval_exact(mu)


def _euler_minus(c: RationalLike, p: Polynomial) -> Polynomial:
    """(theta - c - x/2) p."""
    return p.theta() - p.scale(c) - (X * p).scale(Fraction(1, 2))


def _five_term_coefficients(j: int, ell: int, mu: Fraction) -> dict[int, Fraction]:
    m = MU
    L = ell * (ell + 1)
    one = Polynomial.constant(1)
    table = {
        2: (one.scale((j + 1) * (j + 2)), one),
        1: ((m + 2 * j + 2).scale(-2 * (j + 1)), one),
        -1: (
            (m + j) * (m + 2 * j) * (m + 2 * j + 2 * ell + 1) * (m + 2 * j - 2 * ell - 1) * -2,
            (m + 2 * j - 1) * (m + 2 * j + 1),
        ),
        -2: (
            (m + j - 1) * (m + j) * (m + 2 * j + 2 * ell - 1) * (m + 2 * j - 2 * ell - 3)
            * (m + 2 * j + 2 * ell + 1) * (m + 2 * j - 2 * ell - 1),
            (m + 2 * j - 3) * (m + 2 * j - 1) ** 2 * (m + 2 * j + 1),
        ),
    }
    first = (m + 1).scale(6 * j) + (m + 1) * (m + 2) + 6 * j * j
    second_num = ((m + 1).scale(2 * j) + (m - 1) * (m + 2) + 2 * j * j).scale(4 * L)
    second_den = (m + 2 * j - 1) * (m + 2 * j + 3)
    # a_{j,0} = first - second_num/second_den as a single fraction
    table[0] = (first * second_den - second_num, second_den)
    out = {}
    for k, (num, den) in table.items():
        if j + k < 0:
            continue
        out[k] = _ratfun_at(num, den, mu)
    return out


def _residual_kind1(j, ell, mu):
    M = lambda jj: _m(jj, ell, mu)  # noqa: E731
    lhs = M(j).theta().scale(2) - X * M(j)
    rhs = M(j + 1).scale(j + 1) - M(j).scale(mu - 2 * ell + 1)
    if j >= 1:
        m = MU
        c = _ratfun_at(
            (m + j) * (m + 2 * j + 2 * ell + 1) * (m + 2 * j - 2 * ell - 1),
            (m + 2 * j + 1) * (m + 2 * j - 1),
            mu,
        )
        rhs = rhs - M(j - 1).scale(c)
    return lhs - rhs


def _residual_kind2(j, ell, mu):
    lhs = X * X * _m(j, ell, mu)
    rhs = ZERO
    for k, a in _five_term_coefficients(j, ell, mu).items():
        rhs = rhs + _m(j + k, ell, mu).scale(a)
    return lhs - rhs


def _residual_kind3(j, ell, mu):
    lhs = _m(j, ell, mu).scale(mu * (2 * j + mu - 1)) - _m(j - 1, ell, mu).scale(2 * mu * (j + mu))
    rhs = _m(j, ell, mu - 2).scale((j + mu - 1) * (j + mu)) if (j + mu - 1) * (j + mu) else ZERO
    rhs = rhs - X * X * _m(j - 2, ell, mu + 2)
    return lhs - rhs


def _residual_kind4(j, ell, mu, literal: bool):
    if ell < 1:
        raise ValueError("the recurrence in l needs l >= 1")
    nu = 2 * ell + 1
    f = 2 * j + mu - 1
    lhs = _m(j, ell, mu).scale(nu * f) - _m(j - 1, ell, mu).scale(2 * (2 * ell + 1) * (j + mu))
    coeff = Fraction(1, 4) if literal else Fraction(1, 2)
    rhs = _m(j, ell + 1, mu).scale(f / 2) - (X * X * _m(j, ell - 1, mu)).scale(f * coeff)
    return lhs - rhs


def _residual_kind5(j, ell, mu):
    f = 2 * j + mu - 1
    inner = _m(j, ell, mu).scale(2 * f) - _m(j - 1, ell, mu).scale(4 * (j + mu))
    lhs = _euler_minus(2 * ell + 1, inner)
    rhs = (X * X * _m(j - 2, ell, mu + 2)).scale(2) - _m(j, ell + 1, mu).scale(f)
    return lhs - rhs


def verify_recurrence(kind: RecurrenceKind, key: MPolyKey) -> Polynomial:
    """LHS - RHS of one of the five recurrences; the zero polynomial means it holds.

    ``kind`` is 1..5, or ``"4-literal"`` for the relation in l with the
    coefficient (x/2)^2 as printed (diagnostic; it does not hold).  Kind 4
    uses the coefficient x^2/2.  M with negative index is zero.
    """
    j, ell, mu = key.j, key.ell, key.mu
    if kind == 1:
        return _residual_kind1(j, ell, mu)
    if kind == 2:
        return _residual_kind2(j, ell, mu)
    if kind == 3:
        return _residual_kind3(j, ell, mu)
    if kind == 4:
        return _residual_kind4(j, ell, mu, literal=False)
    if kind == "4-literal":
        return _residual_kind4(j, ell, mu, literal=True)
    if kind == 5:
        return _residual_kind5(j, ell, mu)
    raise ValueError(f"unknown recurrence kind {kind!r}")


def _ell_step(j: int, ell: int, mu: Fraction, lower: Callable[[int, int, Fraction], Polynomial]) -> Polynomial:
    """Solve the mixed recurrence for M_j^{mu, ell+1} given the ``ell`` layer."""
    if j < 0:
        return ZERO
    if j == 0:
        # every surviving term carries 2j+mu-1; cancelled symbolically
        return _euler_minus(2 * ell + 1, lower(0, ell, mu)).scale(-2)
    f = 2 * j + mu - 1
    if f == 0:
        raise DegenerateLeadingFactor(f"2j+mu-1 = 0 at j={j}, mu={mu}")
    inner = lower(j, ell, mu).scale(2 * f) - lower(j - 1, ell, mu).scale(4 * (j + mu))
    top = (X * X * lower(j - 2, ell, mu + 2)).scale(2) - _euler_minus(2 * ell + 1, inner)
    return top.scale(1 / f)


def build_via_ell_recurrence(key: MPolyKey) -> Polynomial:
    """M_j^{mu,l} built upward from the Laguerre layer l = 0."""
    memo: dict[tuple[int, int, Fraction], Polynomial] = {}

    def get(j: int, ell: int, mu: Fraction) -> Polynomial:
        if j < 0:
            return ZERO
        if ell == 0:
            return laguerre(j, mu)
        k = (j, ell, mu)
        if k not in memo:
            memo[k] = _ell_step(j, ell - 1, mu, get)
        return memo[k]

    return get(key.j, key.ell, key.mu)


# --- classical Laguerre identities ----------------------------------------

def _laguerre_residuals(n: int, a: Fraction) -> dict[str, Polynomial]:
    L = laguerre
    out = {
        "laguerre-x-three-term": X * L(n, a)
        - (L(n + 1, a).scale(-(n + 1)) + L(n, a).scale(2 * n + a + 1) - L(n - 1, a).scale(n + a)),
        "laguerre-derivative-step": L(n, a).derivative()
        - (L(n - 1, a).derivative() - L(n - 1, a)),
        "laguerre-derivative-raise": L(n, a).derivative() + L(n - 1, a + 1),
        "laguerre-theta": L(n, a).theta() - (L(n, a).scale(n) - L(n - 1, a).scale(n + a)),
        "laguerre-ode": X * L(n, a).derivative(2)
        + (Polynomial.constant(a + 1) - X) * L(n, a).derivative()
        + L(n, a).scale(n),
        "laguerre-x-raise": X * L(n, a + 1) - (L(n, a).scale(n + a + 1) - L(n + 1, a).scale(n + 1)),
        "laguerre-lower-alpha": L(n - 1, a) - (L(n, a) - L(n, a - 1)),
    }
    deriv_sum = ZERO
    alt_sum = ZERO
    p = L(n, a)
    for k in range(n + 1):
        deriv_sum = deriv_sum + p
        p = p.derivative()
        alt_sum = alt_sum + L(n - k, a + k).scale((-1) ** k)
    out["laguerre-summation-derivatives"] = deriv_sum - L(n, a - 1)
    out["laguerre-summation-alternating"] = alt_sum - L(n, a - 1)
    return out


def laguerre_identity_suite(n_max: int, alphas: Iterable[RationalLike]) -> VerificationReport:
    """Exact check of the seven Laguerre identities and the summation formula."""
    report = VerificationReport()
    for a in alphas:
        a = as_rational(a)
        for n in range(n_max + 1):
            for name, res in _laguerre_residuals(n, a).items():
                report.add(make_entry(name, n, None, a, res))
    return report.sorted()


def _solve_in_span(target: Polynomial, basis: list[Polynomial]) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_i == target, or None (exact elimination)."""
    rows = max([target.degree] + [b.degree for b in basis]) + 1
    n = len(basis)
    mat = [[basis[c][r] for c in range(n)] + [target[r]] for r in range(rows)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, rows) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(rows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [vi - f * vr for vi, vr in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    if any(mat[i][n] != 0 for i in range(r, rows)):
        return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        sol[c] = mat[i][n]
    return sol


def three_term_impossibility(mu: RationalLike, ell: int = 1) -> bool:
    """True when x*M_0 is NOT a combination a*M_1 + b*M_0 (for the given l)."""
    mu = as_rational(mu)
    m0 = m_polynomial(MPolyKey(0, ell, mu))
    m1 = m_polynomial(MPolyKey(1, ell, mu))
    return _solve_in_span(X * m0, [m1, m0]) is None
