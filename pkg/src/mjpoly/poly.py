"""Dense polynomials and sparse Laurent polynomials over the rationals."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

from .exact import RationalLike, as_rational, format_rational

__all__ = ["Polynomial", "LaurentPolynomial", "rational_roots"]

Scalar = Union[Fraction, int]


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _term_str(c: Fraction, n: int) -> str:
    mag = format_rational(abs(c))
    if n == 0:
        body = mag
    else:
        power = "x" if n == 1 else f"x^{n}"
        body = power if mag == "1" else f"{mag}*{power}"
    return body


def _format_terms(items: Iterable[tuple[int, Fraction]]) -> str:
    parts = []
    for n, c in items:
        t = _term_str(c, n)
        if not parts:
            parts.append(("-" if c < 0 else "") + t)
        else:
            parts.append(("- " if c < 0 else "+ ") + t)
    return " ".join(parts) if parts else "0"


class Polynomial:
    """Univariate polynomial with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``; trailing zeros are trimmed,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        self.coeffs: tuple[Fraction, ...] = _trim([as_rational(c) for c in coeffs])

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: RationalLike) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: RationalLike = 1) -> Polynomial:
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if isinstance(other, LaurentPolynomial):
            return LaurentPolynomial.from_polynomial(self) == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return _format_terms((n, c) for n, c in reversed(list(enumerate(self.coeffs))) if c)

    # ring operations -------------------------------------------------
    def __add__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for k, b in enumerate(other.coeffs):
                out[i + k] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: RationalLike) -> Polynomial:
        c = as_rational(c)
        return Polynomial(c * a for a in self.coeffs)

    def shift(self, k: int) -> Polynomial:
        """Multiply by ``x**k`` (``k >= 0``)."""
        if k < 0:
            raise ValueError("use LaurentPolynomial for negative shifts")
        if not self.coeffs:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    # calculus ------------------------------------------------------------
    def derivative(self, order: int = 1) -> Polynomial:
        p = self
        for _ in range(order):
            p = Polynomial(k * c for k, c in enumerate(p.coeffs) if k)
        return p

    def theta(self) -> Polynomial:
        """Euler operator ``x d/dx``: ``x**n -> n x**n``."""
        return Polynomial(k * c for k, c in enumerate(self.coeffs))

    # evaluation / substitution ------------------------------------------
    def eval_exact(self, x0: RationalLike) -> Fraction:
        x0 = as_rational(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    __call__ = eval_exact

    def eval_float(self, x0: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x0 + float(c)
        return acc

    def substitute_scaled(self, c: RationalLike) -> Polynomial:
        """Return ``p(c x)``."""
        c = as_rational(c)
        return Polynomial(a * c**k for k, a in enumerate(self.coeffs))

    def substitute_negated(self) -> Polynomial:
        return self.substitute_scaled(-1)

    def divide_linear(self, root: RationalLike) -> tuple[Polynomial, Fraction]:
        """Synthetic division by ``(x - root)``; returns (quotient, remainder)."""
        root = as_rational(root)
        if not self.coeffs:
            return Polynomial(), Fraction(0)
        out = []
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        return Polynomial(reversed(out)), rem

    def to_float_array(self):
        import numpy as np

        return np.array([float(c) for c in self.coeffs], dtype=float)


class LaurentPolynomial:
    """Finite sum ``sum c_n x**n`` with ``n`` allowed to be negative."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, RationalLike] | None = None):
        clean = {}
        for n, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                clean[int(n)] = c
        self._terms: dict[int, Fraction] = dict(sorted(clean.items()))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> LaurentPolynomial:
        return cls(dict(enumerate(p.coeffs)))

    @classmethod
    def monomial(cls, n: int, c: RationalLike = 1) -> LaurentPolynomial:
        return cls({n: c})

    @classmethod
    def coerce(cls, value) -> LaurentPolynomial:
        if isinstance(value, LaurentPolynomial):
            return value
        if isinstance(value, Polynomial):
            return cls.from_polynomial(value)
        if isinstance(value, (int, Fraction)):
            return cls({0: value})
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentPolynomial")

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, n: int) -> Fraction:
        return self._terms.get(n, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def min_exponent(self) -> int | None:
        return next(iter(self._terms), None)

    @property
    def max_exponent(self) -> int | None:
        return next(reversed(self._terms), None) if self._terms else None

    def is_polynomial(self) -> bool:
        return not self._terms or self.min_exponent >= 0

    def to_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} has negative powers")
        if not self._terms:
            return Polynomial()
        out = [Fraction(0)] * (self.max_exponent + 1)
        for n, c in self._terms.items():
            out[n] = c
        return Polynomial(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, (Polynomial, int, Fraction)):
            other = LaurentPolynomial.coerce(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

    def __str__(self) -> str:
        return _format_terms(reversed(list(self._terms.items())))

    def __add__(self, other) -> LaurentPolynomial:
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for n, c in other._terms.items():
            out[n] = out.get(n, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({n: -c for n, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPolynomial:
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other) -> LaurentPolynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for n, a in self._terms.items():
            for m, b in other._terms.items():
                out[n + m] = out.get(n + m, 0) + a * b
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (n, c), = self._terms.items()
            return LaurentPolynomial({n * k: c**k})
        out = LaurentPolynomial({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c: RationalLike) -> LaurentPolynomial:
        c = as_rational(c)
        return LaurentPolynomial({n: c * a for n, a in self._terms.items()})

    def shift(self, k: int) -> LaurentPolynomial:
        return LaurentPolynomial({n + k: c for n, c in self._terms.items()})

    def theta(self) -> LaurentPolynomial:
        return LaurentPolynomial({n: n * c for n, c in self._terms.items()})

    def eval_exact(self, x0: RationalLike) -> Fraction:
        x0 = as_rational(x0)
        if x0 == 0 and not self.is_polynomial():
            raise ZeroDivisionError("negative power evaluated at 0")
        return sum((c * x0**n for n, c in self._terms.items()), Fraction(0))

    __call__ = eval_exact

    def eval_float(self, x0: float) -> float:
        return sum(float(c) * x0**n for n, c in self._terms.items())

    def substitute_scaled(self, c: RationalLike) -> LaurentPolynomial:
        c = as_rational(c)
        return LaurentPolynomial({n: a * c**n for n, a in self._terms.items()})

    def substitute_negated(self) -> LaurentPolynomial:
        return self.substitute_scaled(-1)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p: Polynomial) -> list[Fraction]:
    """All roots of ``p`` with multiplicity, sorted.

    Raises ``ValueError`` if some root is irrational (the remaining factor is
    reported in the message).
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    roots: list[Fraction] = []
    while p.degree > 0 and p[0] == 0:
        roots.append(Fraction(0))
        p = Polynomial(p.coeffs[1:])
    while p.degree > 0:
        lcm = 1
        for c in p.coeffs:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in p.coeffs]
        found = None
        for q in _divisors(ints[-1]):
            for a in _divisors(ints[0]):
                for cand in (Fraction(a, q), Fraction(-a, q)):
                    if p.eval_exact(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            raise ValueError(f"irrational roots remain in factor {p}")
        roots.append(found)
        p, _ = p.divide_linear(found)
    return sorted(roots)
